#include "wba/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "wba/errors.hpp"
#include "wba/rational.hpp"

namespace wba {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

namespace {

void require_partition(const Partition& p, const char* what) {
    if (!is_partition(p))
        throw RangeError(std::string(what) + " is not a weakly decreasing positive vector");
}

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex memo_mutex;

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw RangeError("partitions of a negative integer requested");
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<unsigned long long>(n - i) / (i + 1);
    return c;
}

unsigned long long factorial_ull(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

unsigned long long syt_count(const Partition& shape) {
    require_partition(shape, "shape");
    const int n = partition_size(shape);
    mpz_class numer;
    mpz_fac_ui(numer.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class hooks(1);
    const int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows && shape[k] > j; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    mpz_class f = numer / hooks;
    return f.get_ui();
}

namespace {

// Counts the lattice skew fillings row by row, within a row right to left,
// so the reverse reading word constraints can be checked incrementally.
long long count_lr_fillings(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int rows = static_cast<int>(nu.size());
    const int m = static_cast<int>(mu.size());
    std::vector<int> lam_pad(rows, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) lam_pad[i] = lam[i];
    for (int i = 0; i < rows; ++i)
        if (lam_pad[i] > nu[i]) return 0;

    // Cell list in fill order.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = nu[i] - 1; j >= lam_pad[i]; --j) cells.emplace_back(i, j);
    if (cells.empty()) return 1;

    std::vector<std::vector<int>> grid(rows);
    for (int i = 0; i < rows; ++i) grid[i].assign(nu[i], 0);
    std::vector<int> counts(m + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= m; ++v) {
            if (counts[v] >= mu[v - 1]) continue;
            if (v > 1 && counts[v] >= counts[v - 1]) continue;
            if (j + 1 < nu[i] && v > grid[i][j + 1]) continue;
            if (i > 0 && j >= lam_pad[i - 1] && v <= grid[i - 1][j]) continue;
            grid[i][j] = v;
            ++counts[v];
            self(self, idx + 1);
            --counts[v];
            grid[i][j] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

using Triple = std::array<Partition, 3>;

} // namespace

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    require_partition(lam, "lam");
    require_partition(mu, "mu");
    require_partition(nu, "nu");
    if (partition_size(lam) + partition_size(mu) != partition_size(nu)) return 0;

    static std::map<Triple, long long> cache;
    Triple key{lam, mu, nu};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long value = count_lr_fillings(lam, mu, nu);
    std::lock_guard<std::mutex> lock(memo_mutex);
    cache.emplace(std::move(key), value);
    return value;
}

namespace {

long long mn_rec(const Partition& lam, const Partition& rho,
                 std::map<std::pair<Partition, Partition>, long long>& cache) {
    if (lam.empty()) return 1;
    auto key = std::make_pair(lam, rho);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int k = rho.front();
    Partition rest(rho.begin() + 1, rho.end());
    const int m = static_cast<int>(lam.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lam[i] + (m - 1 - i);

    long long total = 0;
    for (int i = 0; i < m; ++i) {
        int b = beta[i] - k;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < m; ++j)
            if (beta[j] > b && beta[j] < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        Partition next(m);
        for (int j = 0; j < m; ++j) next[j] = nb[j] - (m - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        long long sub = mn_rec(next, rest, cache);
        total += (height % 2 == 0) ? sub : -sub;
    }
    cache.emplace(std::move(key), total);
    return total;
}

} // namespace

long long mn_character(const Partition& lam, const Partition& rho) {
    require_partition(lam, "lam");
    require_partition(rho, "rho");
    if (partition_size(lam) != partition_size(rho))
        throw RangeError("character argument sizes differ");
    static std::map<std::pair<Partition, Partition>, long long> cache;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return mn_rec(lam, rho, cache);
}

unsigned long long centralizer_order(const Partition& rho) {
    require_partition(rho, "rho");
    unsigned long long z = 1;
    std::size_t i = 0;
    while (i < rho.size()) {
        std::size_t j = i;
        while (j < rho.size() && rho[j] == rho[i]) ++j;
        unsigned long long mult = j - i;
        for (unsigned long long t = 0; t < mult; ++t)
            z *= static_cast<unsigned long long>(rho[i]);
        z *= factorial_ull(static_cast<int>(mult));
        i = j;
    }
    return z;
}

long long lr_via_characters(const Partition& lam, const Partition& mu, const Partition& nu) {
    require_partition(lam, "lam");
    require_partition(mu, "mu");
    require_partition(nu, "nu");
    const int a = partition_size(lam), b = partition_size(mu);
    if (a + b != partition_size(nu)) return 0;

    Rational total(0);
    for (const Partition& alpha : partitions_of(a))
        for (const Partition& beta : partitions_of(b)) {
            Partition joint;
            joint.reserve(alpha.size() + beta.size());
            joint.insert(joint.end(), alpha.begin(), alpha.end());
            joint.insert(joint.end(), beta.begin(), beta.end());
            std::sort(joint.begin(), joint.end(), std::greater<int>());
            long long prod = mn_character(nu, joint) * mn_character(lam, alpha) *
                             mn_character(mu, beta);
            if (prod == 0) continue;
            Rational z(static_cast<long>(centralizer_order(alpha)) *
                       static_cast<long>(centralizer_order(beta)));
            total += Rational(static_cast<long>(prod)) / z;
        }
    if (total.get_den() != 1)
        throw RangeError("character inner product is not an integer");
    return static_cast<long long>(total.get_num().get_si());
}

Partition cycle_type_of(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    Partition type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, cur = i;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = p[cur];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

} // namespace wba
