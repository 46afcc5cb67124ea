#include "wba/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <utility>

#include "wba/embedding.hpp"
#include "wba/errors.hpp"
#include "wba/half_diagram.hpp"

namespace wba {

QMatrix q_identity(std::size_t n) {
    QMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    if (rows != 0 && a[0].size() != inner)
        throw ShapeMismatch("matrix product shapes do not match");
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    QMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

QMatrix q_kron(const QMatrix& a, const QMatrix& b) {
    const std::size_t ra = a.size(), rb = b.size();
    const std::size_t ca = ra == 0 ? 0 : a[0].size();
    const std::size_t cb = rb == 0 ? 0 : b[0].size();
    QMatrix out(ra * rb, std::vector<Rational>(ca * cb, Rational(0)));
    for (std::size_t ia = 0; ia < ra; ++ia)
        for (std::size_t ja = 0; ja < ca; ++ja) {
            if (a[ia][ja] == 0) continue;
            for (std::size_t ib = 0; ib < rb; ++ib)
                for (std::size_t jb = 0; jb < cb; ++jb)
                    out[ia * rb + ib][ja * cb + jb] = a[ia][ja] * b[ib][jb];
        }
    return out;
}

QMatrix q_scale(const QMatrix& a, const Rational& c) {
    QMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

std::size_t q_rank(QMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (m[row][col] == 0) continue;
            const Rational f = m[row][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t q_nullity(const QMatrix& m) {
    if (m.empty()) return 0;
    return m[0].size() - q_rank(m);
}

namespace {

void fill_tableaux(const Partition& lam, int next, int n, Tableau& cur,
                   std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const std::size_t len = cur[i].size();
        if (static_cast<int>(len) >= lam[i]) continue;
        if (i > 0 && cur[i - 1].size() <= len) continue;
        cur[i].push_back(next);
        fill_tableaux(lam, next + 1, n, cur, out);
        cur[i].pop_back();
    }
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& lam) {
    if (!is_partition(lam)) throw ShapeMismatch("tableau shape must be a partition");
    const int n = partition_size(lam);
    Tableau cur(lam.size());
    std::vector<Tableau> out;
    fill_tableaux(lam, 1, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> all_permutations(int n) {
    if (n < 0) throw RangeError("permutation degree must be nonnegative");
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw ShapeMismatch("permutation degrees differ");
    Perm out(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

namespace {

struct SpechtData {
    std::vector<Tableau> tabs;
    // gens[k] acts as the transposition of letters k+1 and k+2.
    std::vector<QMatrix> gens;
};

std::pair<int, int> locate(const Tableau& t, int letter) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t[i].size(); ++j)
            if (t[i][j] == letter) return {static_cast<int>(i), static_cast<int>(j)};
    throw RangeError("letter missing from tableau");
}

/*
 * Seminormal generator. With d the content difference of the letters
 * k+1 and k+2 read from T, the transposition sends v_T to
 * (1/d) v_T + v_{T'} when d > 0 and to (1/d) v_T + (1 - 1/d^2) v_{T'}
 * when d < 0, where T' swaps the two letters; same-row pairs are fixed
 * and same-column pairs are negated.
 */
const SpechtData& specht_data(const Partition& lam) {
    static std::map<Partition, SpechtData> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;

    SpechtData data;
    data.tabs = standard_tableaux(lam);
    const int n = partition_size(lam);
    const std::size_t f = data.tabs.size();
    for (int k = 1; k < n; ++k) {
        QMatrix m(f, std::vector<Rational>(f, Rational(0)));
        for (std::size_t t = 0; t < f; ++t) {
            const auto [ri, ci] = locate(data.tabs[t], k);
            const auto [rj, cj] = locate(data.tabs[t], k + 1);
            if (ri == rj) {
                m[t][t] = 1;
            } else if (ci == cj) {
                m[t][t] = -1;
            } else {
                const int d = (cj - rj) - (ci - ri);
                Tableau swapped = data.tabs[t];
                swapped[ri][ci] = k + 1;
                swapped[rj][cj] = k;
                const auto pos =
                    std::lower_bound(data.tabs.begin(), data.tabs.end(), swapped);
                const std::size_t t2 = pos - data.tabs.begin();
                const Rational invd = Rational(1) / Rational(d);
                m[t][t] = invd;
                m[t2][t] = d > 0 ? Rational(1) : Rational(1) - invd * invd;
            }
        }
        data.gens.push_back(std::move(m));
    }
    return cache.emplace(lam, std::move(data)).first->second;
}

void require_one_line(const Perm& sigma) {
    Perm sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw ShapeMismatch("one-line array is not a permutation");
}

} // namespace

QMatrix specht_matrix_of(const Partition& lam, const Perm& sigma) {
    if (!is_partition(lam)) throw ShapeMismatch("module label must be a partition");
    if (partition_size(lam) != static_cast<int>(sigma.size()))
        throw ShapeMismatch("permutation degree must equal the partition size");
    require_one_line(sigma);

    static std::map<std::pair<Partition, Perm>, QMatrix> cache;
    static std::mutex cache_mutex;
    const std::pair<Partition, Perm> key{lam, sigma};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const SpechtData& data = specht_data(lam);

    // Right-composing with adjacent swaps sorts the one-line array, so
    // sigma is the product of the recorded swaps in reverse order.
    Perm w = sigma;
    std::vector<int> word;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(static_cast<int>(i));
                moved = true;
            }
    }
    QMatrix m = q_identity(data.tabs.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = q_mul(m, data.gens[*it]);

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(m)).first->second;
}

MatrixRep specht_matrices(int n, const Partition& lam) {
    if (n > 5) throw SizeExceeded("symmetric group matrices limited to degree 5");
    if (partition_size(lam) != n) throw ShapeMismatch("partition size must equal the degree");
    MatrixRep rep;
    rep.dimension = standard_tableaux(lam).size();
    for (const Perm& sigma : all_permutations(n))
        rep.images.push_back(specht_matrix_of(lam, sigma));
    return rep;
}

QMatrix cell_matrix_of(int r, int s, const CellLabel& cell, const WalledDiagram& d,
                       const Rational& delta0) {
    require_cell(r, s, cell);
    if (d.r != r || d.s != s) throw SizeMismatch("diagram does not act on this algebra");
    require_generic_delta(delta0);

    const auto halves = enumerate_half(r, s, cell.l);
    const auto tabs_l = standard_tableaux(cell.lamL);
    const auto tabs_r = standard_tableaux(cell.lamR);
    const std::size_t np = tabs_l.size(), nq = tabs_r.size();
    const std::size_t dim = halves.size() * np * nq;

    QMatrix m(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t iv = 0; iv < halves.size(); ++iv) {
        const auto res = act(d, halves[iv]);
        if (!res) continue;
        const auto pos =
            std::lower_bound(halves.begin(), halves.end(), res->image, HalfLess{});
        const std::size_t iw = pos - halves.begin();
        Rational dp(1);
        for (long k = 0; k < res->loops; ++k) dp *= delta0;
        const QMatrix ml = specht_matrix_of(cell.lamL, res->left_map);
        const QMatrix mr = specht_matrix_of(cell.lamR, res->right_map);
        for (std::size_t ip = 0; ip < np; ++ip)
            for (std::size_t iq = 0; iq < nq; ++iq) {
                const std::size_t col = (iv * np + ip) * nq + iq;
                for (std::size_t ip2 = 0; ip2 < np; ++ip2) {
                    if (ml[ip2][ip] == 0) continue;
                    for (std::size_t iq2 = 0; iq2 < nq; ++iq2) {
                        if (mr[iq2][iq] == 0) continue;
                        const std::size_t row = (iw * np + ip2) * nq + iq2;
                        m[row][col] += dp * ml[ip2][ip] * mr[iq2][iq];
                    }
                }
            }
    }
    return m;
}

MatrixRep cell_module_matrices(int r, int s, const CellLabel& cell, const Rational& delta0) {
    if (r + s > 4) throw SizeExceeded("cell module matrices limited to r + s <= 4");
    MatrixRep rep;
    rep.dimension = cell_dim(r, s, cell);
    for (const auto& d : enumerate_basis(r, s))
        rep.images.push_back(cell_matrix_of(r, s, cell, d, delta0));
    return rep;
}

MatrixRep pair_rep(const MatrixRep& a, const MatrixRep& b) {
    MatrixRep out;
    out.dimension = a.dimension * b.dimension;
    out.images.reserve(a.images.size() * b.images.size());
    for (const QMatrix& ma : a.images)
        for (const QMatrix& mb : b.images) out.images.push_back(q_kron(ma, mb));
    return out;
}

std::size_t hom_space_dim(const MatrixRep& a, const MatrixRep& b) {
    if (a.images.size() != b.images.size())
        throw BasisMismatch("representations are over different algebra bases");
    const std::size_t da = a.dimension, db = b.dimension;
    const std::size_t vars = da * db;
    if (vars == 0) return 0;

    // Unknown T of size db x da, entry (u, v) at index u * da + v.
    QMatrix sys;
    sys.reserve(a.images.size() * vars);
    for (std::size_t g = 0; g < a.images.size(); ++g) {
        const QMatrix& ag = a.images[g];
        const QMatrix& bg = b.images[g];
        if (ag.size() != da || bg.size() != db)
            throw ShapeMismatch("image size does not match its representation dimension");
        for (std::size_t u = 0; u < db; ++u)
            for (std::size_t w = 0; w < da; ++w) {
                std::vector<Rational> row(vars, Rational(0));
                for (std::size_t v = 0; v < da; ++v) row[u * da + v] += ag[v][w];
                for (std::size_t v = 0; v < db; ++v) row[v * da + w] -= bg[u][v];
                sys.push_back(std::move(row));
            }
    }
    return q_nullity(sys);
}

std::map<CellPair, long long, CellPairLess> brute_restriction(const SplitShape& shape,
                                                              const CellLabel& cell,
                                                              const Rational& delta0) {
    const int r = shape.r(), s = shape.s();
    if (r + s > 4) throw SizeExceeded("oracle restriction limited to r + s <= 4");
    require_cell(r, s, cell);
    require_generic_delta(delta0);

    const auto basis1 = enumerate_basis(shape.r1, shape.s1);
    const auto basis2 = enumerate_basis(shape.r2, shape.s2);

    MatrixRep res;
    res.dimension = cell_dim(r, s, cell);
    res.images.reserve(basis1.size() * basis2.size());
    for (const auto& d1 : basis1)
        for (const auto& d2 : basis2)
            res.images.push_back(cell_matrix_of(r, s, cell, twisted_tensor(d1, d2), delta0));

    std::map<CellPair, long long, CellPairLess> out;
    for (const auto& c1 : enumerate_cells(shape.r1, shape.s1)) {
        const MatrixRep rep1 = cell_module_matrices(shape.r1, shape.s1, c1, delta0);
        for (const auto& c2 : enumerate_cells(shape.r2, shape.s2)) {
            const MatrixRep rep2 = cell_module_matrices(shape.r2, shape.s2, c2, delta0);
            const std::size_t mult = hom_space_dim(pair_rep(rep1, rep2), res);
            if (mult != 0) out[{c1, c2}] = static_cast<long long>(mult);
        }
    }
    return out;
}

} // namespace wba
