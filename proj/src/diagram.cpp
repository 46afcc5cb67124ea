#include "wba/diagram.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "wba/errors.hpp"

namespace wba {

namespace {

// Total order on dots: 1 < ... < n < -1 < ... < -n, as an index in [0, 2n).
int dot_key(int dot, int n) {
    return dot > 0 ? dot - 1 : n + (-dot) - 1;
}

int key_to_dot(int key, int n) {
    return key < n ? key + 1 : -(key - n + 1);
}

bool left_of_wall(int dot, int r) {
    return (dot > 0 ? dot : -dot) <= r;
}

std::pair<int, int> canonical_pair(int a, int b, int n) {
    if (dot_key(a, n) > dot_key(b, n)) std::swap(a, b);
    return {a, b};
}

void sort_pairs(std::vector<std::pair<int, int>>& pairs, int n) {
    std::sort(pairs.begin(), pairs.end(),
              [n](const std::pair<int, int>& x, const std::pair<int, int>& y) {
                  int xa = dot_key(x.first, n), ya = dot_key(y.first, n);
                  if (xa != ya) return xa < ya;
                  return dot_key(x.second, n) < dot_key(y.second, n);
              });
}

// Partner array indexed by dot key; -1 marks an unmatched dot.
std::vector<int> partner_array(const WalledDiagram& d) {
    std::vector<int> partner(2 * d.n(), -1);
    for (const auto& [a, b] : d.pairs) {
        partner[dot_key(a, d.n())] = dot_key(b, d.n());
        partner[dot_key(b, d.n())] = dot_key(a, d.n());
    }
    return partner;
}

} // namespace

bool DiagramLess::operator()(const WalledDiagram& a, const WalledDiagram& b) const {
    if (a.r != b.r) return a.r < b.r;
    if (a.s != b.s) return a.s < b.s;
    const int n = a.n();
    const std::size_t m = std::min(a.pairs.size(), b.pairs.size());
    for (std::size_t i = 0; i < m; ++i) {
        int ka = dot_key(a.pairs[i].first, n), kb = dot_key(b.pairs[i].first, n);
        if (ka != kb) return ka < kb;
        ka = dot_key(a.pairs[i].second, n);
        kb = dot_key(b.pairs[i].second, n);
        if (ka != kb) return ka < kb;
    }
    return a.pairs.size() < b.pairs.size();
}

WalledDiagram validate(int r, int s, const std::vector<std::pair<int, int>>& pairing) {
    if (r < 0 || s < 0) throw RangeError("diagram sizes must be nonnegative");
    const int n = r + s;
    std::vector<int> seen(2 * n, 0);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairing.size());
    for (auto [a, b] : pairing) {
        for (int dot : {a, b}) {
            int mag = dot > 0 ? dot : -dot;
            if (dot == 0 || mag > n)
                throw RangeError("dot " + std::to_string(dot) + " out of range for n = " +
                                 std::to_string(n));
        }
        if (a == b) throw NotAMatching("dot " + std::to_string(a) + " matched with itself");
        const bool same_row = (a > 0) == (b > 0);
        const bool crosses = left_of_wall(a, r) != left_of_wall(b, r);
        if (same_row && !crosses)
            throw WallViolation("same-row edge (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") does not cross the wall");
        if (!same_row && crosses)
            throw WallViolation("propagating edge (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") crosses the wall");
        for (int dot : {a, b}) {
            int k = dot_key(dot, n);
            if (seen[k]++)
                throw NotAMatching("dot " + std::to_string(dot) + " used more than once");
        }
        pairs.push_back(canonical_pair(a, b, n));
    }
    if (static_cast<int>(pairs.size()) * 2 != 2 * n)
        throw NotAMatching("pairing covers " + std::to_string(pairs.size() * 2) +
                           " dots, expected " + std::to_string(2 * n));
    sort_pairs(pairs, n);
    return WalledDiagram{r, s, std::move(pairs)};
}

WalledDiagram identity_diagram(int r, int s) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= r + s; ++i) pairs.emplace_back(i, -i);
    return WalledDiagram{r, s, std::move(pairs)};
}

ConcatResult concat(const WalledDiagram& a, const WalledDiagram& b) {
    if (a.r != b.r || a.s != b.s)
        throw SizeMismatch("cannot stack diagrams with different (r, s)");
    const int n = a.n();

    // Nodes 0..n-1: a's top row. Nodes n..2n-1: the glued middle row.
    // Nodes 2n..3n-1: b's bottom row. Middle nodes carry one edge from a
    // and one from b; outer nodes carry exactly one edge.
    std::vector<std::array<int, 2>> adj(3 * n, {-1, -1});
    auto add_edge = [&adj](int u, int v) {
        adj[u][adj[u][0] < 0 ? 0 : 1] = v;
        adj[v][adj[v][0] < 0 ? 0 : 1] = u;
    };
    for (const auto& [x, y] : a.pairs) {
        int u = x > 0 ? x - 1 : n + (-x) - 1;
        int v = y > 0 ? y - 1 : n + (-y) - 1;
        add_edge(u, v);
    }
    for (const auto& [x, y] : b.pairs) {
        int u = x > 0 ? n + x - 1 : 2 * n + (-x) - 1;
        int v = y > 0 ? n + y - 1 : 2 * n + (-y) - 1;
        add_edge(u, v);
    }

    std::vector<char> visited(3 * n, 0);
    std::vector<std::pair<int, int>> pairs;
    auto outer_dot = [n](int node) { return node < n ? node + 1 : -(node - 2 * n + 1); };

    // Walk each path from its outer endpoint to the opposite endpoint.
    for (int start = 0; start < 3 * n; ++start) {
        if (visited[start]) continue;
        if (start >= n && start < 2 * n) continue;
        visited[start] = 1;
        int prev = -1, cur = start;
        while (true) {
            int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            visited[cur] = 1;
            if (cur < n || cur >= 2 * n) break;
        }
        pairs.push_back(canonical_pair(outer_dot(start), outer_dot(cur), n));
    }

    // Unvisited middle nodes lie on closed curves.
    long loops = 0;
    for (int start = n; start < 2 * n; ++start) {
        if (visited[start]) continue;
        ++loops;
        int prev = -1, cur = start;
        while (!visited[cur]) {
            visited[cur] = 1;
            int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
    }

    sort_pairs(pairs, n);
    return ConcatResult{loops, WalledDiagram{a.r, a.s, std::move(pairs)}};
}

int propagating_count(const WalledDiagram& d) {
    int count = 0;
    for (const auto& [a, b] : d.pairs)
        if ((a > 0) != (b > 0)) ++count;
    return count;
}

int top_arc_count(const WalledDiagram& d) {
    int count = 0;
    for (const auto& [a, b] : d.pairs)
        if (a > 0 && b > 0) ++count;
    return count;
}

WalledDiagram involution_star(const WalledDiagram& d) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(d.pairs.size());
    for (const auto& [a, b] : d.pairs) pairs.push_back(canonical_pair(-a, -b, d.n()));
    sort_pairs(pairs, d.n());
    return WalledDiagram{d.r, d.s, std::move(pairs)};
}

namespace {

// Size-k subsets of {from, ..., to} in lexicographic order.
std::vector<std::vector<int>> subsets(int from, int to, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= to; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, from);
    return out;
}

std::vector<std::vector<int>> permutations_of(const std::vector<int>& items) {
    std::vector<std::vector<int>> out;
    std::vector<int> p = items;
    std::sort(p.begin(), p.end());
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

unsigned long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<unsigned long long>(n - i) / (i + 1);
    return c;
}

} // namespace

std::vector<WalledDiagram> enumerate_basis(int r, int s, int bound) {
    if (r < 0 || s < 0) throw RangeError("diagram sizes must be nonnegative");
    if (r + s > bound)
        throw BoundExceeded("basis enumeration for r + s = " + std::to_string(r + s) +
                            " exceeds bound " + std::to_string(bound));
    std::vector<WalledDiagram> basis;
    for (int l = 0; l <= std::min(r, s); ++l) {
        auto top_left = subsets(1, r, l);
        auto top_right = subsets(r + 1, r + s, l);
        auto bot_left = subsets(1, r, l);
        auto bot_right = subsets(r + 1, r + s, l);
        for (const auto& tl : top_left)
            for (const auto& tr0 : top_right)
                for (const auto& tr : permutations_of(tr0))
                    for (const auto& bl : bot_left)
                        for (const auto& br0 : bot_right)
                            for (const auto& br : permutations_of(br0)) {
                                // Free dots, per side, in increasing position.
                                std::vector<int> ftl, ftr, fbl, fbr;
                                for (int i = 1; i <= r; ++i)
                                    if (!std::binary_search(tl.begin(), tl.end(), i))
                                        ftl.push_back(i);
                                for (int i = r + 1; i <= r + s; ++i)
                                    if (std::find(tr.begin(), tr.end(), i) == tr.end())
                                        ftr.push_back(i);
                                for (int i = 1; i <= r; ++i)
                                    if (!std::binary_search(bl.begin(), bl.end(), i))
                                        fbl.push_back(i);
                                for (int i = r + 1; i <= r + s; ++i)
                                    if (std::find(br.begin(), br.end(), i) == br.end())
                                        fbr.push_back(i);
                                for (const auto& pl : permutations_of(fbl))
                                    for (const auto& pr : permutations_of(fbr)) {
                                        std::vector<std::pair<int, int>> pairs;
                                        for (int i = 0; i < l; ++i) {
                                            pairs.emplace_back(tl[i], tr[i]);
                                            pairs.emplace_back(-bl[i], -br[i]);
                                        }
                                        for (std::size_t i = 0; i < ftl.size(); ++i)
                                            pairs.emplace_back(ftl[i], -pl[i]);
                                        for (std::size_t i = 0; i < ftr.size(); ++i)
                                            pairs.emplace_back(ftr[i], -pr[i]);
                                        basis.push_back(validate(r, s, pairs));
                                    }
                            }
    }
    std::sort(basis.begin(), basis.end(), DiagramLess{});
    return basis;
}

unsigned long long basis_count(int r, int s) {
    unsigned long long total = 0;
    for (int l = 0; l <= std::min(r, s); ++l) {
        unsigned long long row = choose(r, l) * choose(s, l) * factorial(l);
        total += row * row * factorial(r - l) * factorial(s - l);
    }
    return total;
}

AlgebraElement to_element(const WalledDiagram& d, const Laurent& coeff) {
    AlgebraElement e;
    e.r = d.r;
    e.s = d.s;
    if (!coeff.is_zero()) e.terms[d] = coeff;
    return e;
}

AlgebraElement algebra_zero(int r, int s) {
    AlgebraElement e;
    e.r = r;
    e.s = s;
    return e;
}

AlgebraElement algebra_one(int r, int s) { return to_element(identity_diagram(r, s)); }

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.r != b.r || a.s != b.s) throw SizeMismatch("cannot add elements of different (r, s)");
    AlgebraElement out = a;
    for (const auto& [d, c] : b.terms) {
        auto it = out.terms.find(d);
        if (it == out.terms.end()) {
            if (!c.is_zero()) out.terms[d] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms.erase(it);
        }
    }
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Laurent& c) {
    AlgebraElement out = algebra_zero(a.r, a.s);
    if (c.is_zero()) return out;
    for (const auto& [d, k] : a.terms) out.terms[d] = k * c;
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.r != b.r || a.s != b.s)
        throw SizeMismatch("cannot multiply elements of different (r, s)");
    AlgebraElement out = algebra_zero(a.r, a.s);
    for (const auto& [da, ca] : a.terms)
        for (const auto& [db, cb] : b.terms) {
            ConcatResult stacked = concat(da, db);
            Laurent coeff = ca * cb * Laurent::delta_power(stacked.loops);
            auto it = out.terms.find(stacked.diagram);
            if (it == out.terms.end()) {
                if (!coeff.is_zero()) out.terms[stacked.diagram] = coeff;
            } else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    return out;
}

AlgebraElement involution_star(const AlgebraElement& a) {
    AlgebraElement out = algebra_zero(a.r, a.s);
    for (const auto& [d, c] : a.terms) out.terms[involution_star(d)] = c;
    return out;
}

} // namespace wba
