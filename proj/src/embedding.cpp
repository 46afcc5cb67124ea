#include "wba/embedding.hpp"

#include <string>

#include "wba/errors.hpp"

namespace wba {

namespace {

// Applies a column relabeling to both rows and appends vertical strands
// at the listed new columns.
WalledDiagram relabel_with_strands(const WalledDiagram& d, int new_r, int new_s,
                                   const std::vector<int>& column_map,
                                   const std::vector<int>& strand_columns) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(new_r + new_s));
    auto mapped = [&column_map](int dot) {
        int col = dot > 0 ? dot : -dot;
        int to = column_map[static_cast<std::size_t>(col)];
        return dot > 0 ? to : -to;
    };
    for (const auto& [a, b] : d.pairs) pairs.emplace_back(mapped(a), mapped(b));
    for (int col : strand_columns) pairs.emplace_back(col, -col);
    return validate(new_r, new_s, pairs);
}

} // namespace

WalledDiagram iota(const WalledDiagram& d, int n, int m) {
    if (n < 0 || m < 0) throw RangeError("embedding sizes must be nonnegative");
    const int r = d.r, s = d.s;
    std::vector<int> column_map(static_cast<std::size_t>(r + s) + 1, 0);
    for (int i = 1; i <= r; ++i) column_map[static_cast<std::size_t>(i)] = i;
    for (int j = 1; j <= s; ++j)
        column_map[static_cast<std::size_t>(r + j)] = r + n + m + j;
    std::vector<int> strands;
    for (int c = r + 1; c <= r + n + m; ++c) strands.push_back(c);
    return relabel_with_strands(d, r + n, s + m, column_map, strands);
}

WalledDiagram zeta(const WalledDiagram& d, int r, int s) {
    if (r < 0 || s < 0) throw RangeError("embedding sizes must be nonnegative");
    const int n = d.r, m = d.s;
    std::vector<int> column_map(static_cast<std::size_t>(n + m) + 1, 0);
    for (int i = 1; i <= n; ++i) column_map[static_cast<std::size_t>(i)] = r + i;
    for (int j = 1; j <= m; ++j) column_map[static_cast<std::size_t>(n + j)] = r + n + j;
    std::vector<int> strands;
    for (int c = 1; c <= r; ++c) strands.push_back(c);
    for (int c = r + n + m + 1; c <= r + n + m + s; ++c) strands.push_back(c);
    return relabel_with_strands(d, r + n, s + m, column_map, strands);
}

AlgebraElement iota(const AlgebraElement& x, int n, int m) {
    AlgebraElement out = algebra_zero(x.r + n, x.s + m);
    for (const auto& [d, c] : x.terms) out.terms[iota(d, n, m)] = c;
    return out;
}

AlgebraElement zeta(const AlgebraElement& x, int r, int s) {
    AlgebraElement out = algebra_zero(r + x.r, s + x.s);
    for (const auto& [d, c] : x.terms) out.terms[zeta(d, r, s)] = c;
    return out;
}

WalledDiagram twisted_tensor(const WalledDiagram& a, const WalledDiagram& b) {
    const int r = a.r, s = a.s, n = b.r, m = b.s;

    // Direct block placement: a's columns stay outer, b's columns sit in
    // the middle straddling the wall.
    std::vector<std::pair<int, int>> pairs;
    auto map_a = [r, s, n, m](int dot) {
        int col = dot > 0 ? dot : -dot;
        int to = col <= r ? col : col + n + m;
        return dot > 0 ? to : -to;
    };
    auto map_b = [r, n](int dot) {
        int col = dot > 0 ? dot : -dot;
        int to = r + col;
        return dot > 0 ? to : -to;
    };
    for (const auto& [x, y] : a.pairs) pairs.emplace_back(map_a(x), map_a(y));
    for (const auto& [x, y] : b.pairs) pairs.emplace_back(map_b(x), map_b(y));
    WalledDiagram direct = validate(r + n, s + m, pairs);

    // The same diagram must arise by stacking the two embeddings, with no
    // closed loops.
    ConcatResult glued = concat(iota(a, n, m), zeta(b, r, s));
    if (glued.loops != 0 || !(glued.diagram == direct))
        throw ShapeMismatch("twisted tensor construction mismatch");
    return direct;
}

AlgebraElement embed_rho(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out = algebra_zero(x.r + y.r, x.s + y.s);
    for (const auto& [da, ca] : x.terms)
        for (const auto& [db, cb] : y.terms) {
            WalledDiagram d = twisted_tensor(da, db);
            Laurent coeff = ca * cb;
            auto it = out.terms.find(d);
            if (it == out.terms.end()) {
                if (!coeff.is_zero()) out.terms[d] = coeff;
            } else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    return out;
}

} // namespace wba
