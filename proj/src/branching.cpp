#include "wba/branching.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "wba/errors.hpp"

namespace wba {

bool SplitShape::operator<(const SplitShape& o) const {
    return std::tie(r1, s1, r2, s2) < std::tie(o.r1, o.s1, o.r2, o.s2);
}

bool TupleLess::operator()(const ArcTuple& a, const ArcTuple& b) const {
    if (a.ac != b.ac) return a.ac < b.ac;
    if (a.bd != b.bd) return a.bd < b.bd;
    if (a.ad != b.ad) return a.ad > b.ad;
    return a.bc > b.bc;
}

bool tuple_feasible(const SplitShape& shape, const ArcTuple& t) {
    if (t.ac < 0 || t.bd < 0 || t.ad < 0 || t.bc < 0) return false;
    return t.ad + t.ac <= shape.r1 && t.bc + t.bd <= shape.r2 && t.ad + t.bd <= shape.s1 &&
           t.bc + t.ac <= shape.s2;
}

std::vector<ArcTuple> enumerate_tuples(const SplitShape& shape, int l) {
    if (shape.r1 < 0 || shape.s1 < 0 || shape.r2 < 0 || shape.s2 < 0)
        throw RangeError("split shape entries must be nonnegative");
    if (l < 0 || l > std::min(shape.r(), shape.s()))
        throw RangeError("arc total out of range for the split shape");
    std::vector<ArcTuple> out;
    for (int ac = 0; ac <= l; ++ac)
        for (int bd = 0; ac + bd <= l; ++bd)
            for (int ad = 0; ac + bd + ad <= l; ++ad) {
                ArcTuple t{ac, bd, ad, l - ac - bd - ad};
                if (tuple_feasible(shape, t)) out.push_back(t);
            }
    std::sort(out.begin(), out.end(), TupleLess{});
    return out;
}

unsigned long long count_double_walled(const SplitShape& shape, const ArcTuple& t) {
    if (!tuple_feasible(shape, t))
        throw InfeasibleTuple("tuple (" + std::to_string(t.ac) + ", " + std::to_string(t.bd) +
                              ", " + std::to_string(t.ad) + ", " + std::to_string(t.bc) +
                              ") violates a block capacity");
    return binomial(shape.r1, t.ad) * binomial(shape.r1 - t.ad, t.ac) *
           binomial(shape.s1, t.ad) * binomial(shape.s1 - t.ad, t.bd) *
           binomial(shape.r2, t.bc) * binomial(shape.r2 - t.bc, t.bd) *
           binomial(shape.s2, t.bc) * binomial(shape.s2 - t.bc, t.ac) * factorial_ull(t.ad) *
           factorial_ull(t.bc) * factorial_ull(t.ac) * factorial_ull(t.bd);
}

ArcTuple tuple_of(const SplitShape& shape, const HalfDiagram& v) {
    if (v.r != shape.r() || v.s != shape.s())
        throw ShapeMismatch("half diagram does not match the split shape");
    ArcTuple t;
    const int r = shape.r();
    for (const auto& [a, b] : v.arcs) {
        const bool in_a = a <= shape.r1;
        const bool in_c = b <= r + shape.s2;
        if (in_a && in_c)
            ++t.ac;
        else if (in_a)
            ++t.ad;
        else if (in_c)
            ++t.bc;
        else
            ++t.bd;
    }
    return t;
}

bool CellLess::operator()(const CellLabel& a, const CellLabel& b) const {
    if (a.l != b.l) return a.l < b.l;
    if (a.lamL != b.lamL) return a.lamL < b.lamL;
    return a.lamR < b.lamR;
}

bool CellPairLess::operator()(const CellPair& a, const CellPair& b) const {
    CellLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

void require_cell(int r, int s, const CellLabel& cell) {
    if (cell.l < 0 || cell.l > std::min(r, s))
        throw ShapeMismatch("cell arc count " + std::to_string(cell.l) +
                            " out of range for (" + std::to_string(r) + ", " +
                            std::to_string(s) + ")");
    if (!is_partition(cell.lamL) || !is_partition(cell.lamR))
        throw ShapeMismatch("cell labels must be partitions");
    if (partition_size(cell.lamL) != r - cell.l || partition_size(cell.lamR) != s - cell.l)
        throw ShapeMismatch("cell partition sizes must be r - l and s - l");
}

std::vector<CellLabel> enumerate_cells(int r, int s) {
    if (r < 0 || s < 0) throw RangeError("algebra sizes must be nonnegative");
    std::vector<CellLabel> out;
    for (int l = 0; l <= std::min(r, s); ++l)
        for (const auto& lamL : partitions_of(r - l))
            for (const auto& lamR : partitions_of(s - l)) out.push_back({l, lamL, lamR});
    std::sort(out.begin(), out.end(), CellLess{});
    return out;
}

unsigned long long cell_dim(int r, int s, const CellLabel& cell) {
    require_cell(r, s, cell);
    return half_dim(r, s, cell.l) * syt_count(cell.lamL) * syt_count(cell.lamR);
}

std::map<CellPair, long long, CellPairLess> restriction_multiset(const SplitShape& shape,
                                                                 const CellLabel& cell) {
    const int r = shape.r(), s = shape.s();
    require_cell(r, s, cell);

    std::map<CellPair, long long, CellPairLess> terms;
    for (const ArcTuple& t : enumerate_tuples(shape, cell.l)) {
        // Free-dot block sizes after removing the arcs of this type.
        const int a1 = shape.r1 - t.ad - t.ac;
        const int d1 = shape.s1 - t.ad - t.bd;
        const int b1 = shape.r2 - t.bc - t.bd;
        const int c1 = shape.s2 - t.bc - t.ac;

        for (const Partition& lam1L : partitions_of(a1))
            for (const Partition& lam2L : partitions_of(b1)) {
                const long long cL = lr_coefficient(lam1L, lam2L, cell.lamL);
                if (cL == 0) continue;
                for (const Partition& lam2R : partitions_of(d1))
                    for (const Partition& lam1R : partitions_of(c1)) {
                        const long long cR = lr_coefficient(lam2R, lam1R, cell.lamR);
                        if (cR == 0) continue;
                        for (const Partition& mu1 : partitions_of(t.ac))
                            for (const Partition& mu2 : partitions_of(t.bd))
                                for (const Partition& nu1L : partitions_of(shape.r1 - t.ad)) {
                                    const long long e1 = lr_coefficient(lam1L, mu1, nu1L);
                                    if (e1 == 0) continue;
                                    for (const Partition& nu1R :
                                         partitions_of(shape.s1 - t.ad)) {
                                        const long long e2 = lr_coefficient(lam2R, mu2, nu1R);
                                        if (e2 == 0) continue;
                                        for (const Partition& nu2L :
                                             partitions_of(shape.r2 - t.bc)) {
                                            const long long e3 =
                                                lr_coefficient(lam2L, mu2, nu2L);
                                            if (e3 == 0) continue;
                                            for (const Partition& nu2R :
                                                 partitions_of(shape.s2 - t.bc)) {
                                                const long long e4 =
                                                    lr_coefficient(lam1R, mu1, nu2R);
                                                if (e4 == 0) continue;
                                                CellPair key{{t.ad, nu1L, nu1R},
                                                             {t.bc, nu2L, nu2R}};
                                                terms[key] += cL * cR * e1 * e2 * e3 * e4;
                                            }
                                        }
                                    }
                                }
                    }
            }
    }
    return terms;
}

std::vector<RestrictionTerm> restriction_terms(const SplitShape& shape, const CellLabel& cell) {
    std::vector<RestrictionTerm> out;
    for (const auto& [key, mult] : restriction_multiset(shape, cell))
        out.push_back({key.first, key.second, mult});
    return out;
}

} // namespace wba
