#include "wba/grothendieck.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "wba/errors.hpp"

namespace wba {

int cell_r(const CellLabel& cell) { return cell.l + partition_size(cell.lamL); }

int cell_s(const CellLabel& cell) { return cell.l + partition_size(cell.lamR); }

GrothClass class_of(const CellLabel& cell) {
    require_cell(cell_r(cell), cell_s(cell), cell);
    return {{cell, 1}};
}

/*
 * Product of basis classes. The two arc counts are forced: the factors
 * contribute nu1.l arcs between their own blocks and nu2.l likewise.
 * Only the two cross-factor counts t_ac and t_bd vary. The partitions
 * mu1 and mu2 label the symmetric group factors permuting those arcs,
 * lam1L/lam1R/lam2L/lam2R the free-dot factors, and the final pair of
 * coefficients glues the left and the right free blocks together.
 */
GrothClass structure_constants(const CellLabel& nu1, const CellLabel& nu2) {
    const int r1 = cell_r(nu1), s1 = cell_s(nu1);
    const int r2 = cell_r(nu2), s2 = cell_s(nu2);
    require_cell(r1, s1, nu1);
    require_cell(r2, s2, nu2);

    static std::map<CellPair, GrothClass, CellPairLess> memo;
    static std::mutex memo_mutex;
    const CellPair key{nu1, nu2};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    GrothClass out;
    for (int tac = 0; tac <= std::min(r1 - nu1.l, s2 - nu2.l); ++tac)
        for (int tbd = 0; tbd <= std::min(s1 - nu1.l, r2 - nu2.l); ++tbd) {
            const int l = nu1.l + nu2.l + tac + tbd;
            for (const Partition& mu1 : partitions_of(tac))
                for (const Partition& mu2 : partitions_of(tbd))
                    for (const Partition& lam1L : partitions_of(r1 - nu1.l - tac)) {
                        const long long f1 = lr_coefficient(lam1L, mu1, nu1.lamL);
                        if (f1 == 0) continue;
                        for (const Partition& lam2R : partitions_of(s1 - nu1.l - tbd)) {
                            const long long f2 = lr_coefficient(lam2R, mu2, nu1.lamR);
                            if (f2 == 0) continue;
                            for (const Partition& lam2L : partitions_of(r2 - nu2.l - tbd)) {
                                const long long f3 = lr_coefficient(lam2L, mu2, nu2.lamL);
                                if (f3 == 0) continue;
                                for (const Partition& lam1R : partitions_of(s2 - nu2.l - tac)) {
                                    const long long f4 = lr_coefficient(lam1R, mu1, nu2.lamR);
                                    if (f4 == 0) continue;
                                    const long long base = f1 * f2 * f3 * f4;
                                    for (const Partition& lamL :
                                         partitions_of(r1 + r2 - l)) {
                                        const long long cL =
                                            lr_coefficient(lam1L, lam2L, lamL);
                                        if (cL == 0) continue;
                                        for (const Partition& lamR :
                                             partitions_of(s1 + s2 - l)) {
                                            const long long cR =
                                                lr_coefficient(lam2R, lam1R, lamR);
                                            if (cR == 0) continue;
                                            out[{l, lamL, lamR}] += base * cL * cR;
                                        }
                                    }
                                }
                            }
                        }
                    }
        }

    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(key, std::move(out)).first->second;
}

GrothClass ring_multiply(const GrothClass& a, const GrothClass& b) {
    GrothClass out;
    for (const auto& [c1, k1] : a)
        for (const auto& [c2, k2] : b)
            for (const auto& [nu, c] : structure_constants(c1, c2)) {
                auto it = out.emplace(nu, 0).first;
                it->second += k1 * k2 * c;
                if (it->second == 0) out.erase(it);
            }
    return out;
}

} // namespace wba
