#include "wba/verify.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wba/branching.hpp"
#include "wba/diagram.hpp"
#include "wba/embedding.hpp"
#include "wba/errors.hpp"
#include "wba/grothendieck.hpp"
#include "wba/half_diagram.hpp"
#include "wba/json_io.hpp"
#include "wba/oracle.hpp"
#include "wba/partition.hpp"

namespace wba {

namespace {

std::string shape_rs(int r, int s) {
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

std::string pair_text(const CellPair& p) {
    return "(" + cell_to_text(p.first) + ")x(" + cell_to_text(p.second) + ")";
}

std::string table_text(const std::map<CellPair, long long, CellPairLess>& table) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : table) {
        if (!first) out += ", ";
        first = false;
        out += pair_text(key) + ":" + std::to_string(value);
    }
    return out + "}";
}

CheckResult failure(std::string name, std::string detail) {
    CheckResult res;
    res.name = std::move(name);
    res.pass = false;
    res.detail = std::move(detail);
    return res;
}

CheckResult success(std::string name, std::string detail) {
    CheckResult res;
    res.name = std::move(name);
    res.pass = true;
    res.detail = std::move(detail);
    return res;
}

} // namespace

CheckResult check_diagram_soundness(int exhaustive_total, int samples, int random_total,
                                    unsigned long long seed) {
    const std::string name = "diagram_soundness";
    long long triples = 0;
    int shapes = 0;
    for (int total = 0; total <= exhaustive_total; ++total) {
        for (int r = 0; r <= total; ++r) {
            const int s = total - r;
            const auto basis = enumerate_basis(r, s);
            if (basis.size() != basis_count(r, s))
                return failure(name, "basis count mismatch at " + shape_rs(r, s) + ": enumerated " +
                                         std::to_string(basis.size()) + ", formula " +
                                         std::to_string(basis_count(r, s)));
            ++shapes;
            std::vector<AlgebraElement> elems;
            elems.reserve(basis.size());
            for (const auto& d : basis) elems.push_back(to_element(d));
            const AlgebraElement one = algebra_one(r, s);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!(multiply(one, elems[i]) == elems[i]) ||
                    !(multiply(elems[i], one) == elems[i]))
                    return failure(name, "unit law fails at " + shape_rs(r, s) + " on " +
                                             diagram_to_text(basis[i]));
            }
            for (const auto& a : elems)
                for (const auto& b : elems) {
                    const AlgebraElement ab = multiply(a, b);
                    for (const auto& c : elems) {
                        if (!(multiply(ab, c) == multiply(a, multiply(b, c))))
                            return failure(name, "associativity fails at " + shape_rs(r, s));
                        ++triples;
                    }
                }
        }
    }

    std::vector<std::pair<int, int>> random_shapes;
    for (int total = exhaustive_total + 1; total <= random_total; ++total)
        for (int r = 0; r <= total; ++r) random_shapes.emplace_back(r, total - r);
    std::map<std::pair<int, int>, std::vector<AlgebraElement>> cache;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples && !random_shapes.empty(); ++k) {
        const auto rs = random_shapes[rng() % random_shapes.size()];
        auto& elems = cache[rs];
        if (elems.empty())
            for (const auto& d : enumerate_basis(rs.first, rs.second)) elems.push_back(to_element(d));
        const AlgebraElement& a = elems[rng() % elems.size()];
        const AlgebraElement& b = elems[rng() % elems.size()];
        const AlgebraElement& c = elems[rng() % elems.size()];
        if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c))))
            return failure(name, "associativity fails at " + shape_rs(rs.first, rs.second) +
                                     " on a random triple (seed " + std::to_string(seed) + ")");
        const AlgebraElement one = algebra_one(rs.first, rs.second);
        if (!(multiply(one, a) == a) || !(multiply(a, one) == a))
            return failure(name, "unit law fails at " + shape_rs(rs.first, rs.second));
    }
    return success(name, std::to_string(shapes) + " basis counts, " + std::to_string(triples) +
                             " exhaustive and " + std::to_string(samples) +
                             " random associativity triples");
}

CheckResult check_propagating(int max_total) {
    const std::string name = "propagating_monotonicity";
    long long pairs = 0;
    for (int total = 0; total <= max_total; ++total)
        for (int r = 0; r <= total; ++r) {
            const auto basis = enumerate_basis(r, total - r);
            for (const auto& a : basis)
                for (const auto& b : basis) {
                    const int bound = std::min(propagating_count(a), propagating_count(b));
                    const ConcatResult prod = concat(a, b);
                    if (propagating_count(prod.diagram) > bound)
                        return failure(name, "propagating count grows at " +
                                                 shape_rs(r, total - r) + ": " +
                                                 diagram_to_text(a) + " * " + diagram_to_text(b) +
                                                 " -> " + diagram_to_text(prod.diagram));
                    ++pairs;
                }
        }
    return success(name, std::to_string(pairs) + " products keep the propagating count bounded");
}

CheckResult check_embedding() {
    const std::string name = "embedding_homomorphism";
    long long products = 0;
    for (const auto& [r1, s1, r2, s2] :
         std::vector<std::array<int, 4>>{{1, 1, 1, 1}, {1, 0, 0, 1}}) {
        const auto b1 = enumerate_basis(r1, s1);
        const auto b2 = enumerate_basis(r2, s2);

        std::map<WalledDiagram, int, DiagramLess> images;
        for (const auto& d1 : b1)
            for (const auto& d2 : b2) ++images[twisted_tensor(d1, d2)];
        if (images.size() != b1.size() * b2.size())
            return failure(name, "embedding is not injective on basis pairs of " +
                                     shape_rs(r1, s1) + " and " + shape_rs(r2, s2));

        if (!(embed_rho(algebra_one(r1, s1), algebra_one(r2, s2)) ==
              algebra_one(r1 + r2, s1 + s2)))
            return failure(name, "embedding does not send the unit pair to the unit at " +
                                     shape_rs(r1, s1) + " and " + shape_rs(r2, s2));

        std::vector<AlgebraElement> e1, e2;
        for (const auto& d : b1) e1.push_back(to_element(d));
        for (const auto& d : b2) e2.push_back(to_element(d));
        for (const auto& x : e1)
            for (const auto& y : e2)
                for (const auto& x2 : e1)
                    for (const auto& y2 : e2) {
                        const AlgebraElement lhs =
                            multiply(embed_rho(x, y), embed_rho(x2, y2));
                        const AlgebraElement rhs =
                            embed_rho(multiply(x, x2), multiply(y, y2));
                        if (!(lhs == rhs))
                            return failure(name, "embedding is not multiplicative at " +
                                                     shape_rs(r1, s1) + " and " + shape_rs(r2, s2));
                        ++products;
                    }
    }
    return success(name, "injective and unital on both factor pairs, " +
                             std::to_string(products) + " products respected");
}

CheckResult check_idempotents(int max_rs) {
    const std::string name = "arc_idempotents";
    int count = 0;
    for (int r = 0; r <= max_rs; ++r)
        for (int s = 0; s <= max_rs; ++s)
            for (int l = 0; l <= std::min(r, s); ++l) {
                const AlgebraElement e = make_idempotent(r, s, l);
                if (!(multiply(e, e) == e))
                    return failure(name, "idempotent fails at " + shape_rs(r, s) +
                                             " with l=" + std::to_string(l));
                ++count;
            }
    return success(name, std::to_string(count) + " normalized arc elements square to themselves");
}

CheckResult check_lr_oracle(int max_size) {
    const std::string name = "littlewood_richardson";
    long long coefficients = 0;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& nu : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const Partition& lam : partitions_of(a))
                    for (const Partition& mu : partitions_of(n - a)) {
                        const long long tableau = lr_coefficient(lam, mu, nu);
                        const long long character = lr_via_characters(lam, mu, nu);
                        if (tableau != character)
                            return failure(name, "tableau and character counts differ at lam=" +
                                                     partition_to_text(lam) + " mu=" +
                                                     partition_to_text(mu) + " nu=" +
                                                     partition_to_text(nu) + ": " +
                                                     std::to_string(tableau) + " vs " +
                                                     std::to_string(character));
                        if (tableau != lr_coefficient(mu, lam, nu))
                            return failure(name, "symmetry fails at lam=" +
                                                     partition_to_text(lam) + " mu=" +
                                                     partition_to_text(mu) + " nu=" +
                                                     partition_to_text(nu));
                        ++coefficients;
                    }

    for (int n = 0; n <= max_size; ++n)
        for (int a = 0; a <= n; ++a)
            for (const Partition& lam : partitions_of(a))
                for (const Partition& mu : partitions_of(n - a)) {
                    unsigned long long total = 0;
                    for (const Partition& nu : partitions_of(n))
                        total += static_cast<unsigned long long>(lr_coefficient(lam, mu, nu)) *
                                 syt_count(nu);
                    const unsigned long long expected =
                        syt_count(lam) * syt_count(mu) * binomial(n, a);
                    if (total != expected)
                        return failure(name, "induced dimension identity fails at lam=" +
                                                 partition_to_text(lam) + " mu=" +
                                                 partition_to_text(mu) + ": " +
                                                 std::to_string(total) + " vs " +
                                                 std::to_string(expected));
                }
    return success(name, std::to_string(coefficients) +
                             " coefficients agree across both computations");
}

CheckResult check_semisimple_dimensions(int max_rs) {
    const std::string name = "semisimple_dimensions";
    for (int r = 0; r <= max_rs; ++r)
        for (int s = 0; s <= max_rs; ++s) {
            unsigned long long total = 0;
            for (const CellLabel& cell : enumerate_cells(r, s)) {
                const unsigned long long d = cell_dim(r, s, cell);
                total += d * d;
            }
            if (total != basis_count(r, s))
                return failure(name, "squared cell dimensions at " + shape_rs(r, s) + " sum to " +
                                         std::to_string(total) + ", algebra dimension is " +
                                         std::to_string(basis_count(r, s)));
        }
    return success(name, "squared cell dimensions sum to the algebra dimension up to r=s=" +
                             std::to_string(max_rs));
}

CheckResult check_restriction_dimensions(int max_rs) {
    const std::string name = "restriction_dimensions";
    long long cases = 0;
    for (int r = 0; r <= max_rs; ++r)
        for (int s = 0; s <= max_rs; ++s)
            for (int r1 = 0; r1 <= r; ++r1)
                for (int s1 = 0; s1 <= s; ++s1) {
                    const SplitShape sh{r1, s1, r - r1, s - s1};
                    for (const CellLabel& cell : enumerate_cells(r, s)) {
                        unsigned long long total = 0;
                        for (const auto& [pair, mult] : restriction_multiset(sh, cell))
                            total += static_cast<unsigned long long>(mult) *
                                     cell_dim(sh.r1, sh.s1, pair.first) *
                                     cell_dim(sh.r2, sh.s2, pair.second);
                        if (total != cell_dim(r, s, cell))
                            return failure(name, "filtration dimensions at shape " +
                                                     shape_to_text(sh) + ", cell " +
                                                     cell_to_text(cell) + " sum to " +
                                                     std::to_string(total) + ", module dimension is " +
                                                     std::to_string(cell_dim(r, s, cell)));
                        ++cases;
                    }
                }
    return success(name, std::to_string(cases) + " (split, cell) filtrations fill the module");
}

CheckResult check_triple_agreement(int max_total, const Rational& delta0,
                                   const std::vector<Rational>& retries) {
    const std::string name = "triple_agreement";
    std::vector<Rational> deltas{delta0};
    deltas.insert(deltas.end(), retries.begin(), retries.end());
    long long cases = 0;
    int retried = 0;
    for (int total = 0; total <= max_total; ++total)
        for (int r = 0; r <= total; ++r) {
            const int s = total - r;
            for (int r1 = 0; r1 <= r; ++r1)
                for (int s1 = 0; s1 <= s; ++s1) {
                    const SplitShape sh{r1, s1, r - r1, s - s1};
                    const auto cells1 = enumerate_cells(sh.r1, sh.s1);
                    const auto cells2 = enumerate_cells(sh.r2, sh.s2);
                    for (const CellLabel& cell : enumerate_cells(r, s)) {
                        auto formula = restriction_multiset(sh, cell);
                        for (auto it = formula.begin(); it != formula.end();)
                            it = (it->second == 0) ? formula.erase(it) : std::next(it);

                        std::map<CellPair, long long, CellPairLess> sc;
                        for (const CellLabel& c1 : cells1)
                            for (const CellLabel& c2 : cells2) {
                                const GrothClass g = structure_constants(c1, c2);
                                const auto it = g.find(cell);
                                if (it != g.end() && it->second != 0) sc[{c1, c2}] = it->second;
                            }
                        if (sc != formula)
                            return failure(name, "structure constants and filtration differ at " +
                                                     shape_to_text(sh) + ", cell " +
                                                     cell_to_text(cell) + ": " + table_text(sc) +
                                                     " vs " + table_text(formula));

                        bool agreed = false;
                        std::map<CellPair, long long, CellPairLess> brute;
                        for (std::size_t i = 0; i < deltas.size(); ++i) {
                            brute = brute_restriction(sh, cell, deltas[i]);
                            if (brute == formula) {
                                agreed = true;
                                if (i > 0) ++retried;
                                break;
                            }
                        }
                        if (!agreed)
                            return failure(name, "matrix oracle still differs after " +
                                                     std::to_string(deltas.size()) +
                                                     " delta values at " + shape_to_text(sh) +
                                                     ", cell " + cell_to_text(cell) + ": " +
                                                     table_text(brute) + " vs " +
                                                     table_text(formula));
                        ++cases;
                    }
                }
        }
    std::string detail = std::to_string(cases) + " (split, cell) cases agree three ways";
    if (retried > 0) detail += "; " + std::to_string(retried) + " needed a fresh delta value";
    return success(name, detail);
}

CheckResult check_hom_duality(const Rational& delta0) {
    const std::string name = "hom_duality";
    long long cases = 0;
    for (const auto& [r, s, l] :
         std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}) {
        const auto perms_l = all_permutations(r - l);
        const auto perms_r = all_permutations(s - l);
        for (const Partition& lamL : partitions_of(r - l))
            for (const Partition& lamR : partitions_of(s - l))
                for (const Partition& muL : partitions_of(r - l))
                    for (const Partition& muR : partitions_of(s - l)) {
                        const std::size_t cell_side =
                            hom_space_dim(cell_module_matrices(r, s, {l, lamL, lamR}, delta0),
                                          cell_module_matrices(r, s, {l, muL, muR}, delta0));
                        MatrixRep m1, m2;
                        m1.dimension =
                            standard_tableaux(lamL).size() * standard_tableaux(lamR).size();
                        m2.dimension =
                            standard_tableaux(muL).size() * standard_tableaux(muR).size();
                        for (const auto& a : perms_l)
                            for (const auto& b : perms_r) {
                                m1.images.push_back(
                                    q_kron(specht_matrix_of(lamL, a), specht_matrix_of(lamR, b)));
                                m2.images.push_back(
                                    q_kron(specht_matrix_of(muL, a), specht_matrix_of(muR, b)));
                            }
                        const std::size_t group_side = hom_space_dim(m1, m2);
                        if (cell_side != group_side)
                            return failure(name, "intertwiner dimensions differ at " +
                                                     shape_rs(r, s) + " l=" + std::to_string(l) +
                                                     " (" + partition_to_text(lamL) + ";" +
                                                     partition_to_text(lamR) + ") vs (" +
                                                     partition_to_text(muL) + ";" +
                                                     partition_to_text(muR) + "): " +
                                                     std::to_string(cell_side) + " vs " +
                                                     std::to_string(group_side));
                        ++cases;
                    }
    }
    return success(name, std::to_string(cases) +
                             " module pairs have matching intertwiner dimensions");
}

CheckResult check_ring_properties(int max_total) {
    const std::string name = "ring_properties";
    std::vector<CellLabel> pool;
    for (int total = 0; total <= max_total; ++total)
        for (int r = 0; r <= total; ++r)
            for (const CellLabel& c : enumerate_cells(r, total - r)) pool.push_back(c);

    for (const CellLabel& a : pool)
        for (const CellLabel& b : pool)
            if (!(structure_constants(a, b) == structure_constants(b, a)))
                return failure(name, "product is not commutative on (" + cell_to_text(a) +
                                         ") and (" + cell_to_text(b) + ")");

    long long triples = 0;
    for (const CellLabel& a : pool)
        for (const CellLabel& b : pool) {
            const GrothClass ab = structure_constants(a, b);
            for (const CellLabel& c : pool) {
                if (!(ring_multiply(ab, class_of(c)) ==
                      ring_multiply(class_of(a), structure_constants(b, c))))
                    return failure(name, "product is not associative on (" + cell_to_text(a) +
                                             "), (" + cell_to_text(b) + "), (" + cell_to_text(c) +
                                             ")");
                ++triples;
            }
        }

    for (int a = 0; a <= max_total; ++a)
        for (int b = 0; b <= max_total; ++b)
            for (const Partition& lam : partitions_of(a))
                for (const Partition& mu : partitions_of(b)) {
                    GrothClass expect_left, expect_right;
                    for (const Partition& nu : partitions_of(a + b)) {
                        const long long c = lr_coefficient(lam, mu, nu);
                        if (c != 0) {
                            expect_left[CellLabel{0, nu, {}}] = c;
                            expect_right[CellLabel{0, {}, nu}] = c;
                        }
                    }
                    if (!(structure_constants({0, lam, {}}, {0, mu, {}}) == expect_left))
                        return failure(name, "one-row-side sector differs from the classical product at lam=" +
                                                 partition_to_text(lam) + " mu=" +
                                                 partition_to_text(mu));
                    if (!(structure_constants({0, {}, lam}, {0, {}, mu}) == expect_right))
                        return failure(name, "other-side sector differs from the classical product at lam=" +
                                                 partition_to_text(lam) + " mu=" +
                                                 partition_to_text(mu));
                }

    return success(name, std::to_string(pool.size()) + " classes: commutative, " +
                             std::to_string(triples) +
                             " associativity triples, classical sectors exact");
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    if (opt.full) {
        out.push_back(check_diagram_soundness(3, 500, 5, opt.seed));
        out.push_back(check_propagating(4));
        out.push_back(check_embedding());
        out.push_back(check_idempotents(3));
        out.push_back(check_lr_oracle(6));
        out.push_back(check_semisimple_dimensions(4));
        out.push_back(check_restriction_dimensions(3));
        out.push_back(check_triple_agreement(4, opt.delta0, opt.retries));
        out.push_back(check_hom_duality(opt.delta0));
        out.push_back(check_ring_properties(3));
    } else {
        out.push_back(check_diagram_soundness(2, 60, 4, opt.seed));
        out.push_back(check_propagating(3));
        out.push_back(check_embedding());
        out.push_back(check_idempotents(2));
        out.push_back(check_lr_oracle(4));
        out.push_back(check_semisimple_dimensions(2));
        out.push_back(check_restriction_dimensions(2));
        out.push_back(check_triple_agreement(2, opt.delta0, opt.retries));
        out.push_back(check_hom_duality(opt.delta0));
        out.push_back(check_ring_properties(2));
    }
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

} // namespace wba
