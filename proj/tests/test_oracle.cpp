#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "wba/diagram.hpp"
#include "wba/errors.hpp"
#include "wba/oracle.hpp"

using namespace wba;

namespace {
const Rational kDelta0(104729);
}

TEST_CASE("rational matrix helpers") {
    QMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    QMatrix b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(q_mul(a, q_identity(2)) == a);
    CHECK(q_mul(a, b) == QMatrix{{Rational(2), Rational(1)}, {Rational(4), Rational(3)}});
    CHECK(q_rank(a) == 2);
    QMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(q_rank(singular) == 1);
    CHECK(q_nullity(singular) == 1);
    QMatrix k = q_kron(q_identity(2), b);
    CHECK(k.size() == 4);
    CHECK(k[0][1] == 1);
    CHECK(k[2][3] == 1);
    CHECK(k[0][3] == 0);
    CHECK_THROWS_AS(q_mul(a, q_identity(3)), ShapeMismatch);
}

TEST_CASE("standard tableaux enumeration") {
    auto t21 = standard_tableaux({2, 1});
    REQUIRE(t21.size() == 2);
    CHECK(t21[0] == Tableau{{1, 2}, {3}});
    CHECK(t21[1] == Tableau{{1, 3}, {2}});
    CHECK(standard_tableaux({}).size() == 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto tabs = standard_tableaux(lam);
            CHECK(tabs.size() == syt_count(lam));
            CHECK(std::is_sorted(tabs.begin(), tabs.end()));
        }
}

TEST_CASE("seminormal matrices on two letters") {
    Perm swap01{1, 0};
    CHECK(specht_matrix_of({2}, swap01) == QMatrix{{Rational(1)}});
    CHECK(specht_matrix_of({1, 1}, swap01) == QMatrix{{Rational(-1)}});
    MatrixRep triv = specht_matrices(2, {2});
    CHECK(triv.dimension == 1);
    REQUIRE(triv.images.size() == 2);
    CHECK(triv.images[1][0][0] == 1);
}

TEST_CASE("two dimensional seminormal fixture") {
    // Letters 2 and 3 sit at contents 1 and -1 in the first tableau.
    QMatrix m = specht_matrix_of({2, 1}, Perm{0, 2, 1});
    REQUIRE(m.size() == 2);
    CHECK(m[0][0] == Rational(-1) / 2);
    CHECK(m[0][1] == 1);
    CHECK(m[1][0] == Rational(3) / 4);
    CHECK(m[1][1] == Rational(1) / 2);
    CHECK(q_mul(m, m) == q_identity(2));

    QMatrix s1 = specht_matrix_of({2, 1}, Perm{1, 0, 2});
    QMatrix cycle = q_mul(s1, m);
    CHECK(cycle[0][0] + cycle[1][1] == -1);
}

TEST_CASE("seminormal matrices form a representation") {
    for (int n = 0; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& lam : partitions_of(n))
            for (const auto& a : perms)
                for (const auto& b : perms)
                    CHECK(specht_matrix_of(lam, compose(a, b)) ==
                          q_mul(specht_matrix_of(lam, a), specht_matrix_of(lam, b)));
    }
}

TEST_CASE("seminormal traces reproduce the character table") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& sigma : all_permutations(n)) {
                const QMatrix m = specht_matrix_of(lam, sigma);
                Rational tr(0);
                for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
                CHECK(tr == Rational(static_cast<long>(mn_character(lam, cycle_type_of(sigma)))));
            }
}

TEST_CASE("cell matrices on the smallest mixed algebra") {
    WalledDiagram e = validate(1, 1, {{1, 2}, {-1, -2}});
    CellLabel arc_cell{1, {}, {}};
    QMatrix me = cell_matrix_of(1, 1, arc_cell, e, kDelta0);
    CHECK(me == QMatrix{{kDelta0}});
    CHECK(cell_matrix_of(1, 1, arc_cell, identity_diagram(1, 1), kDelta0) == q_identity(1));

    CellLabel free_cell{0, {1}, {1}};
    CHECK(cell_matrix_of(1, 1, free_cell, e, kDelta0) == QMatrix{{Rational(0)}});
}

TEST_CASE("identity acts as the identity in every small cell module") {
    for (int r = 0; r <= 2; ++r)
        for (int s = 0; s <= 2; ++s)
            for (const auto& cell : enumerate_cells(r, s)) {
                QMatrix m = cell_matrix_of(r, s, cell, identity_diagram(r, s), kDelta0);
                CHECK(m == q_identity(cell_dim(r, s, cell)));
            }
}

TEST_CASE("cell matrices respect the diagram product") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {2, 1}, {2, 2}}) {
        const auto basis = enumerate_basis(r, s);
        std::map<WalledDiagram, std::size_t, DiagramLess> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        for (const auto& cell : enumerate_cells(r, s)) {
            const MatrixRep rep = cell_module_matrices(r, s, cell, kDelta0);
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const AlgebraElement prod =
                        multiply(to_element(basis[i]), to_element(basis[j]));
                    REQUIRE(prod.terms.size() == 1);
                    const auto& [d, coeff] = *prod.terms.begin();
                    const QMatrix expect =
                        q_scale(rep.images[index.at(d)], coeff.evaluate(kDelta0));
                    CHECK(q_mul(rep.images[i], rep.images[j]) == expect);
                }
        }
    }
}

TEST_CASE("joint cell action is faithful at generic delta") {
    for (int r = 0; r <= 2; ++r)
        for (int s = 0; s <= 2; ++s) {
            const auto basis = enumerate_basis(r, s);
            const auto cells = enumerate_cells(r, s);
            std::vector<MatrixRep> reps;
            for (const auto& cell : cells)
                reps.push_back(cell_module_matrices(r, s, cell, kDelta0));
            QMatrix stacked;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::vector<Rational> row;
                for (const auto& rep : reps)
                    for (const auto& mrow : rep.images[i])
                        for (const auto& x : mrow) row.push_back(x);
                stacked.push_back(std::move(row));
            }
            CHECK(q_rank(stacked) == basis.size());
        }
}

TEST_CASE("schur orthogonality of small cell modules") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        const auto cells = enumerate_cells(r, s);
        std::vector<MatrixRep> reps;
        for (const auto& cell : cells) reps.push_back(cell_module_matrices(r, s, cell, kDelta0));
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j)
                CHECK(hom_space_dim(reps[i], reps[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("hom dimensions survive changes of basis") {
    const MatrixRep rep = cell_module_matrices(2, 1, CellLabel{1, {1}, {}}, kDelta0);
    REQUIRE(rep.dimension == 2);
    const QMatrix p{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    const QMatrix p_inv{{Rational(1), Rational(-1)}, {Rational(0), Rational(1)}};
    const QMatrix q{{Rational(1), Rational(0)}, {Rational(2), Rational(1)}};
    const QMatrix q_inv{{Rational(1), Rational(0)}, {Rational(-2), Rational(1)}};
    MatrixRep conj_a, conj_b;
    conj_a.dimension = conj_b.dimension = 2;
    for (const auto& m : rep.images) {
        conj_a.images.push_back(q_mul(p_inv, q_mul(m, p)));
        conj_b.images.push_back(q_mul(q_inv, q_mul(m, q)));
    }
    CHECK(hom_space_dim(conj_a, conj_b) == hom_space_dim(rep, rep));
    CHECK(hom_space_dim(conj_a, conj_b) == 1);
}

TEST_CASE("free-dot hom spaces match the symmetric group pair") {
    // Triples (r, s, l): intertwiners between two cell modules with l
    // arcs biject with intertwiners of the free-dot group modules.
    for (auto [r, s, l] : std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 1}}) {
        const auto perms_l = all_permutations(r - l);
        const auto perms_r = all_permutations(s - l);
        for (const auto& lamL : partitions_of(r - l))
            for (const auto& lamR : partitions_of(s - l))
                for (const auto& muL : partitions_of(r - l))
                    for (const auto& muR : partitions_of(s - l)) {
                        const std::size_t lhs =
                            hom_space_dim(cell_module_matrices(r, s, {l, lamL, lamR}, kDelta0),
                                          cell_module_matrices(r, s, {l, muL, muR}, kDelta0));
                        MatrixRep m1, m2;
                        m1.dimension = standard_tableaux(lamL).size() *
                                       standard_tableaux(lamR).size();
                        m2.dimension = standard_tableaux(muL).size() *
                                       standard_tableaux(muR).size();
                        for (const auto& a : perms_l)
                            for (const auto& b : perms_r) {
                                m1.images.push_back(q_kron(specht_matrix_of(lamL, a),
                                                           specht_matrix_of(lamR, b)));
                                m2.images.push_back(q_kron(specht_matrix_of(muL, a),
                                                           specht_matrix_of(muR, b)));
                            }
                        CHECK(lhs == hom_space_dim(m1, m2));
                    }
    }
}

TEST_CASE("brute restriction of the smallest mixed algebra") {
    SplitShape sh{1, 0, 0, 1};
    for (const CellLabel& cell : {CellLabel{0, {1}, {1}}, CellLabel{1, {}, {}}}) {
        auto table = brute_restriction(sh, cell, kDelta0);
        REQUIRE(table.size() == 1);
        const auto& [pair, mult] = *table.begin();
        CHECK(pair.first == CellLabel{0, {1}, {}});
        CHECK(pair.second == CellLabel{0, {}, {1}});
        CHECK(mult == 1);
    }
}

TEST_CASE("brute restriction agrees with the filtration formula") {
    std::vector<SplitShape> shapes{{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 0},
                                   {0, 0, 1, 1}, {1, 1, 1, 0}, {1, 0, 1, 1}};
    for (const auto& sh : shapes)
        for (const auto& cell : enumerate_cells(sh.r(), sh.s())) {
            auto brute = brute_restriction(sh, cell, kDelta0);
            auto formula = restriction_multiset(sh, cell);
            for (auto it = formula.begin(); it != formula.end();)
                it = it->second == 0 ? formula.erase(it) : std::next(it);
            CHECK(brute == formula);
            unsigned long long total = 0;
            for (const auto& [pair, mult] : brute)
                total += static_cast<unsigned long long>(mult) *
                         cell_dim(sh.r1, sh.s1, pair.first) *
                         cell_dim(sh.r2, sh.s2, pair.second);
            CHECK(total == cell_dim(sh.r(), sh.s(), cell));
        }
}

TEST_CASE("oracle bounds and validation") {
    CHECK_THROWS_AS(specht_matrices(6, {6}), SizeExceeded);
    CHECK_THROWS_AS(specht_matrices(3, {2}), ShapeMismatch);
    CHECK_THROWS_AS(specht_matrix_of({2}, Perm{0, 0}), ShapeMismatch);
    CHECK_THROWS_AS(cell_module_matrices(3, 2, CellLabel{0, {1, 1, 1}, {2}}, kDelta0),
                    SizeExceeded);
    CHECK_THROWS_AS(brute_restriction(SplitShape{2, 2, 1, 0}, CellLabel{0, {1, 1, 1}, {2}},
                                      kDelta0),
                    SizeExceeded);
    CHECK_THROWS_AS(cell_matrix_of(1, 1, CellLabel{1, {}, {}}, identity_diagram(1, 1),
                                   Rational(3)),
                    GenericDeltaViolation);
    MatrixRep a, b;
    a.dimension = b.dimension = 1;
    a.images = {q_identity(1), q_identity(1)};
    b.images = {q_identity(1)};
    CHECK_THROWS_AS(hom_space_dim(a, b), BasisMismatch);
}
