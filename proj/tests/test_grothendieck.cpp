#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wba/errors.hpp"
#include "wba/grothendieck.hpp"
#include "wba/partition.hpp"

using namespace wba;

namespace {

std::vector<CellLabel> small_cells(int max_total) {
    std::vector<CellLabel> out;
    for (int r = 0; r <= max_total; ++r)
        for (int s = 0; r + s <= max_total; ++s)
            for (const auto& c : enumerate_cells(r, s)) out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("class validation and home parameters") {
    CellLabel good{1, {2, 1}, {1}};
    CHECK(cell_r(good) == 4);
    CHECK(cell_s(good) == 2);
    CHECK(class_of(good) == GrothClass{{good, 1}});
    CHECK_THROWS_AS(class_of(CellLabel{0, {2, 3}, {}}), ShapeMismatch);
    CHECK_THROWS_AS(class_of(CellLabel{-1, {}, {}}), ShapeMismatch);
}

TEST_CASE("empty cell is the unit") {
    CellLabel one{0, {}, {}};
    for (const auto& c : small_cells(2)) {
        CHECK(structure_constants(one, c) == GrothClass{{c, 1}});
        CHECK(structure_constants(c, one) == GrothClass{{c, 1}});
    }
}

TEST_CASE("mixed product of the two one-dot classes") {
    GrothClass p = structure_constants(CellLabel{0, {1}, {}}, CellLabel{0, {}, {1}});
    GrothClass expected{{CellLabel{0, {1}, {1}}, 1}, {CellLabel{1, {}, {}}, 1}};
    CHECK(p == expected);

    // Two pure-arc classes concatenate their arcs.
    GrothClass q = structure_constants(CellLabel{1, {}, {}}, CellLabel{1, {}, {}});
    CHECK(q == GrothClass{{CellLabel{2, {}, {}}, 1}});
}

TEST_CASE("one-sided sectors multiply by the classical rule") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    GrothClass left =
                        structure_constants(CellLabel{0, lam, {}}, CellLabel{0, mu, {}});
                    GrothClass right =
                        structure_constants(CellLabel{0, {}, lam}, CellLabel{0, {}, mu});
                    long long seenL = 0, seenR = 0;
                    for (const auto& nu : partitions_of(a + b)) {
                        const long long c = lr_coefficient(lam, mu, nu);
                        auto itL = left.find(CellLabel{0, nu, {}});
                        auto itR = right.find(CellLabel{0, {}, nu});
                        CHECK((itL == left.end() ? 0 : itL->second) == c);
                        CHECK((itR == right.end() ? 0 : itR->second) == c);
                        if (c != 0) {
                            ++seenL;
                            ++seenR;
                        }
                    }
                    CHECK(left.size() == static_cast<std::size_t>(seenL));
                    CHECK(right.size() == static_cast<std::size_t>(seenR));
                }
}

TEST_CASE("product matches the restriction filtration by adjunction") {
    for (int r1 = 0; r1 <= 1; ++r1)
        for (int s1 = 0; s1 <= 1; ++s1)
            for (int r2 = 0; r2 <= 1; ++r2)
                for (int s2 = 0; s2 <= 1; ++s2) {
                    SplitShape sh{r1, s1, r2, s2};
                    for (const auto& nu1 : enumerate_cells(r1, s1))
                        for (const auto& nu2 : enumerate_cells(r2, s2)) {
                            GrothClass p = structure_constants(nu1, nu2);
                            for (const auto& nu : enumerate_cells(sh.r(), sh.s())) {
                                auto terms = restriction_multiset(sh, nu);
                                auto rit = terms.find({nu1, nu2});
                                long long want = rit == terms.end() ? 0 : rit->second;
                                auto pit = p.find(nu);
                                long long got = pit == p.end() ? 0 : pit->second;
                                CHECK(got == want);
                            }
                        }
                }

    // The same comparison on two wider shapes.
    for (const SplitShape& sh : {SplitShape{2, 0, 1, 0}, SplitShape{1, 1, 1, 1}})
        for (const auto& nu1 : enumerate_cells(sh.r1, sh.s1))
            for (const auto& nu2 : enumerate_cells(sh.r2, sh.s2)) {
                GrothClass p = structure_constants(nu1, nu2);
                for (const auto& nu : enumerate_cells(sh.r(), sh.s())) {
                    auto terms = restriction_multiset(sh, nu);
                    auto rit = terms.find({nu1, nu2});
                    long long want = rit == terms.end() ? 0 : rit->second;
                    auto pit = p.find(nu);
                    CHECK((pit == p.end() ? 0 : pit->second) == want);
                }
            }
}

TEST_CASE("the ring is commutative") {
    auto pool = small_cells(2);
    for (const auto& a : pool)
        for (const auto& b : pool) CHECK(structure_constants(a, b) == structure_constants(b, a));
}

TEST_CASE("the ring is associative") {
    auto pool = small_cells(2);
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool) {
                GrothClass ab_c = ring_multiply(structure_constants(a, b), class_of(c));
                GrothClass a_bc = ring_multiply(class_of(a), structure_constants(b, c));
                CHECK(ab_c == a_bc);
            }
}

TEST_CASE("bilinearity of the extended product") {
    GrothClass x{{CellLabel{0, {1}, {}}, 2}, {CellLabel{0, {}, {1}}, -1}};
    GrothClass y{{CellLabel{1, {}, {}}, 3}};
    GrothClass p = ring_multiply(x, y);
    GrothClass expected;
    for (const auto& [nu, c] : structure_constants(CellLabel{0, {1}, {}}, CellLabel{1, {}, {}}))
        expected[nu] += 6 * c;
    for (const auto& [nu, c] : structure_constants(CellLabel{0, {}, {1}}, CellLabel{1, {}, {}}))
        expected[nu] -= 3 * c;
    CHECK(p == expected);
    CHECK(ring_multiply(GrothClass{}, y).empty());
}
