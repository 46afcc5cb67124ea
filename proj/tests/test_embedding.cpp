#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wba/diagram.hpp"
#include "wba/embedding.hpp"

using namespace wba;

namespace {

const WalledDiagram kArc = validate(1, 1, {{1, 2}, {-1, -2}});

} // namespace

TEST_CASE("outer and centered placements of the one-arc diagram") {
    // Into (2, 1): outer placement keeps column 1, pushes column 2 to 3.
    WalledDiagram outer = iota(kArc, 1, 0);
    CHECK(outer == validate(2, 1, {{1, 3}, {-1, -3}, {2, -2}}));
    // Centered placement shifts by one column and adds an outer strand.
    WalledDiagram centered = zeta(kArc, 1, 0);
    CHECK(centered == validate(2, 1, {{2, 3}, {-2, -3}, {1, -1}}));
    // Identity-sized insertions do nothing.
    CHECK(iota(kArc, 0, 0) == kArc);
    CHECK(zeta(kArc, 0, 0) == kArc);
}

TEST_CASE("twisted tensor of two one-arc diagrams") {
    WalledDiagram t = twisted_tensor(kArc, kArc);
    CHECK(t == validate(2, 2, {{1, 4}, {2, 3}, {-1, -4}, {-2, -3}}));
    // Nested, not crossing: the outer arc spans the inner one.
    CHECK(top_arc_count(t) == 2);
    CHECK(propagating_count(t) == 0);
}

TEST_CASE("identity maps to identity") {
    CHECK(twisted_tensor(identity_diagram(1, 1), identity_diagram(2, 1)) ==
          identity_diagram(3, 2));
    CHECK(embed_rho(algebra_one(1, 1), algebra_one(1, 2)) == algebra_one(2, 3));
}

TEST_CASE("outer placement is multiplicative") {
    for (auto [rs, nm] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
             {{1, 1}, {1, 1}}, {{2, 1}, {0, 1}}, {{1, 0}, {1, 1}}}) {
        auto basis = enumerate_basis(rs.first, rs.second);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                AlgebraElement inner = multiply(to_element(a), to_element(b));
                AlgebraElement lhs = iota(inner, nm.first, nm.second);
                AlgebraElement rhs =
                    multiply(to_element(iota(a, nm.first, nm.second)),
                             to_element(iota(b, nm.first, nm.second)));
                CHECK(lhs == rhs);
                AlgebraElement lhs2 = zeta(inner, nm.first, nm.second);
                AlgebraElement rhs2 =
                    multiply(to_element(zeta(a, nm.first, nm.second)),
                             to_element(zeta(b, nm.first, nm.second)));
                CHECK(lhs2 == rhs2);
            }
    }
}

TEST_CASE("the two placements commute elementwise") {
    for (auto [rs, nm] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
             {{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}, {{2, 1}, {1, 1}}}) {
        auto [r, s] = rs;
        auto [n, m] = nm;
        for (const auto& a : enumerate_basis(r, s))
            for (const auto& b : enumerate_basis(n, m)) {
                AlgebraElement left =
                    multiply(to_element(iota(a, n, m)), to_element(zeta(b, r, s)));
                AlgebraElement right =
                    multiply(to_element(zeta(b, r, s)), to_element(iota(a, n, m)));
                CHECK(left == right);
                // The product is the twisted tensor with no loop factor.
                CHECK(left == to_element(twisted_tensor(a, b)));
            }
    }
}

TEST_CASE("block product rule for twisted tensors") {
    for (auto [rs, nm] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
             {{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}}) {
        auto [r, s] = rs;
        auto [n, m] = nm;
        auto basis1 = enumerate_basis(r, s);
        auto basis2 = enumerate_basis(n, m);
        for (const auto& a1 : basis1)
            for (const auto& a2 : basis1)
                for (const auto& b1 : basis2)
                    for (const auto& b2 : basis2) {
                        AlgebraElement lhs = multiply(to_element(twisted_tensor(a1, b1)),
                                                      to_element(twisted_tensor(a2, b2)));
                        AlgebraElement rhs =
                            embed_rho(multiply(to_element(a1), to_element(a2)),
                                      multiply(to_element(b1), to_element(b2)));
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("embedding is injective on basis pairs") {
    for (auto [rs, nm] : std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>{
             {{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}, {{2, 0}, {1, 1}}}) {
        auto [r, s] = rs;
        auto [n, m] = nm;
        std::set<WalledDiagram, DiagramLess> images;
        std::size_t count = 0;
        for (const auto& a : enumerate_basis(r, s))
            for (const auto& b : enumerate_basis(n, m)) {
                images.insert(twisted_tensor(a, b));
                ++count;
            }
        CHECK(images.size() == count);
    }
}

TEST_CASE("twisted tensor is associative") {
    std::mt19937_64 rng(99);
    std::vector<std::pair<int, int>> shapes{{1, 1}, {1, 0}, {0, 1}, {2, 1}};
    for (int trial = 0; trial < 60; ++trial) {
        auto [r1, s1] = shapes[rng() % shapes.size()];
        auto [r2, s2] = shapes[rng() % shapes.size()];
        auto [r3, s3] = shapes[rng() % shapes.size()];
        auto b1 = enumerate_basis(r1, s1);
        auto b2 = enumerate_basis(r2, s2);
        auto b3 = enumerate_basis(r3, s3);
        const auto& x = b1[rng() % b1.size()];
        const auto& y = b2[rng() % b2.size()];
        const auto& z = b3[rng() % b3.size()];
        CHECK(twisted_tensor(twisted_tensor(x, y), z) ==
              twisted_tensor(x, twisted_tensor(y, z)));
    }
}

TEST_CASE("one sided tensors against the empty algebra") {
    WalledDiagram empty = identity_diagram(0, 0);
    CHECK(twisted_tensor(kArc, empty) == kArc);
    CHECK(twisted_tensor(empty, kArc) == kArc);
}
