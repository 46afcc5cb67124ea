#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wba/errors.hpp"
#include "wba/partition.hpp"

using namespace wba;

TEST_CASE("partition enumeration order and counts") {
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);
    for (const auto& p : partitions_of(7)) {
        CHECK(is_partition(p));
        CHECK(partition_size(p) == 7);
    }
    CHECK_THROWS_AS(partitions_of(-1), RangeError);
}

TEST_CASE("standard tableau counts via hooks") {
    CHECK(syt_count({}) == 1);
    CHECK(syt_count({4}) == 1);
    CHECK(syt_count({1, 1, 1}) == 1);
    CHECK(syt_count({2, 1}) == 2);
    CHECK(syt_count({2, 2}) == 2);
    CHECK(syt_count({3, 1}) == 3);
    CHECK(syt_count({2, 1, 1}) == 3);
    CHECK(syt_count({3, 2}) == 5);
    CHECK(syt_count({4, 3, 2}) == 168);
    // Sum of squares over partitions of n equals n!.
    for (int n = 0; n <= 8; ++n) {
        unsigned long long total = 0;
        for (const auto& p : partitions_of(n)) {
            unsigned long long f = syt_count(p);
            total += f * f;
        }
        CHECK(total == factorial_ull(n));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("littlewood richardson base cases") {
    // Unit: empty partition acts as identity.
    CHECK(lr_coefficient({}, {}, {}) == 1);
    CHECK(lr_coefficient({2, 1}, {}, {2, 1}) == 1);
    CHECK(lr_coefficient({}, {2, 1}, {2, 1}) == 1);
    // Size grading: mismatched sizes vanish.
    CHECK(lr_coefficient({1}, {1}, {3}) == 0);
    // Single-row second factor obeys the Pieri rule.
    CHECK(lr_coefficient({2, 1}, {2}, {4, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2}, {3, 2}) == 1);
    CHECK(lr_coefficient({2, 1}, {2}, {2, 2, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2}, {3, 1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2}, {2, 1, 1, 1}) == 0);
    // A classical multiplicity-free product.
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 2}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {2, 2, 1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 1, 1}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 3}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {2, 2, 2}) == 1);
    CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 1, 1, 1}) == 1);
}

TEST_CASE("characters by border strip recursion") {
    // Trivial representation: all values 1.
    for (const auto& rho : partitions_of(5)) CHECK(mn_character({5}, rho) == 1);
    // Sign representation: parity of the permutation class.
    for (const auto& rho : partitions_of(5)) {
        int transpositions = 0;
        for (int part : rho) transpositions += part - 1;
        CHECK(mn_character({1, 1, 1, 1, 1}, rho) == (transpositions % 2 ? -1 : 1));
    }
    // Identity class gives the dimension.
    for (int n = 1; n <= 7; ++n) {
        Partition ones(n, 1);
        for (const auto& lam : partitions_of(n))
            CHECK(mn_character(lam, ones) == static_cast<long long>(syt_count(lam)));
    }
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 2}, {2, 2}) == 2);
    CHECK(mn_character({3, 1}, {2, 2}) == -1);
    CHECK(mn_character({3, 1}, {4}) == -1);
    CHECK(mn_character({2, 2}, {3, 1}) == -1);
    CHECK_THROWS_AS(mn_character({2, 1}, {2}), RangeError);

    // First orthogonality: every row has squared norm 1.
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lam : partitions_of(n)) {
            unsigned long long sum = 0;
            for (const auto& rho : partitions_of(n)) {
                long long v = mn_character(lam, rho);
                sum += (factorial_ull(n) / centralizer_order(rho)) *
                       static_cast<unsigned long long>(v * v);
            }
            CHECK(sum == factorial_ull(n));
        }
        // Distinct rows are orthogonal.
        const auto& parts = partitions_of(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                long long dot = 0;
                for (const auto& rho : partitions_of(n))
                    dot += static_cast<long long>(factorial_ull(n) / centralizer_order(rho)) *
                           mn_character(parts[i], rho) * mn_character(parts[j], rho);
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order({}) == 1);
    CHECK(centralizer_order({1, 1, 1}) == 6);
    CHECK(centralizer_order({3}) == 3);
    CHECK(centralizer_order({2, 1}) == 2);
    CHECK(centralizer_order({2, 2, 1}) == 8);
    CHECK(centralizer_order({4, 4, 2, 1, 1}) == 128);
    // Class sizes sum to the group order.
    for (int n = 1; n <= 7; ++n) {
        unsigned long long total = 0;
        for (const auto& rho : partitions_of(n)) total += factorial_ull(n) / centralizer_order(rho);
        CHECK(total == factorial_ull(n));
    }
}

TEST_CASE("tableau rule agrees with the character route") {
    for (int n = 0; n <= 6; ++n)
        for (int a = 0; a <= n; ++a) {
            int b = n - a;
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b))
                    for (const auto& nu : partitions_of(n)) {
                        long long tableau = lr_coefficient(lam, mu, nu);
                        long long characters = lr_via_characters(lam, mu, nu);
                        CHECK(tableau == characters);
                        // Symmetry in the two lower arguments.
                        CHECK(tableau == lr_coefficient(mu, lam, nu));
                    }
        }
}

TEST_CASE("induced dimension identity") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a <= n; ++a) {
            int b = n - a;
            for (const auto& lam : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    unsigned long long lhs = 0;
                    for (const auto& nu : partitions_of(n))
                        lhs += static_cast<unsigned long long>(lr_coefficient(lam, mu, nu)) *
                               syt_count(nu);
                    CHECK(lhs == syt_count(lam) * syt_count(mu) * binomial(n, a));
                }
        }
}

TEST_CASE("cycle types of one-line permutations") {
    CHECK(cycle_type_of({0, 1, 2}) == Partition{1, 1, 1});
    CHECK(cycle_type_of({1, 0, 2}) == Partition{2, 1});
    CHECK(cycle_type_of({1, 2, 0}) == Partition{3});
    CHECK(cycle_type_of({}) == Partition{});
}
