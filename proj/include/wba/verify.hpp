#pragma once

#include <string>
#include <vector>

#include "wba/rational.hpp"

namespace wba {

/*
 * Invariant suites shared by the acceptance runner and the command line
 * verify command. Every check is exact; a failing check carries its
 * first counterexample in `detail`.
 */
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Basis counts against the closed formula, associativity and unit laws:
// exhaustive for r + s <= exhaustive_total, then `samples` random triples
// drawn from algebras with exhaustive_total < r + s <= random_total.
CheckResult check_diagram_soundness(int exhaustive_total, int samples, int random_total,
                                    unsigned long long seed);

// Propagating edge count of a product never exceeds either factor's.
CheckResult check_propagating(int max_total);

// The two-factor embedding is an injective unital algebra homomorphism
// on the two smallest mixed factor pairs.
CheckResult check_embedding();

// The arc idempotents square to themselves in exact Laurent arithmetic.
CheckResult check_idempotents(int max_rs);

// Tableau combinatorics against the character-theoretic route, plus
// symmetry and the induced dimension identity.
CheckResult check_lr_oracle(int max_size);

// Sum of squared cell dimensions equals the algebra dimension.
CheckResult check_semisimple_dimensions(int max_rs);

// Restricted cell dimensions add up over the filtration, every split.
CheckResult check_restriction_dimensions(int max_rs);

// Structure constants, restriction filtration and the matrix oracle all
// agree; a brute-force mismatch is retried at fresh delta values before
// being reported as a failure.
CheckResult check_triple_agreement(int max_total, const Rational& delta0,
                                   const std::vector<Rational>& retries);

// Cell-module intertwiner dimensions match the free-dot group pair.
CheckResult check_hom_duality(const Rational& delta0);

// Commutativity, associativity, and the one-sided classical sector of
// the tower ring.
CheckResult check_ring_properties(int max_total);

struct VerifyOptions {
    bool full = false;
    Rational delta0 = Rational(104729);
    std::vector<Rational> retries{Rational(99991), Rational(1000003)};
    unsigned long long seed = 2024;
};

// All suites at quick or full bounds, sorted by suite name.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

} // namespace wba
