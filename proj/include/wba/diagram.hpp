#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wba/laurent.hpp"

namespace wba {

/*
 * Walled Brauer diagrams.
 *
 * A diagram on parameters (r, s) is a perfect matching on two rows of
 * n = r + s dots.  Top dots are 1..n, bottom dots are -1..-n (the JSON
 * encoding uses the same signed integers).  The wall sits between
 * positions r and r+1 in each row.  Edges joining two dots in the same
 * row must cross the wall; edges joining a top dot to a bottom dot must
 * not.
 *
 * Canonical form: each pair lists the smaller dot first and pairs are
 * sorted, both with respect to the dot order
 *     1 < 2 < ... < n < -1 < -2 < ... < -n.
 */
struct WalledDiagram {
    int r = 0;
    int s = 0;
    std::vector<std::pair<int, int>> pairs;

    int n() const { return r + s; }
    bool operator==(const WalledDiagram&) const = default;
};

// Strict weak order on canonical diagrams, usable as a map key comparator.
struct DiagramLess {
    bool operator()(const WalledDiagram& a, const WalledDiagram& b) const;
};

// Checks the matching and wall constraints and returns the canonical form.
// Throws NotAMatching, WallViolation, or RangeError.
WalledDiagram validate(int r, int s, const std::vector<std::pair<int, int>>& pairing);

// The identity diagram: i matched with -i.
WalledDiagram identity_diagram(int r, int s);

// Vertical stacking a over b: a's bottom row is glued to b's top row.
// `loops` counts the closed curves erased from the middle.
struct ConcatResult {
    long loops = 0;
    WalledDiagram diagram;
};
ConcatResult concat(const WalledDiagram& a, const WalledDiagram& b);

// Number of edges joining the top row to the bottom row.
int propagating_count(const WalledDiagram& d);

// Number of edges with both endpoints in the top row.
int top_arc_count(const WalledDiagram& d);

// Top-bottom mirror image. An anti-automorphism of the diagram algebra.
WalledDiagram involution_star(const WalledDiagram& d);

// All diagrams on (r, s) in canonical order. Throws BoundExceeded when
// r + s > bound.
std::vector<WalledDiagram> enumerate_basis(int r, int s, int bound = 8);

// Dimension of the diagram algebra, by the summation formula over the
// number of cross-wall arcs per row.
unsigned long long basis_count(int r, int s);

/*
 * Finite linear combinations of diagrams with Laurent polynomial
 * coefficients.  Zero coefficients are never stored.
 */
struct AlgebraElement {
    int r = 0;
    int s = 0;
    std::map<WalledDiagram, Laurent, DiagramLess> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgebraElement& other) const {
        return r == other.r && s == other.s && terms == other.terms;
    }
};

AlgebraElement to_element(const WalledDiagram& d, const Laurent& coeff = Laurent::one());
AlgebraElement algebra_zero(int r, int s);
AlgebraElement algebra_one(int r, int s);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Laurent& c);

// Bilinear extension of stacking; each closed loop contributes one factor
// of delta.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Linear extension of the mirror involution.
AlgebraElement involution_star(const AlgebraElement& a);

} // namespace wba
