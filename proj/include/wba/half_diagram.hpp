#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wba/diagram.hpp"

namespace wba {

/*
 * Half diagrams: a single row of r + s dots with l disjoint arcs, every
 * arc crossing the wall between positions r and r+1; the remaining
 * r + s - 2l dots are free.  Arcs are stored as (left, right) with
 * left <= r < right, sorted by left endpoint.
 */
struct HalfDiagram {
    int r = 0;
    int s = 0;
    std::vector<std::pair<int, int>> arcs;

    int n() const { return r + s; }
    int arc_count() const { return static_cast<int>(arcs.size()); }
    bool operator==(const HalfDiagram&) const = default;

    // Free dots on the requested side, ascending. side: 0 left, 1 right.
    std::vector<int> free_dots(int side) const;
};

struct HalfLess {
    bool operator()(const HalfDiagram& a, const HalfDiagram& b) const;
};

// Checks range, wall crossing, and disjointness; returns canonical form.
HalfDiagram validate_half(int r, int s, const std::vector<std::pair<int, int>>& arcs);

// All half diagrams on (r, s) with exactly l arcs, in canonical order.
std::vector<HalfDiagram> enumerate_half(int r, int s, int l);

// C(r, l) * C(s, l) * l!
unsigned long long half_dim(int r, int s, int l);

// The half diagram whose l arcs are nested tightly against the wall:
// (r-l+i, r+l+1-i) for i = 1..l.
HalfDiagram make_v0(int r, int s, int l);

/*
 * Action of a diagram on a half diagram: x is stacked above v, with x's
 * bottom row glued to v's dots.  The result is empty when two free dots
 * of v become joined (the arc count would grow).  Otherwise the image
 * has the same number of arcs, `loops` counts erased closed curves, and
 * the two label maps record where each free dot of v flows: left_map[i]
 * is the 0-based index, among the image's free dots on the left side,
 * reached from v's i-th left free dot.  Free dots never change sides.
 */
struct HalfAction {
    long loops = 0;
    HalfDiagram image;
    std::vector<int> left_map;
    std::vector<int> right_map;
};

std::optional<HalfAction> act(const WalledDiagram& x, const HalfDiagram& v);

// delta^{-l} times the diagram with the nested arc pattern on both rows
// and vertical strands elsewhere. Squares to itself.
AlgebraElement make_idempotent(int r, int s, int l);

} // namespace wba
