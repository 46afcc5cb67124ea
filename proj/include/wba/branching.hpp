#pragma once

#include <map>
#include <vector>

#include "wba/half_diagram.hpp"
#include "wba/partition.hpp"

namespace wba {

/*
 * Restriction bookkeeping for a split of (r, s) into two factors.
 *
 * The factor pair (r1, s1) and (r2, s2) occupies four blocks of the
 * one-row dot line 1..r+s:
 *     A = 1..r1, B = r1+1..r, C = r+1..r+s2, D = r+s2+1..r+s,
 * with factor one acting on A and D and factor two on B and C.  Arcs of
 * a half diagram join blocks AC, BD, AD or BC only; (t_ac, t_bd, t_ad,
 * t_bc) is its type tuple.
 */
struct SplitShape {
    int r1 = 0, s1 = 0, r2 = 0, s2 = 0;
    int r() const { return r1 + r2; }
    int s() const { return s1 + s2; }
    bool operator==(const SplitShape&) const = default;
    bool operator<(const SplitShape& o) const;
};

struct ArcTuple {
    int ac = 0, bd = 0, ad = 0, bc = 0;
    int sum() const { return ac + bd + ad + bc; }
    bool operator==(const ArcTuple&) const = default;
};

// Order compatible with the action: images move weakly downward. Sorts by
// t_ac ascending, then t_bd ascending, then t_ad descending, then t_bc
// descending.
struct TupleLess {
    bool operator()(const ArcTuple& a, const ArcTuple& b) const;
};

bool tuple_feasible(const SplitShape& shape, const ArcTuple& t);

// All feasible tuples with the given total, sorted by TupleLess.
std::vector<ArcTuple> enumerate_tuples(const SplitShape& shape, int l);

// Number of half diagrams on (r, s) whose arcs have exactly this type.
// Throws InfeasibleTuple when a block capacity is violated.
unsigned long long count_double_walled(const SplitShape& shape, const ArcTuple& t);

// Type tuple of a half diagram with respect to the block decomposition.
ArcTuple tuple_of(const SplitShape& shape, const HalfDiagram& v);

/*
 * Cell labels.  A cell of the (r, s) diagram algebra is an arc count l
 * together with partitions of r - l and s - l.
 */
struct CellLabel {
    int l = 0;
    Partition lamL;
    Partition lamR;
    bool operator==(const CellLabel&) const = default;
};

struct CellLess {
    bool operator()(const CellLabel& a, const CellLabel& b) const;
};

// Validates a cell label against the algebra parameters.
void require_cell(int r, int s, const CellLabel& cell);

// All cells of the (r, s) algebra in CellLess order.
std::vector<CellLabel> enumerate_cells(int r, int s);

// Dimension of the cell module: half diagram count times the two
// standard tableau counts.
unsigned long long cell_dim(int r, int s, const CellLabel& cell);

using CellPair = std::pair<CellLabel, CellLabel>;

struct CellPairLess {
    bool operator()(const CellPair& a, const CellPair& b) const;
};

struct RestrictionTerm {
    CellLabel cell1;
    CellLabel cell2;
    long long mult = 0;
    bool operator==(const RestrictionTerm&) const = default;
};

// Multiplicities of factor cell pairs in the filtration of the restricted
// cell module, keyed by (cell of factor one, cell of factor two).
std::map<CellPair, long long, CellPairLess> restriction_multiset(const SplitShape& shape,
                                                                 const CellLabel& cell);

// The same data flattened into terms sorted by (cell1, cell2).
std::vector<RestrictionTerm> restriction_terms(const SplitShape& shape, const CellLabel& cell);

} // namespace wba
