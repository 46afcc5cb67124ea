#pragma once

#include "wba/diagram.hpp"

namespace wba {

/*
 * Size-increasing embeddings of diagram algebras.
 *
 * A diagram on (r, s) embeds into (r+n, s+m) in two complementary ways.
 * iota keeps the diagram on the outer columns and inserts vertical
 * strands in the middle; zeta centers the diagram across the wall and
 * inserts vertical strands on the outer columns.  The images of the two
 * embeddings commute elementwise, and gluing them gives the twisted
 * tensor product of diagrams.
 */

// d on (r, s) placed at columns 1..r and the last s columns of
// (r+n, s+m); columns r+1..r+n+m become vertical strands.
WalledDiagram iota(const WalledDiagram& d, int n, int m);

// d on (n, m) placed at columns r+1..r+n+m of (r+n, s+m); the outer
// r and s columns become vertical strands.
WalledDiagram zeta(const WalledDiagram& d, int r, int s);

// Linear extensions.
AlgebraElement iota(const AlgebraElement& x, int n, int m);
AlgebraElement zeta(const AlgebraElement& x, int r, int s);

// The twisted tensor product of a diagram on (r, s) with a diagram on
// (n, m): a single diagram on (r+n, s+m), computed both by direct block
// placement and as iota(a) stacked over zeta(b). The two constructions
// must agree and produce no closed loops.
WalledDiagram twisted_tensor(const WalledDiagram& a, const WalledDiagram& b);

// Bilinear extension of the twisted tensor; an injective homomorphism of
// algebras from the product of the two factors.
AlgebraElement embed_rho(const AlgebraElement& x, const AlgebraElement& y);

} // namespace wba
