#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wba/branching.hpp"
#include "wba/diagram.hpp"
#include "wba/rational.hpp"

namespace wba {

/*
 * Brute-force verification layer: explicit matrix models of the cell
 * modules at a numeric generic delta, seminormal matrices for small
 * symmetric groups, and intertwiner-rank computations. Everything here
 * is exact rational arithmetic; no tolerances anywhere.
 */

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix q_identity(std::size_t n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
QMatrix q_kron(const QMatrix& a, const QMatrix& b);
QMatrix q_scale(const QMatrix& a, const Rational& c);

// Row rank by Gaussian elimination; destroys its copy of the input.
std::size_t q_rank(QMatrix m);

// Dimension of the solution space of m x = 0.
std::size_t q_nullity(const QMatrix& m);

// Rows of a standard Young tableau, entries 1..n.
using Tableau = std::vector<std::vector<int>>;

// All standard tableaux of the given shape in lexicographic row order.
std::vector<Tableau> standard_tableaux(const Partition& lam);

// One-line permutations, perm[i] = image of i, all entries 0-based.
using Perm = std::vector<int>;

// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_permutations(int n);

// Function composition: (a after b)[i] = a[b[i]].
Perm compose(const Perm& a, const Perm& b);

/*
 * A representation given by one matrix per basis element of its
 * algebra. The basis ordering is owned by the caller and must agree
 * between any two reps fed to hom_space_dim.
 */
struct MatrixRep {
    std::size_t dimension = 0;
    std::vector<QMatrix> images;
};

// Matrix of one permutation in the seminormal basis of the Specht
// module, ordered like standard_tableaux(lam); memoized.
QMatrix specht_matrix_of(const Partition& lam, const Perm& sigma);

// Images of every permutation of all_permutations(n) on the Specht
// module. Throws SizeExceeded for n > 5.
MatrixRep specht_matrices(int n, const Partition& lam);

// Matrix of a single diagram on the cell module basis
// (half diagram, left tableau, right tableau), right tableau fastest.
QMatrix cell_matrix_of(int r, int s, const CellLabel& cell, const WalledDiagram& d,
                       const Rational& delta0);

// Images of every diagram of enumerate_basis(r, s) on the cell module.
// Throws SizeExceeded for r + s > 4.
MatrixRep cell_module_matrices(int r, int s, const CellLabel& cell, const Rational& delta0);

// Pointwise Kronecker product over the pair basis, second index fastest.
MatrixRep pair_rep(const MatrixRep& a, const MatrixRep& b);

// Dimension of the intertwiner space from repA to repB, computed as the
// null-space dimension of the stacked system T a(g) - b(g) T = 0 over
// every basis element g. Throws BasisMismatch on different basis sizes.
std::size_t hom_space_dim(const MatrixRep& a, const MatrixRep& b);

// Multiplicities of factor cell pairs in the restricted cell module,
// computed entirely from intertwiner ranks at delta0; zero entries are
// omitted. Throws SizeExceeded for r + s > 4.
std::map<CellPair, long long, CellPairLess> brute_restriction(const SplitShape& shape,
                                                              const CellLabel& cell,
                                                              const Rational& delta0);

} // namespace wba
