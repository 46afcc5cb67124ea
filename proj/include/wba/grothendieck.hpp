#pragma once

#include <map>

#include "wba/branching.hpp"

namespace wba {

/*
 * Tower Grothendieck ring. Cell labels over all algebra sizes form a
 * basis; a label determines its home parameters r = l + |lamL| and
 * s = l + |lamR|. The product of two basis classes is the class of the
 * induced outer tensor product of the two cell modules; its integer
 * coefficients are, by adjunction, the multiplicities of the pair in
 * the restriction filtration of each target cell module.
 */

int cell_r(const CellLabel& cell);
int cell_s(const CellLabel& cell);

// Integer combination of basis classes, zero coefficients omitted.
using GrothClass = std::map<CellLabel, long long, CellLess>;

// The class of a single cell. Throws ShapeMismatch on malformed labels.
GrothClass class_of(const CellLabel& cell);

// Coefficients of the product of two basis classes; memoized.
GrothClass structure_constants(const CellLabel& nu1, const CellLabel& nu2);

// Bilinear extension of the basis product.
GrothClass ring_multiply(const GrothClass& a, const GrothClass& b);

} // namespace wba
