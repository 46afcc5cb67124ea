#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wba/branching.hpp"
#include "wba/diagram.hpp"
#include "wba/grothendieck.hpp"
#include "wba/half_diagram.hpp"

namespace wba {

using Json = nlohmann::ordered_json;

/*
 * Serialization contracts.
 *
 * Laurent coefficients are arrays of [exponent, "num/den"] pairs sorted
 * by exponent, with the denominator always explicit.  Diagrams are
 * {"r", "s", "pairs"} with bottom dots encoded as negative integers;
 * round trips are bit exact because both sides use the canonical pair
 * order.  Half diagrams are {"r", "s", "arcs"} sorted by left endpoint.
 * Partitions are plain integer arrays.  Top-level documents carry
 * "schema": 1.
 *
 * Malformed input raises SerializationError (or the validation error of
 * the underlying object, such as WallViolation for a bad pairing).
 */

Json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const Json& j);

Json diagram_to_json(const WalledDiagram& d);
WalledDiagram diagram_from_json(const Json& j);

Json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

Json half_to_json(const HalfDiagram& v);
HalfDiagram half_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json cell_to_json(const CellLabel& c);
CellLabel cell_from_json(const Json& j);

Json shape_to_json(const SplitShape& sh);
SplitShape shape_from_json(const Json& j);

/*
 * Command line grammars.  Partitions are comma separated parts with "0"
 * for the empty partition; cells are "lamL;lamR;l=K"; split shapes are
 * "r1,s1|r2,s2".  No whitespace is allowed.
 */
std::string partition_to_text(const Partition& p);
Partition parse_partition(const std::string& text);

std::string cell_to_text(const CellLabel& c);
CellLabel parse_cell(const std::string& text);

std::string shape_to_text(const SplitShape& sh);
SplitShape parse_shape(const std::string& text);

// "(1,-2)(2,6)..." for human-facing listings.
std::string diagram_to_text(const WalledDiagram& d);

/*
 * Report documents.
 *
 * Restriction: {"schema", "shape", "cell", "terms"} with terms sorted by
 * (cell1, cell2).  Structure constants: {"schema", "shape", "nu1",
 * "nu2", "result"} with result sorted by cell label.
 */
Json restriction_report(const SplitShape& sh, const CellLabel& cell,
                        const std::vector<RestrictionTerm>& terms);
Json structure_report(const SplitShape& sh, const CellLabel& nu1, const CellLabel& nu2,
                      const GrothClass& result);

/*
 * CSV renderers.  Column orders are fixed:
 *   structure constants: l, lamL, lamR, coeff
 *   restriction:         l1, lamL1, lamR1, l2, lamL2, lamR2, mult
 *   elements:            coeff, pairs
 * Partition and pair columns are double quoted because their text forms
 * contain commas.  Rows use "\n" line endings.
 */
std::string structure_to_csv(const GrothClass& result);
std::string restriction_to_csv(const std::vector<RestrictionTerm>& terms);
std::string element_to_csv(const AlgebraElement& x);

// Plain text renderers, one term per line, deterministic order.
std::string element_to_pretty(const AlgebraElement& x);
std::string restriction_to_pretty(const SplitShape& sh, const CellLabel& cell,
                                  const std::vector<RestrictionTerm>& terms);
std::string structure_to_pretty(const SplitShape& sh, const CellLabel& nu1,
                                const CellLabel& nu2, const GrothClass& result);

} // namespace wba
