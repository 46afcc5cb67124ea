#pragma once

#include <stdexcept>
#include <string>

namespace wba {

/*
 * Error taxonomy shared across the library.  Every validation failure is
 * reported through one of these types so callers can react uniformly.
 */

// An edge joins two dots on the same side of the wall when it must cross,
// or crosses when it must not.
struct WallViolation : std::invalid_argument {
    explicit WallViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A pairing is not a perfect matching of the declared dot set.
struct NotAMatching : std::invalid_argument {
    explicit NotAMatching(const std::string& what) : std::invalid_argument(what) {}
};

// Two objects that must share (r, s) parameters do not.
struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration request exceeds the configured size bound.
struct BoundExceeded : std::length_error {
    explicit BoundExceeded(const std::string& what) : std::length_error(what) {}
};

// A numeric argument is outside its valid range (arc counts, sizes, labels).
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// An arc-count tuple violates a block capacity constraint.
struct InfeasibleTuple : std::invalid_argument {
    explicit InfeasibleTuple(const std::string& what) : std::invalid_argument(what) {}
};

// A split shape does not match the ambient (r, s), or a cell label does not
// match the algebra it is used with.
struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A brute-force computation was requested beyond its supported size.
struct SizeExceeded : std::length_error {
    explicit SizeExceeded(const std::string& what) : std::length_error(what) {}
};

// Two matrix representations indexed by different basis lists were combined.
struct BasisMismatch : std::invalid_argument {
    explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A coefficient evaluation hit a pole (negative delta power at delta0 = 0).
struct EvaluationError : std::domain_error {
    explicit EvaluationError(const std::string& what) : std::domain_error(what) {}
};

// delta0 lies in the small integer window where matrix checks can degenerate.
struct GenericDeltaViolation : std::invalid_argument {
    explicit GenericDeltaViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A document or command line literal does not match its declared format.
struct SerializationError : std::invalid_argument {
    explicit SerializationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace wba
