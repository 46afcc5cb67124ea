#pragma once

#include <gmpxx.h>

#include <string>

#include "wba/errors.hpp"

namespace wba {

// Exact rational scalars. All arithmetic in the library is over Q; no
// floating point is used anywhere.
using Rational = mpq_class;

// Renders q as "num/den" with the denominator always explicit and positive.
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num", "num/den", optional leading minus. Throws RangeError on a
// zero denominator or malformed text.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw RangeError("empty rational literal");
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') pos = 1;
    if (pos >= text.size()) throw RangeError("malformed rational literal: " + text);
    bool seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/' && !seen_slash && i + 1 < text.size()) {
            seen_slash = true;
            continue;
        }
        if (c < '0' || c > '9') throw RangeError("malformed rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw RangeError("malformed rational literal: " + text);
    if (q.get_den() == 0) throw RangeError("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

// Guard for specialization points used by the matrix oracles. Small integer
// values of delta0 can make cell modules degenerate.
inline void require_generic_delta(const Rational& delta0) {
    if (delta0.get_den() == 1) {
        mpz_class num = delta0.get_num();
        if (num >= -8 && num <= 8) {
            throw GenericDeltaViolation(
                "delta0 = " + rational_to_string(delta0) +
                " is an integer in [-8, 8]; pick a generic value");
        }
    }
}

} // namespace wba
