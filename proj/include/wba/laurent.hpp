#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wba/rational.hpp"

namespace wba {

/*
 * Laurent polynomials in one variable delta with rational coefficients.
 * Terms are kept in a sorted map from exponent to coefficient and zero
 * coefficients are never stored, so structural equality is canonical
 * equality.  Negative exponents are first-class citizens (the normalized
 * arc idempotents need delta^{-l}).
 */
class Laurent {
public:
    Laurent() = default;

    // Constant polynomial.
    explicit Laurent(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit Laurent(long c) : Laurent(Rational(c)) {}

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rational(1)); }

    // c * delta^k
    static Laurent delta_power(long k, const Rational& c = Rational(1)) {
        Laurent p;
        if (c != 0) p.terms_[k] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    // Sorted (exponent, coefficient) view with no zero entries.
    const std::map<long, Rational>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
        return p;
    }

    Laurent& operator*=(const Laurent& other) { return *this = *this * other; }

    Laurent operator-() const {
        Laurent p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    Laurent scaled(const Rational& c) const {
        Laurent p;
        if (c != 0)
            for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
        return p;
    }

    bool operator==(const Laurent& other) const { return terms_ == other.terms_; }
    bool operator!=(const Laurent& other) const { return !(*this == other); }
    bool operator<(const Laurent& other) const { return terms_ < other.terms_; }

    // Exact evaluation at delta = delta0. Throws EvaluationError when a
    // negative exponent meets delta0 = 0.
    Rational evaluate(const Rational& delta0) const {
        Rational total(0);
        for (const auto& [e, c] : terms_) {
            if (e < 0 && delta0 == 0)
                throw EvaluationError("negative delta exponent evaluated at zero");
            total += c * rational_power(delta0, e);
        }
        return total;
    }

    // Human-readable form such as "delta^-1 + 3/2*delta^2". Deterministic:
    // exponent-ascending, canonical rational rendering.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += rational_to_string(c);
            if (e != 0) out += "*delta^" + std::to_string(e);
        }
        return out;
    }

private:
    void add_term(long e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Rational rational_power(const Rational& base, long e) {
        if (e == 0) return Rational(1);
        Rational b = base;
        long n = e;
        if (n < 0) {
            b = 1 / b;
            n = -n;
        }
        Rational acc(1);
        while (n > 0) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    std::map<long, Rational> terms_;
};

// Free-function aliases used throughout the library.
inline Laurent lp_add(const Laurent& a, const Laurent& b) { return a + b; }
inline Laurent lp_mul(const Laurent& a, const Laurent& b) { return a * b; }
inline Rational lp_eval(const Laurent& p, const Rational& delta0) { return p.evaluate(delta0); }

} // namespace wba
