#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "clab/error.hpp"

namespace clab {

// Exact rational scalar. Thin wrapper over GMP's mpq_class that adds the
// instance-file string forms ("p/q", integers, finite decimals) and the few
// derived predicates the certifiers need. Always canonical (gcd-reduced,
// positive denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p/q", "-p/q", plain integers, and finite decimals ("2.5").
    // Throws ParseError (zero denominators included).
    static Rational parse(const std::string& text);
    static std::optional<Rational> try_parse(const std::string& text);

    // Canonical form: "n" when the denominator is 1, else "p/q".
    std::string str() const;
    // Rounded decimal rendering for display, never used in comparisons.
    std::string decimal_str(int digits) const;
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    // "t is an even integer" in the parity rule's sense; 0 counts as even.
    bool is_even_integer() const;
    // Throws DomainError unless the value is an integer fitting in long.
    long to_long() const;

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational abs() const { return is_negative() ? -*this : *this; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    bool operator==(const Rational& o) const { return cmp(v_, o.v_) == 0; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Result of base^exponent with directed rounding. When the value is rational
// (integer exponent, perfect root) it is returned exactly and lo == hi.
// Otherwise lo <= base^exponent <= hi with hi - lo == 10^-digits.
struct RationalBounds {
    Rational lo;
    Rational hi;
    bool exact = true;
};

// base >= 0, exponent >= 0, digits >= 1. Throws DomainError outside that
// domain or when the exponent's numerator/denominator exceed 10^6 (the
// scaled-root blowup guard).
RationalBounds pow_bounds(const Rational& base, const Rational& exponent, int digits);

} // namespace clab
