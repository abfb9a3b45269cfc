#pragma once

#include <string>

#include "clab/rational.hpp"

namespace clab {

enum class Cmp { Less, Equal, Greater, Indeterminate };

// A scalar that is either exact (lo == hi) or an interval [lo, hi] produced
// by directed-rounding exponentiation. Interval endpoints are themselves
// exact rationals, so all interval arithmetic below is free of rounding.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational exact) : lo_(exact), hi_(std::move(exact)) {} // NOLINT: implicit by design
    Scalar(long n) : Scalar(Rational(n)) {}                       // NOLINT
    Scalar(Rational lo, Rational hi);
    static Scalar from_bounds(const RationalBounds& b) { return Scalar(b.lo, b.hi); }

    bool exact() const { return lo_ == hi_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational value() const { return exact() ? lo_ : (lo_ + hi_) / Rational(2); }
    Rational radius() const { return (hi_ - lo_) / Rational(2); }

    Scalar operator+(const Scalar& o) const { return Scalar(lo_ + o.lo_, hi_ + o.hi_); }
    Scalar operator-(const Scalar& o) const { return Scalar(lo_ - o.hi_, hi_ - o.lo_); }
    // Requires both operands nonnegative (all certifier values are).
    Scalar operator*(const Scalar& o) const;

    static Scalar max(const Scalar& a, const Scalar& b) {
        return Scalar(clab::max(a.lo_, b.lo_), clab::max(a.hi_, b.hi_));
    }

    // Three-valued comparison; Indeterminate when the intervals overlap in a
    // way the error radius cannot resolve.
    static Cmp compare(const Scalar& a, const Scalar& b);
    // Certification predicates: true only when provable from the bounds.
    static bool definitely_le(const Scalar& a, const Scalar& b) { return a.hi_ <= b.lo_; }
    static bool definitely_gt(const Scalar& a, const Scalar& b) { return a.lo_ > b.hi_; }

    // Deterministic total order for margin reduction: lexicographic (lo, hi).
    static bool order_before(const Scalar& a, const Scalar& b) {
        return a.lo_ != b.lo_ ? a.lo_ < b.lo_ : a.hi_ < b.hi_;
    }

    // "p/q" for exact values, "[lo, hi]" for intervals.
    std::string str() const;
    std::string decimal_str(int digits) const;

    bool operator==(const Scalar& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Rational lo_;
    Rational hi_;
};

} // namespace clab
