#include "clab/scalar.hpp"

namespace clab {

Scalar::Scalar(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw DomainError("scalar interval with hi < lo");
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (lo_.is_negative() || o.lo_.is_negative()) {
        throw DomainError("scalar product requires nonnegative operands");
    }
    return Scalar(lo_ * o.lo_, hi_ * o.hi_);
}

Cmp Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.exact() && b.exact()) {
        const auto c = a.lo_ <=> b.lo_;
        return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
    }
    if (a.hi_ < b.lo_) return Cmp::Less;
    if (a.lo_ > b.hi_) return Cmp::Greater;
    return Cmp::Indeterminate;
}

std::string Scalar::str() const {
    if (exact()) return lo_.str();
    return "[" + lo_.str() + ", " + hi_.str() + "]";
}

std::string Scalar::decimal_str(int digits) const {
    if (exact()) return lo_.decimal_str(digits);
    return "[" + lo_.decimal_str(digits) + ", " + hi_.decimal_str(digits) + "]";
}

} // namespace clab
