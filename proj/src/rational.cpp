#include "clab/rational.hpp"

#include <cctype>
#include <sstream>

namespace clab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_mpz(const std::string& digits, bool negative, const std::string& original) {
    if (!all_digits(digits)) {
        throw ParseError("bad rational '" + original + "'");
    }
    mpz_class z(digits, 10);
    return negative ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ParseError("zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw ParseError("bad rational '" + text + "'");

    const auto slash = s.find('/');
    const auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos) {
        throw ParseError("bad rational '" + text + "'");
    }

    mpz_class num, den;
    if (slash != std::string::npos) {
        num = parse_mpz(s.substr(0, slash), negative, text);
        den = parse_mpz(s.substr(slash + 1), false, text);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    } else if (dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw ParseError("bad rational '" + text + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        num = (whole.empty() ? mpz_class(0) : parse_mpz(whole, false, text)) * scale +
              (frac.empty() ? mpz_class(0) : parse_mpz(frac, false, text));
        if (negative) num = -num;
        den = scale;
    } else {
        num = parse_mpz(s, negative, text);
        den = 1;
    }

    mpq_class q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return Rational(std::move(q));
}

std::optional<Rational> Rational::try_parse(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal_str(int digits) const {
    if (digits < 0) digits = 0;
    const bool neg = is_negative();
    mpz_class num = ::abs(v_.get_num());
    const mpz_class& den = v_.get_den();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // Round half away from zero on the scaled integer.
    mpz_class scaled = (num * scale * 2 + den) / (den * 2);
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        if (!f.empty()) out += "." + f;
    }
    return out;
}

bool Rational::is_even_integer() const {
    if (!is_integer()) return false;
    return mpz_even_p(v_.get_num().get_mpz_t()) != 0;
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) {
        throw DomainError("value " + str() + " is not a machine integer");
    }
    return v_.get_num().get_si();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

RationalBounds pow_bounds(const Rational& base, const Rational& exponent, int digits) {
    if (base.is_negative()) throw DomainError("pow_bounds: negative base " + base.str());
    if (exponent.is_negative()) throw DomainError("pow_bounds: negative exponent " + exponent.str());
    if (digits < 1) throw DomainError("pow_bounds: digits must be >= 1");

    if (exponent.is_zero()) return {Rational(1), Rational(1), true};
    if (base.is_zero()) return {Rational(0), Rational(0), true};

    const mpz_class& pn = exponent.raw().get_num();
    const mpz_class& pd = exponent.raw().get_den();
    if (pn > 1000000 || pd > 1000000) {
        throw DomainError("pow_bounds: exponent " + exponent.str() + " too large");
    }
    const unsigned long upn = pn.get_ui();
    const unsigned long upd = pd.get_ui();

    // t = base^pn, exact.
    mpz_class tn, td;
    mpz_pow_ui(tn.get_mpz_t(), base.raw().get_num().get_mpz_t(), upn);
    mpz_pow_ui(td.get_mpz_t(), base.raw().get_den().get_mpz_t(), upn);
    if (upd == 1) {
        mpq_class t;
        t.get_num() = tn;
        t.get_den() = td;
        t.canonicalize();
        return {Rational(t), Rational(t), true};
    }

    // Exact pd-th root when both sides are perfect powers.
    mpz_class rn, rd;
    const bool en = mpz_root(rn.get_mpz_t(), tn.get_mpz_t(), upd) != 0;
    const bool ed = mpz_root(rd.get_mpz_t(), td.get_mpz_t(), upd) != 0;
    if (en && ed) {
        mpq_class r;
        r.get_num() = rn;
        r.get_den() = rd;
        r.canonicalize();
        return {Rational(r), Rational(r), true};
    }

    // Scaled floor root: L <= t^(1/pd) * 10^digits < L + 1, so
    // L/10^digits <= base^exponent <= (L+1)/10^digits.
    mpz_class scale_pd;
    mpz_ui_pow_ui(scale_pd.get_mpz_t(), 10, static_cast<unsigned long>(digits) * upd);
    mpz_class m;
    mpz_fdiv_q(m.get_mpz_t(), mpz_class(tn * scale_pd).get_mpz_t(), td.get_mpz_t());
    mpz_class root;
    mpz_root(root.get_mpz_t(), m.get_mpz_t(), upd);

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class lo, hi;
    lo.get_num() = root;
    lo.get_den() = scale;
    lo.canonicalize();
    hi.get_num() = root + 1;
    hi.get_den() = scale;
    hi.canonicalize();
    return {Rational(lo), Rational(hi), false};
}

} // namespace clab
