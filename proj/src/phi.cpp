#include "clab/phi.hpp"

#include <algorithm>

namespace clab {

PhiSpec PhiSpec::linear(const Rational& k) {
    if (k.is_negative() || k >= Rational(1)) {
        throw InvariantError("linear phi requires 0 <= k < 1; got k = " + k.str());
    }
    PhiSpec p;
    p.family_ = PhiFamily::Linear;
    p.k_ = k;
    return p;
}

PhiSpec PhiSpec::parity_linear(const Rational& k) {
    if (k.is_negative() || k >= Rational(1)) {
        throw InvariantError("parity-linear phi requires 0 <= k < 1; got k = " + k.str());
    }
    PhiSpec p;
    p.family_ = PhiFamily::ParityLinear;
    p.k_ = k;
    return p;
}

PhiSpec PhiSpec::zero() {
    PhiSpec p;
    p.family_ = PhiFamily::Zero;
    return p;
}

PhiSpec PhiSpec::piecewise(std::vector<std::pair<Rational, Rational>> breakpoints) {
    if (breakpoints.size() < 2) throw InvariantError("piecewise phi needs >= 2 breakpoints");
    if (!breakpoints.front().first.is_zero() || !breakpoints.front().second.is_zero()) {
        throw InvariantError("piecewise phi must start at (0, 0)");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i].second.is_negative()) {
            throw InvariantError("piecewise phi values must be nonnegative");
        }
        if (i > 0 && breakpoints[i].first <= breakpoints[i - 1].first) {
            throw InvariantError("piecewise phi breakpoints must be strictly increasing");
        }
    }
    // Extension slope must keep the codomain nonnegative.
    const auto& a = breakpoints[breakpoints.size() - 2];
    const auto& b = breakpoints.back();
    if (b.second < a.second) {
        throw InvariantError("piecewise phi tail slope must be nonnegative");
    }
    PhiSpec p;
    p.family_ = PhiFamily::PiecewiseTable;
    p.breakpoints_ = std::move(breakpoints);
    return p;
}

Rational PhiSpec::eval(const Rational& t) const {
    if (t.is_negative()) throw DomainError("phi is defined on [0,inf); got t = " + t.str());
    switch (family_) {
        case PhiFamily::Zero:
            return Rational(0);
        case PhiFamily::Linear:
            return k_ * t;
        case PhiFamily::ParityLinear:
            return t.is_even_integer() ? Rational(0) : k_ * t;
        case PhiFamily::PiecewiseTable: {
            // Segment lookup; beyond the last breakpoint the final slope
            // continues.
            std::size_t hi = breakpoints_.size() - 1;
            if (t <= breakpoints_[hi].first) {
                for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
                    if (t <= breakpoints_[i].first) {
                        hi = i;
                        break;
                    }
                }
            }
            const auto& [t0, v0] = breakpoints_[hi - 1];
            const auto& [t1, v1] = breakpoints_[hi];
            const Rational slope = (v1 - v0) / (t1 - t0);
            return v1 + slope * (t - t1); // exact for t within and beyond the segment
        }
    }
    throw DomainError("unreachable phi family");
}

std::string PhiSpec::family_name() const {
    switch (family_) {
        case PhiFamily::Linear: return "linear";
        case PhiFamily::ParityLinear: return "parity-linear";
        case PhiFamily::Zero: return "zero";
        case PhiFamily::PiecewiseTable: return "piecewise-table";
    }
    return "?";
}

std::string PhiSpec::describe() const {
    switch (family_) {
        case PhiFamily::Linear: return "phi(t) = " + k_.str() + "*t";
        case PhiFamily::ParityLinear:
            return "phi(t) = 0 at even integers, " + k_.str() + "*t elsewhere";
        case PhiFamily::Zero: return "phi = 0";
        case PhiFamily::PiecewiseTable:
            return "piecewise-linear table with " + std::to_string(breakpoints_.size()) +
                   " breakpoints";
    }
    return "?";
}

Phi1Report check_phi_property1(const PhiSpec& phi, const std::vector<Rational>& sample_grid) {
    for (const auto& t : sample_grid) {
        if (!t.is_positive()) throw DomainError("property (1) grid values must be positive");
    }

    Phi1Report report;
    if (phi.family() != PhiFamily::PiecewiseTable) {
        // k < 1 is a construction invariant, so phi(t) <= k*t < t for t > 0.
        report.verdict = PhiVerdict::AnalyticPass;
        report.note = "k < 1 gives phi(t) <= k*t < t for all t > 0";
        return report;
    }

    std::vector<Rational> samples = sample_grid;
    const auto& bps = phi.breakpoints();
    for (std::size_t i = 1; i < bps.size(); ++i) {
        samples.push_back(bps[i].first);
        const Rational mid = (bps[i - 1].first + bps[i].first) / Rational(2);
        if (mid.is_positive()) samples.push_back(mid);
    }
    // Beyond the last breakpoint phi(t) - t is affine with slope
    // (tail_slope - 1); a crossing exists iff that difference ever reaches 0.
    const auto& [tl, vl] = bps.back();
    const auto& [tp, vp] = bps[bps.size() - 2];
    const Rational tail_slope = (vl - vp) / (tl - tp);
    if (tail_slope >= Rational(1)) {
        if (vl >= tl) {
            samples.push_back(tl.is_positive() ? tl : tl + Rational(1));
        } else {
            // phi(t) = t at t = tl + (tl - vl)/(slope - 1) when slope > 1.
            if (tail_slope > Rational(1)) {
                samples.push_back(tl + (tl - vl) / (tail_slope - Rational(1)));
            }
        }
    }
    std::sort(samples.begin(), samples.end());
    for (const auto& t : samples) {
        if (!t.is_positive()) continue;
        if (phi.eval(t) >= t) {
            report.verdict = PhiVerdict::Fail;
            report.witness = t;
            report.note = "phi(" + t.str() + ") = " + phi.eval(t).str() + " >= " + t.str();
            return report;
        }
    }
    report.verdict = PhiVerdict::SampledPass;
    report.note = "checked at breakpoints, segment midpoints, tail crossing, and grid";
    return report;
}

namespace {

// sup of phi over (eps, eps+delta) for a continuous piecewise-linear phi is
// attained (as a limit) at the interval ends or at interior breakpoints.
bool piecewise_delta_works(const PhiSpec& phi, const Rational& eps, const Rational& delta) {
    const Rational end = eps + delta;
    // Continuity: phi(eps) > eps would force phi > eps just right of eps.
    if (phi.eval(eps) > eps) return false;
    if (phi.eval(end) > eps) return false;
    for (const auto& [t, v] : phi.breakpoints()) {
        if (t > eps && t < end && v > eps) return false;
    }
    return true;
}

} // namespace

Phi2Report check_phi_property2(const PhiSpec& phi, const std::vector<Rational>& epsilons) {
    Phi2Report report;
    for (const auto& eps : epsilons) {
        if (!eps.is_positive()) throw DomainError("property (2) requires epsilon > 0");

        if (phi.family() == PhiFamily::Zero ||
            ((phi.family() == PhiFamily::Linear || phi.family() == PhiFamily::ParityLinear) &&
             phi.k().is_zero())) {
            report.evidence.push_back({eps, eps, Phi2Evidence::Mode::Analytic});
            continue;
        }
        if (phi.family() == PhiFamily::Linear || phi.family() == PhiFamily::ParityLinear) {
            // t < eps + eps*(1-k)/k = eps/k gives k*t < eps; the parity
            // branch only replaces values by 0.
            const Rational delta = eps * (Rational(1) - phi.k()) / phi.k();
            report.evidence.push_back({eps, delta, Phi2Evidence::Mode::Analytic});
            continue;
        }

        // PiecewiseTable: shrink delta geometrically until the interval
        // certifies, disclosing sampled mode.
        Rational delta = eps;
        bool found = false;
        for (int i = 0; i < 40; ++i) {
            if (piecewise_delta_works(phi, eps, delta)) {
                found = true;
                break;
            }
            delta = delta / Rational(2);
        }
        if (!found) {
            report.pass = false;
            report.failed_epsilon = eps;
            report.note = "no delta in the geometric schedule certifies epsilon = " + eps.str();
            return report;
        }
        report.evidence.push_back({eps, delta, Phi2Evidence::Mode::Sampled});
    }
    return report;
}

} // namespace clab
