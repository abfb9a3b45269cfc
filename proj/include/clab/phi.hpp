#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clab/rational.hpp"

namespace clab {

enum class PhiFamily { Linear, ParityLinear, Zero, PiecewiseTable };

// A comparison function phi: [0,inf) -> [0,inf) from a closed-form family.
//   Linear        phi(t) = k*t, 0 <= k < 1
//   ParityLinear  phi(t) = 0 at even integers, k*t elsewhere
//   Zero          phi = 0
//   PiecewiseTable  continuous piecewise-linear through (t_i, v_i), last
//                   segment extended; exists for the falsifier and for
//                   feeding deliberately broken functions to the checkers.
class PhiSpec {
public:
    static PhiSpec linear(const Rational& k);
    static PhiSpec parity_linear(const Rational& k);
    static PhiSpec zero();
    static PhiSpec piecewise(std::vector<std::pair<Rational, Rational>> breakpoints);

    PhiFamily family() const { return family_; }
    const Rational& k() const { return k_; }
    const std::vector<std::pair<Rational, Rational>>& breakpoints() const { return breakpoints_; }

    // Exact evaluation; throws DomainError for t < 0.
    Rational eval(const Rational& t) const;

    std::string describe() const;
    std::string family_name() const;

    bool operator==(const PhiSpec& o) const = default;

private:
    PhiSpec() = default;

    PhiFamily family_ = PhiFamily::Zero;
    Rational k_;
    std::vector<std::pair<Rational, Rational>> breakpoints_;
};

enum class PhiVerdict { AnalyticPass, SampledPass, Fail };

// Property (1): phi(t) < t for every t > 0.
struct Phi1Report {
    PhiVerdict verdict = PhiVerdict::AnalyticPass;
    std::optional<Rational> witness; // t with phi(t) >= t
    std::string note;
};

// Property (2): for this epsilon there is a delta > 0 with phi(t) <= epsilon
// on (epsilon, epsilon + delta).
struct Phi2Evidence {
    Rational epsilon;
    Rational delta;
    enum class Mode { Analytic, Sampled } mode = Mode::Analytic;
};

struct Phi2Report {
    bool pass = true;
    std::vector<Phi2Evidence> evidence;
    std::optional<Rational> failed_epsilon;
    std::string note;
};

// Closed-form families certify analytically; PiecewiseTable is checked at
// breakpoints, segment midpoints, the tail, and the caller's grid.
Phi1Report check_phi_property1(const PhiSpec& phi, const std::vector<Rational>& sample_grid);

// Closed-form families return the analytic delta (epsilon*(1-k)/k for the
// linear families); PiecewiseTable searches a geometrically shrinking delta.
Phi2Report check_phi_property2(const PhiSpec& phi, const std::vector<Rational>& epsilons);

} // namespace clab
