#include "clab/picard.hpp"

namespace clab {

IterationTrace iterate(const SelfMap& map, const PointId& x0, std::size_t max_steps) {
    const MetricSpace& space = map.space();
    if (x0.index >= space.size()) throw DomainError("iteration start point out of range");

    IterationTrace trace;
    trace.start = space.point(x0.index);
    std::vector<std::size_t> first_seen(space.size(), SIZE_MAX);

    std::size_t current = x0.index;
    trace.steps.push_back(space.point(current));
    first_seen[current] = 0;

    for (std::size_t step = 0; step <= max_steps; ++step) {
        if (map.is_fixed(current)) {
            trace.status = IterationTrace::Status::Converged;
            trace.limit = space.point(current);
            trace.steps_to_fix = trace.steps.size() - 1;
            return trace;
        }
        if (step == max_steps) break;
        const std::size_t next = map.image(current);
        if (first_seen[next] != SIZE_MAX) {
            trace.status = IterationTrace::Status::Cycling;
            trace.cycle.assign(trace.steps.begin() + static_cast<long>(first_seen[next]),
                               trace.steps.end());
            return trace;
        }
        first_seen[next] = trace.steps.size();
        trace.steps.push_back(space.point(next));
        current = next;
    }
    trace.status = IterationTrace::Status::BudgetExhausted;
    return trace;
}

TheoremReport validate_theorem(const SelfMap& map, const PhiSpec& phi,
                               const ContractionSpec& spec, const CertifyOptions& options) {
    const MetricSpace& space = map.space();
    TheoremReport report;

    switch (spec.variant()) {
        case Variant::TypeI:
            report.claim = "existence: Fix(f) is nonempty";
            break;
        case Variant::TypeII:
        case Variant::TypeIII:
            report.claim = "unique fixed point; every Picard sequence converges to it";
            break;
        default:
            report.outcome = TheoremReport::Outcome::NotApplicable;
            report.detail = "theorem validation covers type1/type2/type3 conditions only";
            return report;
    }

    if (space.window_of_larger()) {
        report.outcome = TheoremReport::Outcome::NotApplicable;
        report.detail = "space is a window of a larger space (" + space.window_note() +
                        "); materialize a standalone truncation for theorem claims";
        return report;
    }

    report.certification = certify(map, phi, spec, options);
    report.fixed = fixed_points(map);
    if (report.certification.verdict != Verdict::Certified) {
        report.outcome = TheoremReport::Outcome::NotApplicable;
        report.detail = "contraction condition is " +
                        verdict_name(report.certification.verdict) +
                        ", so the theorem's hypothesis does not hold";
        return report;
    }

    if (spec.variant() == Variant::TypeI) {
        if (report.fixed.fixed_points.empty()) {
            report.outcome = TheoremReport::Outcome::Counterexample;
            report.detail = "certified type1 instance with empty Fix(f)";
        } else {
            report.outcome = TheoremReport::Outcome::Holds;
            report.detail = "|Fix(f)| = " + std::to_string(report.fixed.fixed_points.size()) +
                            " >= 1; uniqueness not asserted for type1";
        }
        return report;
    }

    if (report.fixed.fixed_points.size() != 1) {
        report.outcome = TheoremReport::Outcome::Counterexample;
        report.detail =
            "certified instance with |Fix(f)| = " + std::to_string(report.fixed.fixed_points.size());
        return report;
    }
    const PointId fix = report.fixed.fixed_points.front();
    const std::size_t budget = options.max_steps == 0 ? default_max_steps(space) : options.max_steps;
    for (const PointId& start : space.points()) {
        const IterationTrace trace = iterate(map, start, budget);
        if (trace.status != IterationTrace::Status::Converged || !(*trace.limit == fix)) {
            report.nonconverging_starts.push_back(start);
        }
    }
    if (!report.nonconverging_starts.empty()) {
        report.outcome = TheoremReport::Outcome::Counterexample;
        report.detail = std::to_string(report.nonconverging_starts.size()) +
                        " start points do not converge to the fixed point";
        return report;
    }
    report.outcome = TheoremReport::Outcome::Holds;
    report.detail = "unique fixed point '" + fix.label + "'; every start point converges to it";
    return report;
}

CauchyReport cauchy_diagnostics(const SelfMap& map, const PointId& x0, std::size_t max_steps) {
    const std::size_t budget = max_steps == 0 ? default_max_steps(map.space()) : max_steps;
    CauchyReport report;
    report.start = map.space().point(x0.index);

    // One D_f value per step until the orbit is inside its cycle; D_f is
    // constant from there on.
    const OrbitStats stats = compute_orbit(map, report.start, budget);
    const std::size_t n = stats.orbit.size();
    report.diameter_sequence = orbit_diameter_sequence(map, report.start, n, budget);

    for (std::size_t i = 1; i < report.diameter_sequence.size(); ++i) {
        if (report.diameter_sequence[i] > report.diameter_sequence[i - 1]) {
            report.nonincreasing = false;
        }
    }
    report.reaches_zero = report.diameter_sequence.back().is_zero();
    const IterationTrace trace = iterate(map, report.start, budget);
    report.trace_converged = trace.status == IterationTrace::Status::Converged;
    report.consistent = report.reaches_zero == report.trace_converged;
    return report;
}

} // namespace clab
