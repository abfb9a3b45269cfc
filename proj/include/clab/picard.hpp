#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clab/contraction.hpp"

namespace clab {

// One Picard iteration x, fx, f^2 x, ... with its outcome.
struct IterationTrace {
    enum class Status { Converged, Cycling, BudgetExhausted };

    PointId start;
    std::vector<PointId> steps; // visited points, starting at x0
    Status status = Status::BudgetExhausted;
    std::optional<PointId> limit;  // Converged
    std::size_t steps_to_fix = 0;  // Converged: index of the first fixed point
    std::vector<PointId> cycle;    // Cycling
};

// Stops at the first fixed point, the first detected cycle, or the budget.
IterationTrace iterate(const SelfMap& map, const PointId& x0, std::size_t max_steps);

// Empirical check of the fixed-point theorem conclusions on a certified
// finite space. Window samples of larger spaces are refused: the theorems
// need the ambient space, and a window is a different object.
struct TheoremReport {
    enum class Outcome { Holds, Counterexample, NotApplicable };

    Outcome outcome = Outcome::NotApplicable;
    std::string claim;
    std::string detail;
    CertificationReport certification;
    FixPointReport fixed;
    std::vector<PointId> nonconverging_starts;
};

TheoremReport validate_theorem(const SelfMap& map, const PhiSpec& phi,
                               const ContractionSpec& spec, const CertifyOptions& options = {});

// Orbit-diameter view of the convergence argument: D_f along the iteration,
// which must be nonincreasing and must reach 0 exactly when the trace
// converges.
struct CauchyReport {
    PointId start;
    std::vector<Rational> diameter_sequence;
    bool nonincreasing = true;
    bool reaches_zero = false;
    bool trace_converged = false;
    bool consistent = false; // reaches_zero == trace_converged
};

CauchyReport cauchy_diagnostics(const SelfMap& map, const PointId& x0, std::size_t max_steps);

} // namespace clab
