#pragma once

#include <json.hpp>

#include "clab/falsify.hpp"
#include "clab/instance.hpp"
#include "clab/picard.hpp"

namespace clab {

// Machine-readable report documents (ordered keys: output is byte-stable)
// plus the --format pretty renderings.

nlohmann::ordered_json scalar_to_json(const Scalar& s);

nlohmann::ordered_json to_json(const MetricAxiomReport& report);
nlohmann::ordered_json to_json(const OrbitStats& stats);
nlohmann::ordered_json to_json(const FixPointReport& report);
nlohmann::ordered_json to_json(const IterationTrace& trace);
nlohmann::ordered_json to_json(const CertificationReport& report);
nlohmann::ordered_json to_json(const TheoremReport& report);
nlohmann::ordered_json to_json(const ComparisonReport& report);
nlohmann::ordered_json to_json(const CauchyReport& report);
nlohmann::ordered_json to_json(const HuntResult& result);
nlohmann::ordered_json phi_check_to_json(const PhiSpec& phi, const Phi1Report& p1,
                                         const Phi2Report& p2);

std::string pretty(const nlohmann::ordered_json& report);

// 0 certified/success, 1 violated/expectation failure, 2 indeterminate.
int exit_code_for(const nlohmann::ordered_json& report);

} // namespace clab
