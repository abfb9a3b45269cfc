#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "clab/contraction.hpp"
#include "clab/self_map.hpp"

namespace clab {

// A fully validated in-memory instance: the space, optionally the map, the
// comparison function, and a declared contraction condition.
struct Instance {
    std::shared_ptr<const MetricSpace> space;
    std::optional<SelfMap> map;
    std::optional<PhiSpec> phi;
    std::optional<ContractionSpec> contraction;

    const SelfMap& require_map() const;
    const PhiSpec& require_phi() const;
};

// Instance file format (rationals are strings, "p/q" or integers):
//   {"space": {"kind":"absdiff-window","values":["1","2","4"]},
//    "map":   {"kind":"table","images":[0,2,1]}
//           | {"kind":"rule","name":"example10"}
//           | {"kind":"rule","name":"example7","params":{"a":"1","b":"2"}},
//    "phi":   {"family":"linear","k":"1/2"} | {"family":"parity-linear","k":"5/6"}
//           | {"family":"zero"} | {"family":"piecewise-table","breakpoints":[["0","0"],...]},
//    "contraction": {"variant":"type2","alpha":"0","beta":"0","gamma":"0","delta":"5/6"}}
// "space" is required; matrix spaces use {"kind":"finite-matrix","labels":[...],
// "matrix":[["0","1/2"],...]}. Parse errors name the offending field.
Instance instance_from_json(const nlohmann::json& doc);
Instance load_instance_file(const std::string& path);
Instance load_instance_string(const std::string& text);

nlohmann::ordered_json instance_to_json(const Instance& instance);
void save_instance_file(const Instance& instance, const std::string& path);

ContractionSpec contraction_from_json(const nlohmann::json& node, const std::string& where);
nlohmann::ordered_json contraction_to_json(const ContractionSpec& spec);
nlohmann::ordered_json phi_to_json(const PhiSpec& phi);

} // namespace clab
