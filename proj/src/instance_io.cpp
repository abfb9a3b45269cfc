#include "clab/instance.hpp"

#include <fstream>
#include <sstream>

namespace clab {

using nlohmann::json;
using nlohmann::ordered_json;

const SelfMap& Instance::require_map() const {
    if (!map) throw InvariantError("instance has no map");
    return *map;
}

const PhiSpec& Instance::require_phi() const {
    if (!phi) throw InvariantError("instance has no phi");
    return *phi;
}

namespace {

Rational parse_rational_field(const json& node, const std::string& where) {
    if (node.is_number_integer()) return Rational(node.get<long>());
    if (!node.is_string()) throw ParseError(where + ": expected a rational string");
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

const json& require_field(const json& node, const std::string& key, const std::string& where) {
    const auto it = node.find(key);
    if (it == node.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

std::shared_ptr<const MetricSpace> space_from_json(const json& node) {
    if (!node.is_object()) throw ParseError("space: expected an object");
    const std::string kind = require_field(node, "kind", "space").get<std::string>();

    MetricSpace space = [&] {
        if (kind == "absdiff-window") {
            const json& values = require_field(node, "values", "space");
            if (!values.is_array()) throw ParseError("space.values: expected an array");
            std::vector<Rational> parsed;
            parsed.reserve(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                parsed.push_back(
                    parse_rational_field(values[i], "space.values[" + std::to_string(i) + "]"));
            }
            return MetricSpace::absdiff(std::move(parsed));
        }
        if (kind == "finite-matrix") {
            const json& labels = require_field(node, "labels", "space");
            const json& matrix = require_field(node, "matrix", "space");
            if (!labels.is_array()) throw ParseError("space.labels: expected an array");
            if (!matrix.is_array()) throw ParseError("space.matrix: expected an array");
            std::vector<std::string> parsed_labels;
            for (const auto& l : labels) parsed_labels.push_back(l.get<std::string>());
            std::vector<std::vector<Rational>> parsed_matrix;
            for (std::size_t i = 0; i < matrix.size(); ++i) {
                if (!matrix[i].is_array()) {
                    throw ParseError("space.matrix[" + std::to_string(i) + "]: expected an array");
                }
                std::vector<Rational> row;
                for (std::size_t j = 0; j < matrix[i].size(); ++j) {
                    row.push_back(parse_rational_field(
                        matrix[i][j],
                        "space.matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
                }
                parsed_matrix.push_back(std::move(row));
            }
            return MetricSpace::finite_matrix(std::move(parsed_labels), std::move(parsed_matrix));
        }
        throw ParseError("space.kind: unknown kind '" + kind + "'");
    }();

    if (node.contains("window_note")) {
        space.set_window(node["window_note"].get<std::string>(),
                         node.value("window_of_larger", false));
    }
    return std::make_shared<const MetricSpace>(std::move(space));
}

SelfMap map_from_json(const json& node, std::shared_ptr<const MetricSpace> space) {
    if (!node.is_object()) throw ParseError("map: expected an object");
    const std::string kind = require_field(node, "kind", "map").get<std::string>();
    if (kind == "table") {
        const json& images = require_field(node, "images", "map");
        if (!images.is_array()) throw ParseError("map.images: expected an array");
        std::vector<std::size_t> parsed;
        parsed.reserve(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (!images[i].is_number_unsigned() && !images[i].is_number_integer()) {
                throw ParseError("map.images[" + std::to_string(i) + "]: expected a point index");
            }
            const long v = images[i].get<long>();
            if (v < 0) {
                throw ParseError("map.images[" + std::to_string(i) + "]: negative point index");
            }
            parsed.push_back(static_cast<std::size_t>(v));
        }
        return SelfMap::table(std::move(space), std::move(parsed));
    }
    if (kind == "rule") {
        const std::string name = require_field(node, "name", "map").get<std::string>();
        std::map<std::string, Rational> params;
        if (node.contains("params")) {
            for (const auto& [key, value] : node["params"].items()) {
                params.emplace(key, parse_rational_field(value, "map.params." + key));
            }
        }
        return SelfMap::rule(std::move(space), name, params);
    }
    throw ParseError("map.kind: unknown kind '" + kind + "'");
}

PhiSpec phi_from_json(const json& node) {
    if (!node.is_object()) throw ParseError("phi: expected an object");
    const std::string family = require_field(node, "family", "phi").get<std::string>();
    if (family == "linear") {
        return PhiSpec::linear(parse_rational_field(require_field(node, "k", "phi"), "phi.k"));
    }
    if (family == "parity-linear") {
        return PhiSpec::parity_linear(
            parse_rational_field(require_field(node, "k", "phi"), "phi.k"));
    }
    if (family == "zero") return PhiSpec::zero();
    if (family == "piecewise-table") {
        const json& bps = require_field(node, "breakpoints", "phi");
        if (!bps.is_array()) throw ParseError("phi.breakpoints: expected an array");
        std::vector<std::pair<Rational, Rational>> parsed;
        for (std::size_t i = 0; i < bps.size(); ++i) {
            const std::string where = "phi.breakpoints[" + std::to_string(i) + "]";
            if (!bps[i].is_array() || bps[i].size() != 2) {
                throw ParseError(where + ": expected a [t, value] pair");
            }
            parsed.emplace_back(parse_rational_field(bps[i][0], where + "[0]"),
                                parse_rational_field(bps[i][1], where + "[1]"));
        }
        return PhiSpec::piecewise(std::move(parsed));
    }
    throw ParseError("phi.family: unknown family '" + family + "'");
}

} // namespace

ContractionSpec contraction_from_json(const json& node, const std::string& where) {
    if (!node.is_object()) throw ParseError(where + ": expected an object");
    const std::string name = require_field(node, "variant", where).get<std::string>();
    const auto variant = variant_from_name(name);
    if (!variant) throw ParseError(where + ".variant: unknown variant '" + name + "'");

    const auto coeff = [&](const char* key) {
        if (!node.contains(key)) return Rational(0);
        return parse_rational_field(node[key], where + "." + key);
    };
    try {
        switch (*variant) {
            case Variant::TypeI: return ContractionSpec::type1(coeff("alpha"), coeff("beta"), coeff("gamma"));
            case Variant::TypeII:
                return ContractionSpec::type2(coeff("alpha"), coeff("beta"), coeff("gamma"),
                                              coeff("delta"));
            case Variant::TypeIII: return ContractionSpec::type3();
            case Variant::HardyRogers:
                return ContractionSpec::hardy_rogers(coeff("alpha"), coeff("beta"), coeff("gamma"),
                                                     coeff("delta"), coeff("mu"));
            case Variant::HegedusSzilagyi: return ContractionSpec::hegedus_szilagyi();
            case Variant::TMMax: return ContractionSpec::tmmax();
        }
    } catch (const InvariantError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": unreachable");
}

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
    Instance instance;
    instance.space = space_from_json(require_field(doc, "space", "instance"));
    if (doc.contains("map")) {
        instance.map = map_from_json(doc["map"], instance.space);
    }
    if (doc.contains("phi")) {
        instance.phi = phi_from_json(doc["phi"]);
    }
    if (doc.contains("contraction")) {
        instance.contraction = contraction_from_json(doc["contraction"], "contraction");
    }
    return instance;
}

Instance load_instance_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
    return instance_from_json(doc);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_instance_string(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

nlohmann::ordered_json phi_to_json(const PhiSpec& phi) {
    ordered_json node;
    node["family"] = phi.family_name();
    switch (phi.family()) {
        case PhiFamily::Linear:
        case PhiFamily::ParityLinear:
            node["k"] = phi.k().str();
            break;
        case PhiFamily::Zero:
            break;
        case PhiFamily::PiecewiseTable: {
            ordered_json bps = ordered_json::array();
            for (const auto& [t, v] : phi.breakpoints()) {
                bps.push_back({t.str(), v.str()});
            }
            node["breakpoints"] = std::move(bps);
            break;
        }
    }
    return node;
}

nlohmann::ordered_json contraction_to_json(const ContractionSpec& spec) {
    ordered_json node;
    node["variant"] = variant_name(spec.variant());
    switch (spec.variant()) {
        case Variant::TypeI:
            node["alpha"] = spec.alpha().str();
            node["beta"] = spec.beta().str();
            node["gamma"] = spec.gamma().str();
            break;
        case Variant::TypeII:
            node["alpha"] = spec.alpha().str();
            node["beta"] = spec.beta().str();
            node["gamma"] = spec.gamma().str();
            node["delta"] = spec.delta().str();
            break;
        case Variant::HardyRogers:
            node["alpha"] = spec.alpha().str();
            node["beta"] = spec.beta().str();
            node["gamma"] = spec.gamma().str();
            node["delta"] = spec.delta().str();
            node["mu"] = spec.mu().str();
            break;
        default:
            break;
    }
    return node;
}

nlohmann::ordered_json instance_to_json(const Instance& instance) {
    ordered_json doc;
    const MetricSpace& space = *instance.space;

    ordered_json space_node;
    if (space.kind() == SpaceKind::AbsdiffWindow) {
        space_node["kind"] = "absdiff-window";
        ordered_json values = ordered_json::array();
        for (std::size_t i = 0; i < space.size(); ++i) values.push_back(space.value(i).str());
        space_node["values"] = std::move(values);
    } else {
        space_node["kind"] = "finite-matrix";
        ordered_json labels = ordered_json::array();
        for (const auto& p : space.points()) labels.push_back(p.label);
        space_node["labels"] = std::move(labels);
        ordered_json matrix = ordered_json::array();
        for (std::size_t i = 0; i < space.size(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.distance(i, j).str());
            matrix.push_back(std::move(row));
        }
        space_node["matrix"] = std::move(matrix);
    }
    if (!space.window_note().empty()) {
        space_node["window_note"] = space.window_note();
        space_node["window_of_larger"] = space.window_of_larger();
    }
    doc["space"] = std::move(space_node);

    if (instance.map) {
        ordered_json map_node;
        if (instance.map->kind() == MapKind::Rule) {
            map_node["kind"] = "rule";
            map_node["name"] = instance.map->rule_name();
            if (!instance.map->rule_params().empty()) {
                ordered_json params;
                for (const auto& [key, value] : instance.map->rule_params()) {
                    params[key] = value.str();
                }
                map_node["params"] = std::move(params);
            }
        } else {
            map_node["kind"] = "table";
            map_node["images"] = instance.map->images();
        }
        doc["map"] = std::move(map_node);
    }
    if (instance.phi) doc["phi"] = phi_to_json(*instance.phi);
    if (instance.contraction) doc["contraction"] = contraction_to_json(*instance.contraction);
    return doc;
}

void save_instance_file(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write instance file '" + path + "'");
    out << instance_to_json(instance).dump(2) << "\n";
}

} // namespace clab
