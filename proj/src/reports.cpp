#include "clab/reports.hpp"

#include <sstream>

namespace clab {

using nlohmann::ordered_json;

namespace {

constexpr int kDisplayDigits = 4;

ordered_json point_labels(const std::vector<PointId>& points) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : points) arr.push_back(p.label);
    return arr;
}

ordered_json violations_to_json(const std::vector<Violation>& violations) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json node;
        node["x"] = v.x.label;
        node["y"] = v.y.label;
        node["lhs"] = scalar_to_json(v.lhs);
        node["rhs"] = scalar_to_json(v.rhs);
        arr.push_back(std::move(node));
    }
    return arr;
}

} // namespace

ordered_json scalar_to_json(const Scalar& s) {
    ordered_json node;
    node["exact"] = s.exact();
    if (s.exact()) {
        node["value"] = s.lo().str();
    } else {
        node["lo"] = s.lo().str();
        node["hi"] = s.hi().str();
    }
    node["decimal"] = s.decimal_str(kDisplayDigits);
    return node;
}

ordered_json to_json(const MetricAxiomReport& report) {
    ordered_json doc;
    doc["operation"] = "check-metric";
    doc["pass"] = report.pass;
    doc["pairs_checked"] = report.pairs_checked;
    doc["triples_checked"] = report.triples_checked;
    doc["method_note"] = report.method_note;
    ordered_json arr = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json node;
        node["axiom"] = v.axiom == MetricViolation::Axiom::Identity   ? "identity"
                        : v.axiom == MetricViolation::Axiom::Symmetry ? "symmetry"
                                                                      : "triangle";
        node["x"] = v.x.label;
        node["y"] = v.y.label;
        if (v.z) node["z"] = v.z->label;
        node["detail"] = v.detail;
        arr.push_back(std::move(node));
    }
    doc["violations"] = std::move(arr);
    return doc;
}

ordered_json to_json(const OrbitStats& stats) {
    ordered_json doc;
    doc["operation"] = "orbit";
    doc["start"] = stats.orbit.front().label;
    doc["orbit"] = point_labels(stats.orbit);
    doc["tail_entry"] = stats.tail_entry;
    doc["diameter"] = stats.diameter.str();
    doc["diameter_decimal"] = stats.diameter.decimal_str(kDisplayDigits);
    return doc;
}

ordered_json to_json(const FixPointReport& report) {
    ordered_json doc;
    doc["operation"] = "fixpoints";
    doc["fixed_points"] = point_labels(report.fixed_points);
    doc["unique"] = report.unique;
    return doc;
}

ordered_json to_json(const IterationTrace& trace) {
    ordered_json doc;
    doc["operation"] = "iterate";
    doc["start"] = trace.start.label;
    switch (trace.status) {
        case IterationTrace::Status::Converged:
            doc["status"] = "converged";
            doc["limit"] = trace.limit->label;
            doc["steps_to_fix"] = trace.steps_to_fix;
            break;
        case IterationTrace::Status::Cycling:
            doc["status"] = "cycling";
            doc["cycle"] = point_labels(trace.cycle);
            break;
        case IterationTrace::Status::BudgetExhausted:
            doc["status"] = "budget-exhausted";
            break;
    }
    doc["steps"] = point_labels(trace.steps);
    return doc;
}

ordered_json to_json(const CertificationReport& report) {
    ordered_json doc;
    doc["operation"] = "certify";
    doc["verdict"] = verdict_name(report.verdict);
    doc["pairs_checked"] = report.pairs_checked;
    if (report.worst_margin) {
        doc["worst_margin"] = scalar_to_json(*report.worst_margin);
    }
    doc["violations"] = violations_to_json(report.violations);
    if (!report.indeterminate_pairs.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& [x, y] : report.indeterminate_pairs) {
            arr.push_back({{"x", x.label}, {"y", y.label}});
        }
        doc["indeterminate_pairs"] = std::move(arr);
    }
    doc["window_note"] = report.window_note;
    doc["domain_note"] = report.domain_note;
    if (!report.excluded_points.empty()) {
        doc["excluded_points"] = point_labels(report.excluded_points);
    }
    doc["phi_checked"] = report.phi_checked;
    doc["phi_check_overridden"] = report.phi_check_overridden;
    doc["phi_note"] = report.phi_note;
    doc["precision_digits"] = report.precision_digits;
    doc["early_exit"] = report.early_exit;
    if (report.fixed_point_check) {
        doc["fixed_point_check"] = verdict_name(*report.fixed_point_check);
        doc["fixed_point_violations"] = violations_to_json(report.fixed_point_violations);
    }
    return doc;
}

ordered_json to_json(const TheoremReport& report) {
    ordered_json doc;
    doc["operation"] = "validate";
    doc["outcome"] = report.outcome == TheoremReport::Outcome::Holds            ? "holds"
                     : report.outcome == TheoremReport::Outcome::Counterexample ? "THEOREM COUNTEREXAMPLE"
                                                                                : "not-applicable";
    doc["claim"] = report.claim;
    doc["detail"] = report.detail;
    if (report.outcome != TheoremReport::Outcome::NotApplicable) {
        doc["certification"] = to_json(report.certification);
        doc["fixed_points"] = point_labels(report.fixed.fixed_points);
        if (!report.nonconverging_starts.empty()) {
            doc["nonconverging_starts"] = point_labels(report.nonconverging_starts);
        }
    }
    return doc;
}

ordered_json to_json(const ComparisonReport& report) {
    ordered_json doc;
    doc["operation"] = "compare";
    doc["kind"] = report.kind == ComparisonReport::Kind::SeparationWitness ? "separation-witness"
                  : report.kind == ComparisonReport::Kind::BothCertified   ? "both-certified"
                                                                           : "pairwise-implication";
    doc["verdict_a"] = verdict_name(report.verdict_a);
    doc["verdict_b"] = verdict_name(report.verdict_b);
    if (report.witness) {
        ordered_json node;
        node["x"] = report.witness->x.label;
        node["y"] = report.witness->y.label;
        node["lhs"] = scalar_to_json(report.witness->lhs);
        node["rhs_b"] = scalar_to_json(report.witness->rhs);
        doc["witness"] = std::move(node);
    }
    doc["domain_note"] = report.domain_note;
    return doc;
}

ordered_json to_json(const CauchyReport& report) {
    ordered_json doc;
    doc["operation"] = "cauchy-diagnostics";
    doc["start"] = report.start.label;
    ordered_json seq = ordered_json::array();
    for (const auto& d : report.diameter_sequence) seq.push_back(d.str());
    doc["diameter_sequence"] = std::move(seq);
    doc["nonincreasing"] = report.nonincreasing;
    doc["reaches_zero"] = report.reaches_zero;
    doc["trace_converged"] = report.trace_converged;
    doc["consistent"] = report.consistent;
    return doc;
}

ordered_json to_json(const HuntResult& result) {
    ordered_json doc;
    doc["operation"] = "falsify";
    doc["target"] = result.target.str();
    doc["seed"] = result.seed;
    doc["trials"] = result.trials;
    doc["certified_count"] = result.certified_count;
    ordered_json arr = ordered_json::array();
    for (const auto& f : result.findings) {
        ordered_json node;
        node["index"] = f.index;
        node["detail"] = f.detail;
        node["original_points"] = f.original_points;
        node["shrunk_points"] = f.shrunk_points;
        node["contraction"] = contraction_to_json(f.spec);
        if (f.spec_b) node["contraction_b"] = contraction_to_json(*f.spec_b);
        node["instance"] = instance_to_json(f.instance);
        arr.push_back(std::move(node));
    }
    doc["findings"] = std::move(arr);
    return doc;
}

ordered_json phi_check_to_json(const PhiSpec& phi, const Phi1Report& p1, const Phi2Report& p2) {
    ordered_json doc;
    doc["operation"] = "phi-check";
    doc["phi"] = phi_to_json(phi);
    ordered_json prop1;
    prop1["verdict"] = p1.verdict == PhiVerdict::AnalyticPass  ? "analytic-pass"
                       : p1.verdict == PhiVerdict::SampledPass ? "sampled-pass"
                                                               : "fail";
    if (p1.witness) prop1["witness"] = p1.witness->str();
    prop1["note"] = p1.note;
    doc["property1"] = std::move(prop1);
    ordered_json prop2;
    prop2["pass"] = p2.pass;
    ordered_json evidence = ordered_json::array();
    for (const auto& e : p2.evidence) {
        ordered_json node;
        node["epsilon"] = e.epsilon.str();
        node["delta"] = e.delta.str();
        node["mode"] = e.mode == Phi2Evidence::Mode::Analytic ? "analytic" : "sampled";
        evidence.push_back(std::move(node));
    }
    prop2["evidence"] = std::move(evidence);
    if (p2.failed_epsilon) prop2["failed_epsilon"] = p2.failed_epsilon->str();
    if (!p2.note.empty()) prop2["note"] = p2.note;
    doc["property2"] = std::move(prop2);
    return doc;
}

namespace {

std::string scalar_text(const ordered_json& node) {
    if (!node.is_object()) return node.dump();
    std::string out;
    if (node.value("exact", false)) {
        out = node["value"].get<std::string>();
    } else {
        out = "[" + node["lo"].get<std::string>() + ", " + node["hi"].get<std::string>() + "]";
    }
    const std::string dec = node.value("decimal", "");
    if (!dec.empty() && dec != out) out += " (~" + dec + ")";
    return out;
}

void pretty_lines(const ordered_json& doc, std::ostringstream& out, const std::string& indent);

void pretty_value(const std::string& key, const ordered_json& value, std::ostringstream& out,
                  const std::string& indent) {
    if (value.is_object() && value.contains("exact")) {
        out << indent << key << ": " << scalar_text(value) << "\n";
        return;
    }
    if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_structured())) {
        out << indent << key << ":\n";
        if (value.is_array()) {
            std::size_t shown = 0;
            for (const auto& item : value) {
                if (shown++ == 20) {
                    out << indent << "  ... (" << value.size() - 20 << " more)\n";
                    break;
                }
                out << indent << "  -\n";
                pretty_lines(item, out, indent + "    ");
            }
        } else {
            pretty_lines(value, out, indent + "  ");
        }
        return;
    }
    if (value.is_array()) {
        out << indent << key << ": [";
        std::size_t shown = 0;
        for (const auto& item : value) {
            if (shown == 24) {
                out << ", ... (" << value.size() - 24 << " more)";
                break;
            }
            out << (shown++ ? ", " : "") << (item.is_string() ? item.get<std::string>() : item.dump());
        }
        out << "]\n";
        return;
    }
    out << indent << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

void pretty_lines(const ordered_json& doc, std::ostringstream& out, const std::string& indent) {
    for (const auto& [key, value] : doc.items()) {
        pretty_value(key, value, out, indent);
    }
}

} // namespace

std::string pretty(const ordered_json& report) {
    std::ostringstream out;
    if (report.contains("operation")) {
        out << "== " << report["operation"].get<std::string>() << " ==\n";
    }
    pretty_lines(report, out, "");
    return out.str();
}

int exit_code_for(const ordered_json& report) {
    if (report.contains("verdict")) {
        const std::string v = report["verdict"].get<std::string>();
        if (v == "certified") return 0;
        if (v == "violated") return 1;
        return 2;
    }
    if (report.contains("pass")) return report["pass"].get<bool>() ? 0 : 1;
    if (report.contains("outcome")) {
        const std::string o = report["outcome"].get<std::string>();
        if (o == "holds") return 0;
        if (o == "THEOREM COUNTEREXAMPLE") return 1;
        return 2;
    }
    if (report.contains("findings")) {
        return report["findings"].empty() ? 0 : 1;
    }
    if (report.contains("summary")) {
        return report["summary"].value("failures", 0) == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace clab
