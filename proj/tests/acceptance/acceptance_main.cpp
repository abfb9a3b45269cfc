// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Criteria 1-5 and 8 run end-to-end through the shared-library C API; the
// property suites (6, 7) and the phi evidence scans (9) drive the core
// directly.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "clab/corpus.hpp"
#include "clab/falsify.hpp"
#include "clab/reports.hpp"
#include "contraction_lab.h"

using clab::ContractionSpec;
using clab::PhiSpec;
using clab::Rational;
using json = nlohmann::json;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    if (!pass) ++g_failures;
    std::printf("%s criterion %d [%6.2fs] %s%s%s\n", pass ? "PASS" : "FAIL", id, seconds,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

json run_capi(clab_status expected, clab_status actual, clab_report* handle, bool& ok) {
    if (actual != expected || handle == nullptr) {
        ok = false;
        if (handle == nullptr) return json::object();
    }
    const json doc = json::parse(clab_report_json(handle));
    clab_report_free(handle);
    return doc;
}

bool in_class_a(long v) { return v >= 7 && v % 4 == 3; }
bool in_class_b(long v) { return v % 2 == 1 && !in_class_a(v); }

// 1. Example 10 reproduction: type2 certification and the unique fixed
//    point on the 200-window, exact, under 10 seconds.
void criterion1() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab_instance* instance = nullptr;
    ok = clab_instance_corpus("example10", 200, &instance) == CLAB_OK;
    if (ok) {
        clab_report* handle = nullptr;
        const clab_status rc = clab_certify(instance, nullptr, nullptr, &handle);
        const json cert = run_capi(CLAB_OK, rc, handle, ok);
        ok = ok && cert.value("verdict", "") == "certified" && cert["violations"].empty();
        detail = "verdict=" + cert.value("verdict", "?") +
                 ", violations=" + std::to_string(cert["violations"].size());

        clab_report* fix_handle = nullptr;
        const clab_status fix_rc = clab_fixpoints(instance, &fix_handle);
        const json fix = run_capi(CLAB_OK, fix_rc, fix_handle, ok);
        ok = ok && fix["fixed_points"] == json::array({"1"}) && fix.value("unique", false);
        detail += ", fixpoints=" + fix["fixed_points"].dump();
    }
    clab_instance_free(instance);
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 10.0;
    report(1, "example10 window [1,200]: type2(delta=5/6) certified, Fix = {1}", ok, detail,
           elapsed);
}

// 2. Remark reproduction: tmmax violated with an A/B witness at lhs 1,
//    rhs 0, while type3 certifies.
void criterion2() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab_instance* instance = nullptr;
    ok = clab_instance_corpus("example10", 200, &instance) == CLAB_OK;
    if (ok) {
        clab_contraction tm{};
        tm.variant = "tmmax";
        clab_report* tm_handle = nullptr;
        const clab_status tm_rc = clab_certify(instance, &tm, nullptr, &tm_handle);
        const json tm_doc = run_capi(CLAB_VIOLATED, tm_rc, tm_handle, ok);
        ok = ok && tm_doc.value("verdict", "") == "violated";
        bool witness = false;
        for (const auto& v : tm_doc.value("violations", json::array())) {
            const long x = std::stol(v["x"].get<std::string>());
            const long y = std::stol(v["y"].get<std::string>());
            const bool ab = (in_class_a(x) && in_class_b(y)) || (in_class_a(y) && in_class_b(x));
            if (ab && v["lhs"]["value"] == "1" && v["rhs"]["value"] == "0") {
                witness = true;
                break;
            }
        }
        ok = ok && witness;
        detail = witness ? "A/B witness with lhs 1, rhs 0 present" : "no A/B witness found";

        clab_contraction t3{};
        t3.variant = "type3";
        clab_report* t3_handle = nullptr;
        const clab_status t3_rc = clab_certify(instance, &t3, nullptr, &t3_handle);
        const json t3_doc = run_capi(CLAB_OK, t3_rc, t3_handle, ok);
        ok = ok && t3_doc.value("verdict", "") == "certified";
        detail += "; type3=" + t3_doc.value("verdict", "?");
    }
    clab_instance_free(instance);
    report(2, "example10: tmmax violated (A/B witness, lhs 1 > rhs 0), type3 certified", ok,
           detail, timer.seconds());
}

// 3. Example 7 reproduction: type1 certified for both coefficient triples
//    with lhs identically zero; fixed points {1, 2}.
void criterion3() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab_instance* instance = nullptr;
    ok = clab_instance_corpus("example7", 0, &instance) == CLAB_OK;
    if (ok) {
        for (const char* coeff : {"1/4", "1/10"}) {
            clab_contraction t1{};
            t1.variant = "type1";
            t1.alpha = coeff;
            t1.beta = coeff;
            t1.gamma = coeff;
            clab_report* handle = nullptr;
            const clab_status rc = clab_certify(instance, &t1, nullptr, &handle);
            const json doc = run_capi(CLAB_OK, rc, handle, ok);
            ok = ok && doc.value("verdict", "") == "certified" && doc["violations"].empty();
            detail += std::string(coeff) + ":" + doc.value("verdict", "?") + " ";
        }
        clab_report* fix_handle = nullptr;
        const clab_status fix_rc = clab_fixpoints(instance, &fix_handle);
        const json fix = run_capi(CLAB_OK, fix_rc, fix_handle, ok);
        ok = ok && fix["fixed_points"] == json::array({"1", "2"}) && !fix.value("unique", true);
        detail += "fixpoints=" + fix["fixed_points"].dump();
    }
    clab_instance_free(instance);

    // lhs = D(fx, fy) vanishes on the whole type1 domain X \ Fix(f).
    const auto core = clab::corpus_instance("example7");
    const auto& map = core.require_map();
    const auto& space = map.space();
    for (std::size_t i = 0; i < space.size() && ok; ++i) {
        for (std::size_t j = i; j < space.size(); ++j) {
            if (map.is_fixed(i) || map.is_fixed(j)) continue;
            if (!space.distance(map.image(i), map.image(j)).is_zero()) {
                ok = false;
                detail += "; nonzero lhs at (" + space.point(i).label + "," +
                          space.point(j).label + ")";
                break;
            }
        }
    }
    report(3, "example7 grid: type1 certified for (1/4,1/4,1/4) and (1/10,1/10,1/10), lhs == 0, "
              "Fix = {1,2}",
           ok, detail, timer.seconds());
}

// 4. Picard convergence: every window point reaches 1 within 2 steps,
//    under 1 second.
void criterion4() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const auto instance = clab::corpus_instance("example10");
    const auto& map = instance.require_map();
    const auto& space = map.space();
    std::size_t worst = 0;
    for (const auto& start : space.points()) {
        const auto trace = clab::iterate(map, start, space.size() + 1);
        if (trace.status != clab::IterationTrace::Status::Converged ||
            trace.limit->label != "1") {
            ok = false;
            detail = "start " + start.label + " did not converge to 1";
            break;
        }
        worst = std::max(worst, trace.steps_to_fix);
    }
    ok = ok && worst <= 2;
    if (detail.empty()) detail = "max steps to fixed point = " + std::to_string(worst);

    // Spot-check the same behavior through the C API.
    clab_instance* capi_instance = nullptr;
    ok = ok && clab_instance_corpus("example10", 200, &capi_instance) == CLAB_OK;
    if (capi_instance != nullptr) {
        clab_report* handle = nullptr;
        const clab_status rc = clab_iterate(capi_instance, "7", nullptr, &handle);
        const json doc = run_capi(CLAB_OK, rc, handle, ok);
        ok = ok && doc.value("status", "") == "converged" && doc.value("steps_to_fix", -1) == 2;
        clab_instance_free(capi_instance);
    }
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 1.0;
    report(4, "example10: every start converges to 1 in <= 2 steps", ok, detail, elapsed);
}

// 5. Table cross-check: the four-case table renders with recomputed bounds;
//    bound >= lhs is the gate, decimal mismatches are informational.
void criterion5() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab_report* handle = nullptr;
    const clab_status rc = clab_corpus_run(200, nullptr, &handle);
    const json doc = run_capi(CLAB_OK, rc, handle, ok);
    ok = ok && doc["summary"]["failures"] == 0;

    bool table_found = false;
    for (const auto& section : doc.value("instances", json::array())) {
        if (section.value("name", "") != "example10") continue;
        const auto& table = section["case_table"];
        table_found = table.size() == 4;
        int mismatches = 0;
        for (const auto& row : table) {
            if (!row["inequality_holds"].get<bool>()) {
                ok = false;
                detail += "case " + row["case"].dump() + " inequality fails; ";
            }
            if (!row["matches_reported_decimal"].get<bool>()) ++mismatches;
        }
        detail += "4 cases rendered, " + std::to_string(mismatches) +
                  " informational decimal mismatches";
    }
    ok = ok && table_found;
    report(5, "corpus run: example10 case table, bound >= lhs per case", ok, detail,
           timer.seconds());
}

// 6. Property suite: orbit diameter sequences are nonincreasing and hit 0
//    exactly when the trace converges, over 10^4 seeded instances.
void criterion6() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab::GeneratorConfig config;
    config.seed = 601;
    clab::InstanceGenerator generator(config);
    std::size_t points_checked = 0;
    for (std::size_t index = 0; index < 10000 && ok; ++index) {
        const auto instance = generator.generate(index);
        const auto& map = instance.require_map();
        for (const auto& start : map.space().points()) {
            const auto diag = clab::cauchy_diagnostics(map, start, 0);
            ++points_checked;
            if (!diag.nonincreasing || !diag.consistent) {
                ok = false;
                detail = "failure at seed 601 index " + std::to_string(index) + " start " +
                         start.label;
                break;
            }
        }
    }
    if (ok) detail = std::to_string(points_checked) + " orbit sequences checked, zero failures";
    report(6, "property: orbit diameter sequences nonincreasing, zero iff converged (10^4)", ok,
           detail, timer.seconds());
}

// 7. Property suite: class inclusions on 10^4 random instances.
void criterion7() {
    Timer timer;
    bool ok = true;
    std::string detail;

    clab::GeneratorConfig config;
    config.seed = 701;
    clab::InstanceGenerator generator(config);
    clab::CertifyOptions fast;
    fast.early_exit = true;
    fast.threads = 1;

    std::size_t type2_certified = 0;
    std::size_t tmmax_certified = 0;
    for (std::size_t index = 0; index < 10000 && ok; ++index) {
        const auto instance = generator.generate(index);
        const auto& map = instance.require_map();
        const auto& phi = instance.require_phi();
        const auto spec2 = generator.random_spec(clab::Variant::TypeII, index);

        const bool t2 = clab::certify(map, phi, spec2, fast).verdict == clab::Verdict::Certified;
        const bool tm = clab::certify(map, phi, ContractionSpec::tmmax(), fast).verdict ==
                        clab::Verdict::Certified;
        if (t2 || tm) {
            const bool t3 =
                clab::certify(map, phi, ContractionSpec::type3(), fast).verdict ==
                clab::Verdict::Certified;
            if (t2) ++type2_certified;
            if (tm) ++tmmax_certified;
            if (!t3) {
                ok = false;
                detail = "inclusion failure at index " + std::to_string(index);
            }
        }
    }
    if (ok) {
        detail = std::to_string(type2_certified) + " type2-certified and " +
                 std::to_string(tmmax_certified) + " tmmax-certified instances all type3-certified";
        ok = type2_certified > 0 && tmmax_certified > 0; // the suite must be non-vacuous
    }
    report(7, "property: type2 => type3 and tmmax => type3 on 10^4 instances", ok, detail,
           timer.seconds());
}

// 8. Theorem falsification: 10^4 trials per target, zero findings.
void criterion8() {
    Timer timer;
    bool ok = true;
    std::string detail;

    for (const char* target : {"theorem:type2", "theorem:type3", "theorem:type1"}) {
        clab_report* handle = nullptr;
        const clab_status rc = clab_falsify(target, 801, 10000, nullptr, 0, nullptr, &handle);
        const json doc = run_capi(CLAB_OK, rc, handle, ok);
        const std::size_t findings = doc.value("findings", json::array()).size();
        const long certified = doc.value("certified_count", 0L);
        detail += std::string(target) + ": " + std::to_string(findings) + " findings / " +
                  std::to_string(certified) + " certified; ";
        if (rc != CLAB_OK || findings != 0) {
            ok = false;
            detail += "(replayable instance in report) ";
        }
        // The hunt must actually exercise certified instances.
        if (certified == 0) {
            ok = false;
            detail += "(vacuous hunt) ";
        }
    }
    report(8, "falsify theorem:type{1,2,3} x 10^4 trials: zero findings", ok, detail,
           timer.seconds());
}

// 9. Phi evidence: analytic deltas match the worked values and survive
//    dense scans.
void criterion9() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const auto linear = PhiSpec::linear(Rational(1, 2));
    const auto parity = PhiSpec::parity_linear(Rational(5, 6));
    const std::vector<Rational> epsilons = {Rational(1, 10), Rational(1), Rational(10)};

    const auto check = [&](const PhiSpec& phi, const Rational& expected_ratio,
                           const std::string& name) {
        const auto report2 = clab::check_phi_property2(phi, epsilons);
        if (!report2.pass || report2.evidence.size() != epsilons.size()) {
            ok = false;
            detail += name + ": property (2) failed; ";
            return;
        }
        for (const auto& evidence : report2.evidence) {
            if (evidence.delta != evidence.epsilon * expected_ratio) {
                ok = false;
                detail += name + ": delta mismatch at eps=" + evidence.epsilon.str() + "; ";
            }
            for (int i = 1; i <= 1000; ++i) {
                const Rational t = evidence.epsilon + evidence.delta * Rational(i, 1001);
                if (phi.eval(t) > evidence.epsilon) {
                    ok = false;
                    detail += name + ": scan violation at t=" + t.str() + "; ";
                    break;
                }
            }
        }
    };
    check(linear, Rational(1), "linear(1/2)");    // delta = eps
    check(parity, Rational(1, 5), "parity(5/6)"); // delta = eps/5
    if (ok) detail = "delta = eps and eps/5 confirmed; 3x2 dense scans (10^3 points) clean";
    report(9, "phi property (2) evidence matches the worked deltas and survives dense scans", ok,
           detail, timer.seconds());
}

} // namespace

int main() {
    std::printf("contraction-lab acceptance suite\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("ALL 9 CRITERIA PASS\n");
        return 0;
    }
    std::printf("%d CRITERIA FAILED\n", g_failures);
    return 1;
}
