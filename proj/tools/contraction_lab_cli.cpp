// contraction-lab: command-line front end over the C API.
//
// Subcommands: check-metric, phi-check, orbit, certify, iterate, fixpoints,
// validate, compare, falsify, corpus run, corpus emit. Reports are JSON by
// default (--format pretty for the tabular rendering). Exit codes: 0
// certified/success, 1 violated/expectation failure, 2 indeterminate/error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contraction_lab.h"

namespace {

struct GlobalFlags {
    std::string format = "json";
    long max_steps = 0;
    long window_max = 0;
    std::uint64_t seed = 1;
    int threads = 0;
    int precision = 0;
};

// Coefficient flags for one contraction condition; suffix distinguishes the
// two sides of `compare`.
struct ContractionFlags {
    std::string variant;
    std::string alpha, beta, gamma, delta, mu;
    bool include_fixed_points = false;

    void attach(CLI::App* cmd, const std::string& suffix = "") {
        cmd->add_option("--variant" + suffix, variant,
                        "type1|type2|type3|hardy-rogers|hegedus-szilagyi|tmmax");
        cmd->add_option("--alpha" + suffix, alpha, "rational coefficient");
        cmd->add_option("--beta" + suffix, beta, "rational coefficient");
        cmd->add_option("--gamma" + suffix, gamma, "rational coefficient");
        cmd->add_option("--delta" + suffix, delta, "rational coefficient");
        cmd->add_option("--mu" + suffix, mu, "rational coefficient (hardy-rogers)");
    }

    bool present() const { return !variant.empty(); }

    clab_contraction to_c() const {
        clab_contraction c{};
        c.variant = variant.c_str();
        c.alpha = alpha.empty() ? nullptr : alpha.c_str();
        c.beta = beta.empty() ? nullptr : beta.c_str();
        c.gamma = gamma.empty() ? nullptr : gamma.c_str();
        c.delta = delta.empty() ? nullptr : delta.c_str();
        c.mu = mu.empty() ? nullptr : mu.c_str();
        c.include_fixed_points = include_fixed_points ? 1 : 0;
        return c;
    }
};

clab_options make_options(const GlobalFlags& flags) {
    clab_options options{};
    options.max_steps = flags.max_steps;
    options.precision_digits = flags.precision;
    options.threads = flags.threads;
    options.window_max = flags.window_max;
    return options;
}

int print_report(clab_report* report, const GlobalFlags& flags) {
    if (report == nullptr) return 2;
    if (flags.format == "pretty") {
        std::cout << clab_report_pretty(report);
    } else {
        std::cout << clab_report_json(report) << "\n";
    }
    const int code = clab_report_exit_code(report);
    clab_report_free(report);
    return code;
}

int fail_with_last_error(clab_status status) {
    std::cerr << "error (" << static_cast<int>(status) << "): " << clab_last_error() << "\n";
    return 2;
}

clab_instance* load_or_die(const std::string& path) {
    clab_instance* instance = nullptr;
    const clab_status rc = clab_instance_load_file(path.c_str(), &instance);
    if (rc != CLAB_OK) {
        std::cerr << "error: " << clab_last_error() << "\n";
        std::exit(2);
    }
    return instance;
}

bool is_verdict_status(clab_status rc) {
    return rc == CLAB_OK || rc == CLAB_VIOLATED || rc == CLAB_INDETERMINATE;
}

int write_finding_files(const std::string& json_text, const std::string& out_dir) {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.contains("findings") || doc["findings"].empty()) return 0;
    std::filesystem::create_directories(out_dir);
    int written = 0;
    for (const auto& finding : doc["findings"]) {
        const std::string path =
            out_dir + "/finding-" + std::to_string(finding["index"].get<long>()) + ".json";
        std::ofstream out(path);
        out << finding["instance"].dump(2) << "\n";
        ++written;
        std::cerr << "wrote " << path << "\n";
    }
    return written;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contraction-lab: certify orbit-diameter contraction conditions, run Picard "
                 "iteration, and hunt for theorem counterexamples on finite metric spaces"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--format", flags.format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--max-steps", flags.max_steps, "orbit/iteration step budget (0: |X|+1)");
    app.add_option("--window-max", flags.window_max, "window bound for corpus instances");
    app.add_option("--seed", flags.seed, "random seed");
    app.add_option("--threads", flags.threads, "certification worker threads (0: auto)");
    app.add_option("--precision", flags.precision,
                   "decimal digits for type1 exponent bounds (0: CONTRACTION_LAB_PRECISION or 30)");
    app.fallthrough();

    std::string instance_path;
    std::vector<std::string> epsilons;
    std::string point_label;
    std::string from_label;
    std::string target = "theorem:type2";
    long trials = 1000;
    std::vector<std::string> inject;
    std::string out_dir;
    std::string corpus_name = "example10";
    std::string emit_path = "-";
    ContractionFlags cert_flags, flags_a, flags_b;

    auto* check_metric = app.add_subcommand("check-metric", "validate the metric axioms");
    check_metric->add_option("instance", instance_path)->required();

    auto* phi_check = app.add_subcommand("phi-check", "check phi class membership");
    phi_check->add_option("--eps", epsilons, "property (2) epsilon (repeatable)");
    phi_check->add_option("instance", instance_path)->required();

    auto* orbit = app.add_subcommand("orbit", "orbit, cycle entry, and diameter of a point");
    orbit->add_option("--point", point_label)->required();
    orbit->add_option("instance", instance_path)->required();

    auto* certify = app.add_subcommand("certify", "certify a contraction condition");
    cert_flags.attach(certify);
    certify->add_flag("--include-fixed-points", cert_flags.include_fixed_points,
                      "type1: also check the condition over Fix(f) x Fix(f)");
    certify->add_option("instance", instance_path)->required();

    auto* iterate = app.add_subcommand("iterate", "Picard iteration from a start point");
    iterate->add_option("--from", from_label)->required();
    iterate->add_option("instance", instance_path)->required();

    auto* fixpoints = app.add_subcommand("fixpoints", "enumerate fixed points");
    fixpoints->add_option("instance", instance_path)->required();

    auto* validate = app.add_subcommand("validate",
                                        "certification plus fixed-point theorem conclusions");
    validate->add_option("instance", instance_path)->required();
    ContractionFlags validate_flags;
    validate_flags.attach(validate);

    auto* compare = app.add_subcommand("compare", "joint evaluation of two conditions");
    flags_a.attach(compare, "-a");
    flags_b.attach(compare, "-b");
    compare->add_option("instance", instance_path)->required();

    auto* falsify = app.add_subcommand("falsify", "randomized counterexample search");
    falsify->add_option("--target", target, "theorem:<variant> or separation:<a>,<b>");
    falsify->add_option("--trials", trials, "number of instances");
    falsify->add_option("--inject", inject, "corpus instance injected at the stream head");
    falsify->add_option("--out-dir", out_dir, "write findings as replayable instance files");

    auto* corpus = app.add_subcommand("corpus", "bundled instances");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "run every corpus expectation");
    (void)corpus_run;
    auto* corpus_emit = corpus->add_subcommand("emit", "write a corpus instance file");
    corpus_emit->add_option("--name", corpus_name, "example7|example10|example13");
    corpus_emit->add_option("-o,--output", emit_path, "output path (- for stdout)");

    CLI11_PARSE(app, argc, argv);
    const clab_options options = make_options(flags);

    clab_status rc = CLAB_OK;
    clab_report* report = nullptr;

    if (check_metric->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        rc = clab_check_metric(instance, &report);
        clab_instance_free(instance);
    } else if (phi_check->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        std::vector<const char*> eps;
        eps.reserve(epsilons.size());
        for (const auto& e : epsilons) eps.push_back(e.c_str());
        rc = clab_phi_check(instance, eps.data(), eps.size(), &report);
        clab_instance_free(instance);
    } else if (orbit->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        rc = clab_orbit(instance, point_label.c_str(), &options, &report);
        clab_instance_free(instance);
    } else if (certify->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        const clab_contraction c = cert_flags.to_c();
        rc = clab_certify(instance, cert_flags.present() ? &c : nullptr, &options, &report);
        clab_instance_free(instance);
    } else if (iterate->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        rc = clab_iterate(instance, from_label.c_str(), &options, &report);
        clab_instance_free(instance);
    } else if (fixpoints->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        rc = clab_fixpoints(instance, &report);
        clab_instance_free(instance);
    } else if (validate->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        const clab_contraction c = validate_flags.to_c();
        rc = clab_validate(instance, validate_flags.present() ? &c : nullptr, &options, &report);
        clab_instance_free(instance);
    } else if (compare->parsed()) {
        clab_instance* instance = load_or_die(instance_path);
        if (!flags_a.present() || !flags_b.present()) {
            std::cerr << "error: compare needs --variant-a and --variant-b\n";
            return 2;
        }
        const clab_contraction a = flags_a.to_c();
        const clab_contraction b = flags_b.to_c();
        rc = clab_compare(instance, &a, &b, &options, &report);
        clab_instance_free(instance);
    } else if (falsify->parsed()) {
        std::vector<const char*> inject_c;
        inject_c.reserve(inject.size());
        for (const auto& name : inject) inject_c.push_back(name.c_str());
        rc = clab_falsify(target.c_str(), flags.seed, trials, inject_c.data(), inject_c.size(),
                          &options, &report);
        if (is_verdict_status(rc) && !out_dir.empty()) {
            write_finding_files(clab_report_json(report), out_dir);
        }
    } else if (corpus->parsed()) {
        if (corpus_emit->parsed()) {
            clab_instance* instance = nullptr;
            rc = clab_instance_corpus(corpus_name.c_str(), flags.window_max, &instance);
            if (rc != CLAB_OK) return fail_with_last_error(rc);
            rc = clab_instance_to_json(instance, &report);
            clab_instance_free(instance);
            if (rc == CLAB_OK && emit_path != "-") {
                std::ofstream out(emit_path);
                if (!out) {
                    std::cerr << "error: cannot write '" << emit_path << "'\n";
                    clab_report_free(report);
                    return 2;
                }
                out << clab_report_json(report) << "\n";
                clab_report_free(report);
                std::cerr << "wrote " << emit_path << "\n";
                return 0;
            }
        } else {
            rc = clab_corpus_run(flags.window_max, &options, &report);
        }
    }

    if (!is_verdict_status(rc)) return fail_with_last_error(rc);
    return print_report(report, flags);
}
