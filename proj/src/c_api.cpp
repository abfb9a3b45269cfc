#include "contraction_lab.h"

#include "clab/corpus.hpp"
#include "clab/falsify.hpp"
#include "clab/reports.hpp"

struct clab_instance {
    clab::Instance value;
};

struct clab_report {
    nlohmann::ordered_json doc;
    std::string json_text;
    std::string pretty_text;
    int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

clab_report* make_report(nlohmann::ordered_json doc) {
    auto* report = new clab_report;
    report->doc = std::move(doc);
    report->json_text = report->doc.dump(2);
    report->pretty_text = clab::pretty(report->doc);
    report->exit_code = clab::exit_code_for(report->doc);
    return report;
}

clab_status status_for_exit(const clab_report* report) {
    switch (report->exit_code) {
        case 0: return CLAB_OK;
        case 1: return CLAB_VIOLATED;
        default: return CLAB_INDETERMINATE;
    }
}

clab_status fail(clab_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs op() and translates exceptions into statuses. op returns a status so
// verdict-bearing operations can signal CLAB_VIOLATED/CLAB_INDETERMINATE.
template <typename Op>
clab_status guarded(Op&& op) {
    try {
        return op();
    } catch (const clab::ParseError& e) {
        return fail(CLAB_ERR_PARSE, e.what());
    } catch (const clab::InvariantError& e) {
        return fail(CLAB_ERR_INVARIANT, e.what());
    } catch (const clab::BudgetError& e) {
        return fail(CLAB_ERR_BUDGET, e.what());
    } catch (const clab::DomainError& e) {
        return fail(CLAB_ERR_BAD_ARGUMENT, e.what());
    } catch (const clab::Error& e) {
        return fail(CLAB_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(CLAB_ERR_INTERNAL, e.what());
    }
}

clab_status require(bool ok, const char* message) {
    return ok ? CLAB_OK : fail(CLAB_ERR_BAD_ARGUMENT, message);
}

clab::CertifyOptions convert_options(const clab_options* options) {
    clab::CertifyOptions out;
    if (options == nullptr) return out;
    out.max_steps = options->max_steps > 0 ? static_cast<std::size_t>(options->max_steps) : 0;
    out.precision_digits = options->precision_digits;
    out.skip_phi_check = options->skip_phi_check != 0;
    out.threads = options->threads > 0 ? static_cast<unsigned>(options->threads) : 0;
    return out;
}

clab::ContractionSpec convert_contraction(const clab_contraction* c) {
    if (c == nullptr || c->variant == nullptr) {
        throw clab::DomainError("contraction condition with no variant");
    }
    const auto coeff = [](const char* text) {
        return text == nullptr ? clab::Rational(0) : clab::Rational::parse(text);
    };
    const auto variant = clab::variant_from_name(c->variant);
    if (!variant) throw clab::ParseError(std::string("unknown variant '") + c->variant + "'");
    switch (*variant) {
        case clab::Variant::TypeI:
            return clab::ContractionSpec::type1(coeff(c->alpha), coeff(c->beta), coeff(c->gamma));
        case clab::Variant::TypeII:
            return clab::ContractionSpec::type2(coeff(c->alpha), coeff(c->beta), coeff(c->gamma),
                                                coeff(c->delta));
        case clab::Variant::TypeIII: return clab::ContractionSpec::type3();
        case clab::Variant::HardyRogers:
            return clab::ContractionSpec::hardy_rogers(coeff(c->alpha), coeff(c->beta),
                                                       coeff(c->gamma), coeff(c->delta),
                                                       coeff(c->mu));
        case clab::Variant::HegedusSzilagyi: return clab::ContractionSpec::hegedus_szilagyi();
        case clab::Variant::TMMax: return clab::ContractionSpec::tmmax();
    }
    throw clab::DomainError("unreachable variant");
}

clab::ContractionSpec resolve_contraction(const clab_instance* instance,
                                          const clab_contraction* contraction) {
    if (contraction != nullptr) return convert_contraction(contraction);
    if (instance->value.contraction) return *instance->value.contraction;
    throw clab::DomainError(
        "no contraction condition: pass one or declare it in the instance file");
}

clab::PointId resolve_point(const clab_instance* instance, const char* label) {
    if (label == nullptr) throw clab::DomainError("point label is null");
    const auto idx = instance->value.space->find_label(label);
    if (!idx) {
        throw clab::DomainError(std::string("point '") + label + "' is not in the window");
    }
    return instance->value.space->point(*idx);
}

} // namespace

extern "C" {

const char* clab_version(void) { return "1.0.0"; }

const char* clab_last_error(void) { return g_last_error.c_str(); }

clab_status clab_instance_load_file(const char* path, clab_instance** out) {
    if (auto rc = require(path && out, "null argument")) return rc;
    return guarded([&] {
        auto* instance = new clab_instance{clab::load_instance_file(path)};
        *out = instance;
        return CLAB_OK;
    });
}

clab_status clab_instance_load_string(const char* json_text, clab_instance** out) {
    if (auto rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] {
        auto* instance = new clab_instance{clab::load_instance_string(json_text)};
        *out = instance;
        return CLAB_OK;
    });
}

clab_status clab_instance_corpus(const char* name, long window_max, clab_instance** out) {
    if (auto rc = require(name && out, "null argument")) return rc;
    return guarded([&] {
        clab::CorpusOptions options;
        if (window_max > 0) options.window_max = window_max;
        auto* instance = new clab_instance{clab::corpus_instance(name, options)};
        *out = instance;
        return CLAB_OK;
    });
}

void clab_instance_free(clab_instance* instance) { delete instance; }

long clab_instance_point_count(const clab_instance* instance) {
    if (instance == nullptr) return 0;
    return static_cast<long>(instance->value.space->size());
}

const char* clab_instance_point_label(const clab_instance* instance, long index) {
    if (instance == nullptr || index < 0 ||
        static_cast<std::size_t>(index) >= instance->value.space->size()) {
        return nullptr;
    }
    return instance->value.space->point(static_cast<std::size_t>(index)).label.c_str();
}

clab_status clab_instance_to_json(const clab_instance* instance, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        *out = make_report(clab::instance_to_json(instance->value));
        return CLAB_OK;
    });
}

clab_status clab_check_metric(const clab_instance* instance, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        auto* report = make_report(clab::to_json(clab::validate_metric(*instance->value.space)));
        *out = report;
        return status_for_exit(report);
    });
}

clab_status clab_phi_check(const clab_instance* instance, const char* const* epsilons,
                           size_t n_epsilons, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        const clab::PhiSpec& phi = instance->value.require_phi();
        std::vector<clab::Rational> eps;
        for (size_t i = 0; i < n_epsilons; ++i) {
            if (epsilons == nullptr || epsilons[i] == nullptr) {
                throw clab::DomainError("null epsilon");
            }
            eps.push_back(clab::Rational::parse(epsilons[i]));
        }
        if (eps.empty()) eps = {clab::Rational(1)};
        const clab::Phi1Report p1 = clab::check_phi_property1(phi, {});
        const clab::Phi2Report p2 = clab::check_phi_property2(phi, eps);
        auto doc = clab::phi_check_to_json(phi, p1, p2);
        doc["pass"] = p1.verdict != clab::PhiVerdict::Fail && p2.pass;
        auto* report = make_report(std::move(doc));
        *out = report;
        return status_for_exit(report);
    });
}

clab_status clab_orbit(const clab_instance* instance, const char* point_label,
                       const clab_options* options, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        const clab::SelfMap& map = instance->value.require_map();
        const clab::PointId start = resolve_point(instance, point_label);
        const auto opts = convert_options(options);
        const std::size_t budget =
            opts.max_steps > 0 ? opts.max_steps : clab::default_max_steps(map.space());
        *out = make_report(clab::to_json(clab::compute_orbit(map, start, budget)));
        return CLAB_OK;
    });
}

clab_status clab_fixpoints(const clab_instance* instance, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        *out = make_report(clab::to_json(clab::fixed_points(instance->value.require_map())));
        return CLAB_OK;
    });
}

clab_status clab_iterate(const clab_instance* instance, const char* from_label,
                         const clab_options* options, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        const clab::SelfMap& map = instance->value.require_map();
        const clab::PointId start = resolve_point(instance, from_label);
        const auto opts = convert_options(options);
        const std::size_t budget =
            opts.max_steps > 0 ? opts.max_steps : clab::default_max_steps(map.space());
        *out = make_report(clab::to_json(clab::iterate(map, start, budget)));
        return CLAB_OK;
    });
}

clab_status clab_certify(const clab_instance* instance, const clab_contraction* contraction,
                         const clab_options* options, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        const clab::SelfMap& map = instance->value.require_map();
        const clab::PhiSpec& phi = instance->value.require_phi();
        const clab::ContractionSpec spec = resolve_contraction(instance, contraction);
        auto opts = convert_options(options);
        opts.include_fixed_points =
            contraction != nullptr && contraction->include_fixed_points != 0;
        auto doc = clab::to_json(clab::certify(map, phi, spec, opts));
        doc["variant"] = clab::variant_name(spec.variant());
        doc["contraction"] = clab::contraction_to_json(spec);
        doc["phi"] = clab::phi_to_json(phi);
        auto* report = make_report(std::move(doc));
        *out = report;
        return status_for_exit(report);
    });
}

clab_status clab_validate(const clab_instance* instance, const clab_contraction* contraction,
                          const clab_options* options, clab_report** out) {
    if (auto rc = require(instance && out, "null argument")) return rc;
    return guarded([&] {
        const clab::SelfMap& map = instance->value.require_map();
        const clab::PhiSpec& phi = instance->value.require_phi();
        const clab::ContractionSpec spec = resolve_contraction(instance, contraction);
        const clab::TheoremReport result =
            clab::validate_theorem(map, phi, spec, convert_options(options));
        auto doc = clab::to_json(result);
        doc["contraction"] = clab::contraction_to_json(spec);
        if (result.outcome == clab::TheoremReport::Outcome::Counterexample) {
            doc["instance"] = clab::instance_to_json(instance->value);
        }
        auto* report = make_report(std::move(doc));
        *out = report;
        return status_for_exit(report);
    });
}

clab_status clab_compare(const clab_instance* instance, const clab_contraction* condition_a,
                         const clab_contraction* condition_b, const clab_options* options,
                         clab_report** out) {
    if (auto rc = require(instance && out && condition_a && condition_b, "null argument")) {
        return rc;
    }
    return guarded([&] {
        const clab::SelfMap& map = instance->value.require_map();
        const clab::PhiSpec& phi = instance->value.require_phi();
        const auto spec_a = convert_contraction(condition_a);
        const auto spec_b = convert_contraction(condition_b);
        auto doc = clab::to_json(
            clab::compare_classes(map, phi, spec_a, spec_b, convert_options(options)));
        doc["contraction_a"] = clab::contraction_to_json(spec_a);
        doc["contraction_b"] = clab::contraction_to_json(spec_b);
        *out = make_report(std::move(doc));
        return CLAB_OK;
    });
}

clab_status clab_falsify(const char* target, uint64_t seed, long trials,
                         const char* const* inject_corpus, size_t n_inject,
                         const clab_options* options, clab_report** out) {
    if (auto rc = require(target && out && trials > 0, "bad falsify arguments")) return rc;
    return guarded([&] {
        clab::GeneratorConfig config;
        config.seed = seed;
        clab::InstanceGenerator generator(config);

        clab::HuntOptions hunt_options;
        const auto opts = convert_options(options);
        hunt_options.max_steps = opts.max_steps;
        hunt_options.precision_digits = opts.precision_digits;
        clab::CorpusOptions corpus_options;
        if (options != nullptr && options->window_max > 0) {
            corpus_options.window_max = options->window_max;
        }
        for (size_t i = 0; i < n_inject; ++i) {
            if (inject_corpus == nullptr || inject_corpus[i] == nullptr) {
                throw clab::DomainError("null corpus injection name");
            }
            hunt_options.injected.push_back(clab::corpus_instance(inject_corpus[i], corpus_options));
        }
        const clab::HuntResult result =
            clab::hunt(generator, static_cast<std::size_t>(trials),
                       clab::HuntTarget::parse(target), hunt_options);
        auto* report = make_report(clab::to_json(result));
        *out = report;
        return status_for_exit(report);
    });
}

clab_status clab_corpus_run(long window_max, const clab_options* options, clab_report** out) {
    if (auto rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] {
        clab::CorpusOptions corpus_options;
        if (window_max > 0) corpus_options.window_max = window_max;
        corpus_options.certify = convert_options(options);
        const clab::CorpusRunResult result = clab::corpus_run(corpus_options);
        auto* report = make_report(result.report);
        *out = report;
        return status_for_exit(report);
    });
}

const char* clab_report_json(const clab_report* report) {
    return report == nullptr ? "" : report->json_text.c_str();
}

const char* clab_report_pretty(const clab_report* report) {
    return report == nullptr ? "" : report->pretty_text.c_str();
}

int clab_report_exit_code(const clab_report* report) {
    return report == nullptr ? 2 : report->exit_code;
}

void clab_report_free(clab_report* report) { delete report; }

} // extern "C"
