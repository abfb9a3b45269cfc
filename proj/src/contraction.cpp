#include "clab/contraction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

namespace clab {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::TypeI: return "type1";
        case Variant::TypeII: return "type2";
        case Variant::TypeIII: return "type3";
        case Variant::HardyRogers: return "hardy-rogers";
        case Variant::HegedusSzilagyi: return "hegedus-szilagyi";
        case Variant::TMMax: return "tmmax";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "type1" || name == "typeI") return Variant::TypeI;
    if (name == "type2" || name == "typeII") return Variant::TypeII;
    if (name == "type3" || name == "typeIII") return Variant::TypeIII;
    if (name == "hardy-rogers") return Variant::HardyRogers;
    if (name == "hegedus-szilagyi") return Variant::HegedusSzilagyi;
    if (name == "tmmax") return Variant::TMMax;
    return std::nullopt;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Violated: return "violated";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

ContractionSpec ContractionSpec::type1(const Rational& alpha, const Rational& beta,
                                       const Rational& gamma) {
    if (!alpha.is_positive() || !beta.is_positive() || !gamma.is_positive()) {
        throw InvariantError("type1 requires alpha, beta, gamma > 0");
    }
    if (alpha + beta + gamma >= Rational(1)) {
        throw InvariantError("type1 requires lambda = alpha+beta+gamma < 1; got " +
                             (alpha + beta + gamma).str());
    }
    ContractionSpec s;
    s.variant_ = Variant::TypeI;
    s.alpha_ = alpha;
    s.beta_ = beta;
    s.gamma_ = gamma;
    return s;
}

ContractionSpec ContractionSpec::type2(const Rational& alpha, const Rational& beta,
                                       const Rational& gamma, const Rational& delta) {
    for (const auto* c : {&alpha, &beta, &gamma, &delta}) {
        if (c->is_negative()) throw InvariantError("type2 requires nonnegative coefficients");
    }
    if (alpha + beta + gamma + delta > Rational(1)) {
        throw InvariantError("type2 requires alpha+beta+gamma+delta <= 1; got " +
                             (alpha + beta + gamma + delta).str());
    }
    ContractionSpec s;
    s.variant_ = Variant::TypeII;
    s.alpha_ = alpha;
    s.beta_ = beta;
    s.gamma_ = gamma;
    s.delta_ = delta;
    return s;
}

ContractionSpec ContractionSpec::type3() {
    ContractionSpec s;
    s.variant_ = Variant::TypeIII;
    return s;
}

ContractionSpec ContractionSpec::hardy_rogers(const Rational& alpha, const Rational& beta,
                                              const Rational& gamma, const Rational& delta,
                                              const Rational& mu) {
    for (const auto* c : {&alpha, &beta, &gamma, &delta, &mu}) {
        if (c->is_negative()) throw InvariantError("hardy-rogers requires nonnegative coefficients");
    }
    if (alpha + beta + gamma + delta + mu >= Rational(1)) {
        throw InvariantError("hardy-rogers requires coefficient sum < 1; got " +
                             (alpha + beta + gamma + delta + mu).str());
    }
    ContractionSpec s;
    s.variant_ = Variant::HardyRogers;
    s.alpha_ = alpha;
    s.beta_ = beta;
    s.gamma_ = gamma;
    s.delta_ = delta;
    s.mu_ = mu;
    return s;
}

ContractionSpec ContractionSpec::hegedus_szilagyi() {
    ContractionSpec s;
    s.variant_ = Variant::HegedusSzilagyi;
    return s;
}

ContractionSpec ContractionSpec::tmmax() {
    ContractionSpec s;
    s.variant_ = Variant::TMMax;
    return s;
}

bool ContractionSpec::has_coefficients() const {
    return variant_ == Variant::TypeI || variant_ == Variant::TypeII ||
           variant_ == Variant::HardyRogers;
}

std::string ContractionSpec::describe() const {
    std::string out = variant_name(variant_);
    switch (variant_) {
        case Variant::TypeI:
            out += "(alpha=" + alpha_.str() + ", beta=" + beta_.str() + ", gamma=" + gamma_.str() +
                   ", 1-lambda=" + (Rational(1) - lambda()).str() + ")";
            break;
        case Variant::TypeII:
            out += "(alpha=" + alpha_.str() + ", beta=" + beta_.str() + ", gamma=" + gamma_.str() +
                   ", delta=" + delta_.str() + ")";
            break;
        case Variant::HardyRogers:
            out += "(alpha=" + alpha_.str() + ", beta=" + beta_.str() + ", gamma=" + gamma_.str() +
                   ", delta=" + delta_.str() + ", mu=" + mu_.str() + ")";
            break;
        default:
            break;
    }
    return out;
}

int default_precision_digits() {
    if (const char* env = std::getenv("CONTRACTION_LAB_PRECISION")) {
        const long v = std::strtol(env, nullptr, 10);
        return static_cast<int>(std::clamp(v, 5L, 10000L));
    }
    return 30;
}

Scalar contraction_rhs(const ContractionSpec& spec, const PhiSpec& phi, const PairData& data,
                       int precision_digits) {
    switch (spec.variant()) {
        case Variant::TypeI: {
            const Rational factors[4] = {phi.eval(data.df_x), phi.eval(data.df_y),
                                         phi.eval(data.df_xy), phi.eval(data.mf_xy)};
            for (const auto& f : factors) {
                if (f.is_zero()) return Scalar(Rational(0));
            }
            const Rational exponents[4] = {spec.alpha(), spec.beta(), spec.gamma(),
                                           Rational(1) - spec.lambda()};
            Scalar product{Rational(1)};
            for (int i = 0; i < 4; ++i) {
                product = product * Scalar::from_bounds(
                                        pow_bounds(factors[i], exponents[i], precision_digits));
            }
            return product;
        }
        case Variant::TypeII: {
            return Scalar(spec.alpha() * phi.eval(data.df_x) + spec.beta() * phi.eval(data.df_y) +
                          spec.gamma() * phi.eval(data.df_xy) +
                          spec.delta() * phi.eval(data.mf_xy));
        }
        case Variant::TypeIII: {
            Rational m = phi.eval(data.df_x);
            m = max(m, phi.eval(data.df_y));
            m = max(m, phi.eval(data.df_xy));
            m = max(m, phi.eval(data.mf_xy));
            return Scalar(m);
        }
        case Variant::HardyRogers: {
            return Scalar(spec.alpha() * data.d_x_y + spec.beta() * data.d_x_fx +
                          spec.gamma() * data.d_y_fy + spec.delta() * data.d_x_fy +
                          spec.mu() * data.d_fx_y);
        }
        case Variant::HegedusSzilagyi:
            return Scalar(phi.eval(data.df_xy));
        case Variant::TMMax: {
            Rational m = phi.eval(data.df_x);
            m = max(m, phi.eval(data.df_y));
            m = max(m, phi.eval(data.df_xy));
            return Scalar(m);
        }
    }
    throw DomainError("unreachable contraction variant");
}

namespace {

struct PairOutcome {
    std::optional<Scalar> worst_margin;
    std::vector<Violation> violations;
    std::vector<std::pair<PointId, PointId>> indeterminate;
    std::size_t pairs = 0;
};

// TypeI rational^rational factors repeat heavily across pairs (the D_f pool
// is small), so cache per (base, exponent) within one certification.
class PowCache {
public:
    explicit PowCache(int digits) : digits_(digits) {}

    Scalar get(const Rational& base, const Rational& exponent) {
        const auto key = std::make_pair(base, exponent);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Scalar v = Scalar::from_bounds(pow_bounds(base, exponent, digits_));
        cache_.emplace(key, v);
        return v;
    }

private:
    int digits_;
    std::map<std::pair<Rational, Rational>, Scalar> cache_;
};

Scalar rhs_cached(const ContractionSpec& spec, const PhiSpec& phi, const PairData& data,
                  int digits, PowCache* cache) {
    if (spec.variant() != Variant::TypeI || cache == nullptr) {
        return contraction_rhs(spec, phi, data, digits);
    }
    const Rational factors[4] = {phi.eval(data.df_x), phi.eval(data.df_y), phi.eval(data.df_xy),
                                 phi.eval(data.mf_xy)};
    for (const auto& f : factors) {
        if (f.is_zero()) return Scalar(Rational(0));
    }
    const Rational exponents[4] = {spec.alpha(), spec.beta(), spec.gamma(),
                                   Rational(1) - spec.lambda()};
    Scalar product{Rational(1)};
    for (int i = 0; i < 4; ++i) {
        product = product * cache->get(factors[i], exponents[i]);
    }
    return product;
}

PairData pair_data(const OrbitAnalyzer& analyzer, std::size_t x, std::size_t y, bool need_orbits,
                   bool need_raw) {
    const MetricSpace& space = analyzer.space();
    const SelfMap& map = analyzer.map();
    PairData d;
    if (need_orbits) {
        d.df_x = analyzer.orbit_diameter(x);
        d.df_y = analyzer.orbit_diameter(y);
        d.df_xy = analyzer.pair_diameter(x, y);
        d.mf_xy = analyzer.mean_diameter(x, y);
    }
    if (need_raw) {
        const std::size_t fx = map.image(x);
        const std::size_t fy = map.image(y);
        d.d_x_y = space.distance(x, y);
        d.d_x_fx = space.distance(x, fx);
        d.d_y_fy = space.distance(y, fy);
        d.d_x_fy = space.distance(x, fy);
        d.d_fx_y = space.distance(fx, y);
    }
    return d;
}

void merge_min_margin(std::optional<Scalar>& into, const Scalar& margin) {
    if (!into || Scalar::order_before(margin, *into)) into = margin;
}

// Evaluate one unordered pair; returns false to stop (early-exit mode).
bool check_pair(const OrbitAnalyzer& analyzer, const PhiSpec& phi, const ContractionSpec& spec,
                std::size_t x, std::size_t y, int digits, PowCache* cache, bool early_exit,
                PairOutcome& out) {
    const bool need_raw = spec.variant() == Variant::HardyRogers;
    const bool need_orbits = !need_raw;
    const MetricSpace& space = analyzer.space();
    const SelfMap& map = analyzer.map();

    ++out.pairs;
    const Scalar lhs{space.distance(map.image(x), map.image(y))};
    // In early-exit mode a zero LHS pair can never violate; skip the RHS.
    if (early_exit && lhs.lo().is_zero()) return true;

    const PairData data = pair_data(analyzer, x, y, need_orbits, need_raw);
    const Scalar rhs = rhs_cached(spec, phi, data, digits, cache);

    if (Scalar::definitely_le(lhs, rhs)) {
        if (!early_exit) merge_min_margin(out.worst_margin, rhs - lhs);
        return true;
    }
    if (Scalar::definitely_gt(lhs, rhs)) {
        out.violations.push_back({space.point(x), space.point(y), lhs, rhs});
        if (!early_exit) merge_min_margin(out.worst_margin, rhs - lhs);
        return !early_exit;
    }
    out.indeterminate.emplace_back(space.point(x), space.point(y));
    if (!early_exit) merge_min_margin(out.worst_margin, rhs - lhs);
    return true;
}

} // namespace

CertificationReport certify(const SelfMap& map, const PhiSpec& phi, const ContractionSpec& spec,
                            const CertifyOptions& options) {
    const MetricSpace& space = map.space();
    CertificationReport report;
    report.precision_digits =
        options.precision_digits > 0 ? options.precision_digits : default_precision_digits();
    report.early_exit = options.early_exit;
    report.window_note = space.window_note().empty()
                             ? "full explicit space (" + std::to_string(space.size()) + " points)"
                             : space.window_note() + " (" + std::to_string(space.size()) +
                                   " points); verdict holds on this window only";

    const MetricAxiomReport axioms = validate_metric(space);
    if (!axioms.pass) {
        throw InvariantError("metric axioms violated (" +
                             std::to_string(axioms.violations.size()) +
                             " witnesses); run check-metric for details");
    }

    if (options.skip_phi_check) {
        report.phi_checked = false;
        report.phi_check_overridden = true;
        report.phi_note = "phi property checks skipped by caller";
    } else {
        const Phi1Report p1 = check_phi_property1(phi, {});
        const std::vector<Rational> eps = {Rational(1, 10), Rational(1, 2), Rational(1),
                                           Rational(2), Rational(10)};
        const Phi2Report p2 = check_phi_property2(phi, eps);
        if (p1.verdict == PhiVerdict::Fail) {
            throw InvariantError("phi fails property (1): " + p1.note);
        }
        if (!p2.pass) {
            throw InvariantError("phi fails property (2): " + p2.note);
        }
        report.phi_checked = true;
        report.phi_note = std::string("property (1) ") +
                          (p1.verdict == PhiVerdict::AnalyticPass ? "analytic" : "sampled") +
                          "-pass; property (2) evidence for " + std::to_string(eps.size()) +
                          " epsilon values";
    }

    OrbitAnalyzer analyzer(map, options.max_steps);

    // Pair domain: all window points, except that TypeI ranges over
    // X \ Fix(f) only.
    std::vector<std::size_t> domain;
    domain.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (spec.variant() == Variant::TypeI && analyzer.is_fixed(i)) continue;
        domain.push_back(i);
    }
    if (spec.variant() == Variant::TypeI) {
        report.excluded_points = analyzer.fixed().fixed_points;
        report.domain_note = "unordered pairs over X \\ Fix(f) (" +
                             std::to_string(domain.size()) + " points)";
    } else {
        report.domain_note =
            "unordered pairs over the full window, diagonal included";
    }

    const std::size_t n = domain.size();
    const std::size_t total_pairs = n * (n + 1) / 2;

    // Unordered pair index -> (i, j), i <= j, enumerated lexicographically.
    const auto pair_at = [&](std::size_t k) {
        std::size_t i = 0;
        std::size_t row = n;
        while (k >= row) {
            k -= row;
            --row;
            ++i;
        }
        return std::make_pair(domain[i], domain[i + k]);
    };

    unsigned threads = options.threads > 0 ? options.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (options.early_exit || total_pairs < 4096) threads = 1;

    std::vector<PairOutcome> outcomes(threads);
    if (threads == 1) {
        PowCache cache(report.precision_digits);
        for (std::size_t k = 0; k < total_pairs; ++k) {
            const auto [x, y] = pair_at(k);
            if (!check_pair(analyzer, phi, spec, x, y, report.precision_digits, &cache,
                            options.early_exit, outcomes[0])) {
                break;
            }
        }
    } else {
        // Contiguous chunks merged in order: bit-identical to the serial run
        // regardless of thread count.
        std::vector<std::thread> pool;
        const std::size_t chunk = (total_pairs + threads - 1) / threads;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                PowCache cache(report.precision_digits);
                const std::size_t begin = t * chunk;
                const std::size_t end = std::min(total_pairs, begin + chunk);
                for (std::size_t k = begin; k < end; ++k) {
                    const auto [x, y] = pair_at(k);
                    check_pair(analyzer, phi, spec, x, y, report.precision_digits, &cache, false,
                               outcomes[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& o : outcomes) {
        report.pairs_checked += o.pairs;
        for (const auto& v : o.violations) report.violations.push_back(v);
        for (const auto& p : o.indeterminate) report.indeterminate_pairs.push_back(p);
        if (o.worst_margin) merge_min_margin(report.worst_margin, *o.worst_margin);
    }

    if (!report.violations.empty()) {
        report.verdict = Verdict::Violated;
    } else if (!report.indeterminate_pairs.empty()) {
        report.verdict = Verdict::Indeterminate;
    } else {
        report.verdict = Verdict::Certified;
    }

    // Optional extended condition: TypeI over the fixed-point set.
    if (options.include_fixed_points && spec.variant() == Variant::TypeI) {
        PairOutcome fp;
        PowCache cache(report.precision_digits);
        const auto& fixed = analyzer.fixed().fixed_points;
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            for (std::size_t j = i; j < fixed.size(); ++j) {
                check_pair(analyzer, phi, spec, fixed[i].index, fixed[j].index,
                           report.precision_digits, &cache, false, fp);
            }
        }
        report.fixed_point_violations = fp.violations;
        report.fixed_point_check = !fp.violations.empty() ? Verdict::Violated
                                   : !fp.indeterminate.empty() ? Verdict::Indeterminate
                                                               : Verdict::Certified;
    }

    return report;
}

ComparisonReport compare_classes(const SelfMap& map, const PhiSpec& phi,
                                 const ContractionSpec& spec_a, const ContractionSpec& spec_b,
                                 const CertifyOptions& options) {
    const MetricSpace& space = map.space();
    ComparisonReport report;

    OrbitAnalyzer analyzer(map, options.max_steps);
    const int digits =
        options.precision_digits > 0 ? options.precision_digits : default_precision_digits();

    const bool either_type1 =
        spec_a.variant() == Variant::TypeI || spec_b.variant() == Variant::TypeI;
    std::vector<std::size_t> domain;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (either_type1 && analyzer.is_fixed(i)) continue;
        domain.push_back(i);
    }
    report.domain_note = either_type1
                             ? "joint evaluation over the domain intersection X \\ Fix(f)"
                             : "joint evaluation over the full window";

    PowCache cache_a(digits), cache_b(digits);
    bool a_certified = true, b_certified = true;
    bool a_indeterminate = false, b_indeterminate = false;

    for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = i; j < domain.size(); ++j) {
            const std::size_t x = domain[i];
            const std::size_t y = domain[j];
            const Scalar lhs{space.distance(map.image(x), map.image(y))};
            const bool need_raw_a = spec_a.variant() == Variant::HardyRogers;
            const bool need_raw_b = spec_b.variant() == Variant::HardyRogers;
            const PairData data =
                pair_data(analyzer, x, y, !need_raw_a || !need_raw_b, need_raw_a || need_raw_b);
            const Scalar rhs_a = rhs_cached(spec_a, phi, data, digits, &cache_a);
            const Scalar rhs_b = rhs_cached(spec_b, phi, data, digits, &cache_b);

            const bool a_holds = Scalar::definitely_le(lhs, rhs_a);
            const bool b_fails = Scalar::definitely_gt(lhs, rhs_b);
            if (!a_holds) {
                if (Scalar::definitely_gt(lhs, rhs_a)) a_certified = false;
                else a_indeterminate = true;
            }
            if (b_fails) b_certified = false;
            else if (!Scalar::definitely_le(lhs, rhs_b)) b_indeterminate = true;

            if (a_holds && b_fails && !report.witness) {
                report.witness = Violation{space.point(x), space.point(y), lhs, rhs_b};
            }
        }
    }

    report.verdict_a = !a_certified         ? Verdict::Violated
                       : a_indeterminate    ? Verdict::Indeterminate
                                            : Verdict::Certified;
    report.verdict_b = !b_certified         ? Verdict::Violated
                       : b_indeterminate    ? Verdict::Indeterminate
                                            : Verdict::Certified;

    if (report.witness) {
        report.kind = ComparisonReport::Kind::SeparationWitness;
    } else if (report.verdict_a == Verdict::Certified && report.verdict_b == Verdict::Certified) {
        report.kind = ComparisonReport::Kind::BothCertified;
    } else {
        report.kind = ComparisonReport::Kind::PairwiseImplication;
    }
    return report;
}

} // namespace clab
