#include "clab/falsify.hpp"

#include <algorithm>
#include <random>

namespace clab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased bounded draw from raw engine words; avoids the implementation-
// defined std::uniform_int_distribution so streams replay across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

std::mt19937_64 engine_for(std::uint64_t seed, std::size_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
}

Rational random_weight(std::mt19937_64& rng) {
    // Small rationals: numerator 1..16, denominator 1..16.
    const long num = static_cast<long>(bounded(rng, 16)) + 1;
    const long den = static_cast<long>(bounded(rng, 16)) + 1;
    return Rational(num, den);
}

std::shared_ptr<const MetricSpace> random_graph_metric(std::mt19937_64& rng, std::size_t n) {
    // Random spanning tree plus extra edges, then Floyd-Warshall closure.
    // The tree keeps the graph connected, the closure enforces the triangle
    // inequality, and positive weights give identity of indiscernibles.
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    const Rational infinity(1000000);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = i == j ? Rational(0) : infinity;
    }
    const auto add_edge = [&](std::size_t a, std::size_t b, const Rational& w) {
        if (w < dist[a][b]) {
            dist[a][b] = w;
            dist[b][a] = w;
        }
    };
    for (std::size_t i = 1; i < n; ++i) {
        add_edge(i, bounded(rng, i), random_weight(rng));
    }
    const std::size_t extra = n > 1 ? bounded(rng, n) : 0;
    for (std::size_t e = 0; e < extra; ++e) {
        const std::size_t a = bounded(rng, n);
        const std::size_t b = bounded(rng, n);
        if (a != b) add_edge(a, b, random_weight(rng));
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Rational via = dist[i][k] + dist[k][j];
                if (via < dist[i][j]) dist[i][j] = via;
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return std::make_shared<const MetricSpace>(
        MetricSpace::finite_matrix(std::move(labels), std::move(dist)));
}

std::shared_ptr<const MetricSpace> random_integers_absdiff(std::mt19937_64& rng, std::size_t n) {
    std::vector<long> values;
    while (values.size() < n) {
        const long v = static_cast<long>(bounded(rng, 8 * n + 1));
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    std::vector<Rational> rationals;
    rationals.reserve(n);
    for (long v : values) rationals.emplace_back(v);
    return std::make_shared<const MetricSpace>(MetricSpace::absdiff(std::move(rationals)));
}

std::vector<std::size_t> uniform_table(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (auto& img : images) img = bounded(rng, n);
    return images;
}

// Every point strictly descends a random ranking toward a sink c, so every
// orbit reaches the constant point: f is eventually constant.
std::vector<std::size_t> eventually_constant_table(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[bounded(rng, i)]);
    }
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

    std::vector<std::size_t> images(n);
    for (std::size_t p = 0; p < n; ++p) {
        if (rank[p] == 0) {
            images[p] = p; // the sink
        } else {
            images[p] = order[bounded(rng, rank[p])];
        }
    }
    return images;
}

Rational random_k(std::mt19937_64& rng) {
    const long den = static_cast<long>(bounded(rng, 15)) + 2; // 2..16
    const long num = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(den)));
    return Rational(num, den); // in [0, 1)
}

} // namespace

Instance InstanceGenerator::generate(std::size_t index) const {
    std::mt19937_64 rng = engine_for(config_.seed, index);
    const std::size_t span = config_.max_points - config_.min_points + 1;
    const std::size_t n = config_.min_points + bounded(rng, span);

    Instance instance;
    instance.space =
        bounded(rng, 2) == 0 ? random_graph_metric(rng, n) : random_integers_absdiff(rng, n);
    instance.map = SelfMap::table(instance.space, bounded(rng, 2) == 0
                                                      ? uniform_table(rng, n)
                                                      : eventually_constant_table(rng, n));
    const Rational k = random_k(rng);
    instance.phi = bounded(rng, 2) == 0 ? PhiSpec::linear(k) : PhiSpec::parity_linear(k);
    return instance;
}

ContractionSpec InstanceGenerator::random_spec(Variant variant, std::size_t index) const {
    std::mt19937_64 rng = engine_for(~config_.seed, index);
    switch (variant) {
        case Variant::TypeI: {
            // Equal exponents a/b with 3a < b keep lambda < 1 and the pow
            // denominators small.
            const long den = static_cast<long>(bounded(rng, 9)) + 4; // 4..12
            const long num = static_cast<long>(bounded(rng, static_cast<std::uint64_t>((den - 1) / 3))) + 1;
            const Rational c(num, den);
            return ContractionSpec::type1(c, c, c);
        }
        case Variant::TypeII: {
            // Four nonnegative rationals with sum <= 1 over a common denominator.
            const long den = static_cast<long>(bounded(rng, 13)) + 4; // 4..16
            long budget = den;
            long parts[4];
            for (int i = 0; i < 3; ++i) {
                parts[i] = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(budget + 1)));
                budget -= parts[i];
            }
            parts[3] = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(budget + 1)));
            return ContractionSpec::type2(Rational(parts[0], den), Rational(parts[1], den),
                                          Rational(parts[2], den), Rational(parts[3], den));
        }
        case Variant::HardyRogers: {
            const long den = 16;
            long budget = den - 1; // strict sum < 1
            long parts[5];
            for (int i = 0; i < 5; ++i) {
                parts[i] = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(budget + 1)));
                budget -= parts[i];
            }
            return ContractionSpec::hardy_rogers(Rational(parts[0], den), Rational(parts[1], den),
                                                 Rational(parts[2], den), Rational(parts[3], den),
                                                 Rational(parts[4], den));
        }
        case Variant::TypeIII: return ContractionSpec::type3();
        case Variant::HegedusSzilagyi: return ContractionSpec::hegedus_szilagyi();
        case Variant::TMMax: return ContractionSpec::tmmax();
    }
    throw DomainError("unreachable variant");
}

HuntTarget HuntTarget::parse(const std::string& text) {
    HuntTarget target;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("bad hunt target '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "theorem") {
        const auto v = variant_from_name(rest);
        if (!v) throw ParseError("bad hunt target variant '" + rest + "'");
        target.kind = Kind::TheoremCounterexample;
        target.variant = *v;
        return target;
    }
    if (kind == "separation") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) {
            throw ParseError("separation target needs two variants: '" + text + "'");
        }
        const auto a = variant_from_name(rest.substr(0, comma));
        const auto b = variant_from_name(rest.substr(comma + 1));
        if (!a || !b) throw ParseError("bad separation variants in '" + text + "'");
        target.kind = Kind::Separation;
        target.variant_a = *a;
        target.variant_b = *b;
        return target;
    }
    throw ParseError("bad hunt target kind '" + kind + "'");
}

std::string HuntTarget::str() const {
    if (kind == Kind::TheoremCounterexample) return "theorem:" + variant_name(variant);
    return "separation:" + variant_name(variant_a) + "," + variant_name(variant_b);
}

namespace {

CertifyOptions fast_options(const HuntOptions& options) {
    CertifyOptions co;
    co.max_steps = options.max_steps;
    co.precision_digits = options.precision_digits;
    co.early_exit = true;
    co.threads = 1;
    return co;
}

// Fixed-point conclusion of the variant's theorem; nullopt when it holds.
std::optional<std::string> theorem_conclusion_failure(const SelfMap& map, Variant variant) {
    const FixPointReport fixed = fixed_points(map);
    if (variant == Variant::TypeI) {
        if (fixed.fixed_points.empty()) return "certified type1 instance with empty Fix(f)";
        return std::nullopt;
    }
    if (fixed.fixed_points.size() != 1) {
        return "certified instance with |Fix(f)| = " + std::to_string(fixed.fixed_points.size());
    }
    const PointId fix = fixed.fixed_points.front();
    for (const PointId& start : map.space().points()) {
        const IterationTrace trace = iterate(map, start, default_max_steps(map.space()));
        if (trace.status != IterationTrace::Status::Converged || !(*trace.limit == fix)) {
            return "Picard sequence from '" + start.label + "' does not converge to the fixed point";
        }
    }
    return std::nullopt;
}

bool certifies(const Instance& instance, const ContractionSpec& spec,
               const CertifyOptions& options) {
    try {
        return certify(instance.require_map(), instance.require_phi(), spec, options).verdict ==
               Verdict::Certified;
    } catch (const Error&) {
        return false;
    }
}

// Remove the given points (which must leave the map closed) from a table
// instance; rule maps are rebuilt against the reduced window.
std::optional<Instance> remove_points(const Instance& instance,
                                      const std::vector<bool>& keep) {
    const MetricSpace& space = *instance.space;
    const SelfMap& map = instance.require_map();
    std::vector<std::size_t> new_index(space.size(), SIZE_MAX);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (keep[i]) new_index[i] = kept++;
    }
    if (kept == 0) return std::nullopt;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (keep[i] && !keep[map.image(i)]) return std::nullopt; // not f-closed
    }

    Instance out;
    if (space.kind() == SpaceKind::AbsdiffWindow) {
        std::vector<Rational> values;
        values.reserve(kept);
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (keep[i]) values.push_back(space.value(i));
        }
        auto reduced = MetricSpace::absdiff(std::move(values));
        if (!space.window_note().empty()) {
            reduced.set_window(space.window_note() + ", shrunk to " + std::to_string(kept) +
                                   " points",
                               space.window_of_larger());
        }
        out.space = std::make_shared<const MetricSpace>(std::move(reduced));
    } else {
        std::vector<std::string> labels;
        std::vector<std::vector<Rational>> matrix;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (!keep[i]) continue;
            labels.push_back(space.point(i).label);
            std::vector<Rational> row;
            for (std::size_t j = 0; j < space.size(); ++j) {
                if (keep[j]) row.push_back(space.distance(i, j));
            }
            matrix.push_back(std::move(row));
        }
        out.space = std::make_shared<const MetricSpace>(
            MetricSpace::finite_matrix(std::move(labels), std::move(matrix)));
    }
    std::vector<std::size_t> images;
    images.reserve(kept);
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (keep[i]) images.push_back(new_index[map.image(i)]);
    }
    out.map = SelfMap::table(out.space, std::move(images));
    out.phi = instance.phi;
    out.contraction = instance.contraction;
    return out;
}

} // namespace

Instance shrink_instance(const Instance& instance,
                         const std::function<bool(const Instance&)>& predicate) {
    Instance current = instance;
    std::size_t chunk = std::max<std::size_t>(1, current.space->size() / 2);
    while (true) {
        bool removed_any = false;
        const std::size_t n = current.space->size();
        for (std::size_t begin = 0; begin < n && n > 1; begin += chunk) {
            const std::size_t end = std::min(n, begin + chunk);
            std::vector<bool> keep(n, true);
            for (std::size_t i = begin; i < end; ++i) keep[i] = false;
            const auto candidate = remove_points(current, keep);
            if (!candidate) continue;
            bool holds = false;
            try {
                holds = predicate(*candidate);
            } catch (const Error&) {
                holds = false;
            }
            if (holds) {
                current = *candidate;
                removed_any = true;
                break; // indices shifted; restart the scan
            }
        }
        if (!removed_any) {
            if (chunk == 1) break;
            chunk = std::max<std::size_t>(1, chunk / 2);
        } else {
            chunk = std::max<std::size_t>(1, std::min(chunk, current.space->size() / 2));
        }
    }
    return current;
}

HuntResult hunt(const InstanceGenerator& generator, std::size_t trials, const HuntTarget& target,
                const HuntOptions& options) {
    if (trials < 1) throw DomainError("hunt needs trials >= 1");
    HuntResult result;
    result.target = target;
    result.seed = generator.config().seed;
    result.trials = trials;
    const CertifyOptions fast = fast_options(options);

    for (std::size_t index = 0; index < trials; ++index) {
        Instance instance = index < options.injected.size() ? options.injected[index]
                                                            : generator.generate(index);
        if (target.kind == HuntTarget::Kind::TheoremCounterexample) {
            const ContractionSpec spec =
                instance.contraction && instance.contraction->variant() == target.variant
                    ? *instance.contraction
                    : generator.random_spec(target.variant, index);
            if (!certifies(instance, spec, fast)) continue;
            ++result.certified_count;
            const auto failure = theorem_conclusion_failure(instance.require_map(), target.variant);
            if (!failure) continue;

            const auto predicate = [&](const Instance& candidate) {
                return certifies(candidate, spec, fast) &&
                       theorem_conclusion_failure(candidate.require_map(), target.variant)
                           .has_value();
            };
            Finding finding;
            finding.index = index;
            finding.detail = *failure;
            finding.original_points = instance.space->size();
            finding.instance = options.shrink ? shrink_instance(instance, predicate) : instance;
            finding.shrunk_points = finding.instance.space->size();
            finding.spec = spec;
            finding.instance.contraction = spec;
            result.findings.push_back(std::move(finding));
        } else {
            const ContractionSpec spec_a =
                instance.contraction && instance.contraction->variant() == target.variant_a
                    ? *instance.contraction
                    : generator.random_spec(target.variant_a, index);
            const ContractionSpec spec_b = generator.random_spec(target.variant_b, index);
            if (!certifies(instance, spec_a, fast)) continue;
            ++result.certified_count;
            if (certifies(instance, spec_b, fast)) continue;

            const auto predicate = [&](const Instance& candidate) {
                return certifies(candidate, spec_a, fast) && !certifies(candidate, spec_b, fast);
            };
            Finding finding;
            finding.index = index;
            finding.detail = variant_name(target.variant_a) + " certifies but " +
                             variant_name(target.variant_b) + " does not";
            finding.original_points = instance.space->size();
            finding.instance = options.shrink ? shrink_instance(instance, predicate) : instance;
            finding.shrunk_points = finding.instance.space->size();
            finding.spec = spec_a;
            finding.spec_b = spec_b;
            finding.instance.contraction = spec_a;
            result.findings.push_back(std::move(finding));
        }
    }
    return result;
}

} // namespace clab
