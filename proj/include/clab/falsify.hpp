#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clab/instance.hpp"
#include "clab/picard.hpp"

namespace clab {

// Randomized instance stream. Deterministic in (seed, index): every trial
// reseeds its own engine, so trials are order-independent and parallelizable.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t min_points = 2;
    std::size_t max_points = 8;
};

class InstanceGenerator {
public:
    explicit InstanceGenerator(GeneratorConfig config) : config_(config) {}

    const GeneratorConfig& config() const { return config_; }

    // Space: metric closure of a random connected weighted graph (all-pairs
    // shortest paths) or random distinct integers under |u-v|. Map: uniform
    // random table or an eventually-constant table. Phi: random linear or
    // parity-linear with k in [0, 1). Weights are small rationals so all
    // downstream arithmetic stays exact.
    Instance generate(std::size_t index) const;

    // Deterministic per-index coefficients for coefficient-bearing variants.
    ContractionSpec random_spec(Variant variant, std::size_t index) const;

private:
    GeneratorConfig config_;
};

struct HuntTarget {
    enum class Kind { TheoremCounterexample, Separation };
    Kind kind = Kind::TheoremCounterexample;
    Variant variant = Variant::TypeII;   // TheoremCounterexample
    Variant variant_a = Variant::TypeIII; // Separation: A certifies, B fails
    Variant variant_b = Variant::TMMax;

    // "theorem:type2", "separation:type3,tmmax", ...
    static HuntTarget parse(const std::string& text);
    std::string str() const;
};

struct Finding {
    std::size_t index = 0;
    std::string detail;
    Instance instance;          // shrunk
    std::size_t original_points = 0;
    std::size_t shrunk_points = 0;
    ContractionSpec spec = ContractionSpec::type3(); // certified condition (A for separations)
    std::optional<ContractionSpec> spec_b;
};

struct HuntResult {
    HuntTarget target;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t certified_count = 0; // trials whose (first) condition certified
    std::vector<Finding> findings;
};

struct HuntOptions {
    // Corpus instances occupy the first stream indices (deterministic CI
    // hook for rare separations).
    std::vector<Instance> injected;
    bool shrink = true;
    std::size_t max_steps = 0;
    int precision_digits = 0;
};

// Theorem targets: any instance that certifies yet violates the theorem's
// conclusion is a finding (expected: none, ever). Separation targets: any
// instance where A certifies and B does not.
HuntResult hunt(const InstanceGenerator& generator, std::size_t trials, const HuntTarget& target,
                const HuntOptions& options = {});

// Greedy chunked minimization: drop f-closed chunks of points while the
// predicate keeps holding. Used on findings before they are reported.
Instance shrink_instance(const Instance& instance,
                         const std::function<bool(const Instance&)>& predicate);

} // namespace clab
