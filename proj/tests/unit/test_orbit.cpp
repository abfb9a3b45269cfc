#include <doctest.h>

#include <random>
#include <set>

#include "clab/corpus.hpp"
#include "clab/orbit.hpp"

using clab::MetricSpace;
using clab::OrbitAnalyzer;
using clab::Rational;
using clab::SelfMap;

namespace {

// Independent oracle for the integer-window rule: iterate the rule directly
// on values and take the brute-force pairwise max.
long rule10(long x) { return (x >= 7 && x % 4 == 3) ? 2 : 1; }

std::vector<long> oracle_orbit10(long start) {
    std::vector<long> orbit{start};
    long current = start;
    while (true) {
        const long next = rule10(current);
        if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) return orbit;
        orbit.push_back(next);
        current = next;
    }
}

long oracle_diameter(const std::vector<long>& values) {
    long best = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            best = std::max(best, std::labs(values[i] - values[j]));
        }
    }
    return best;
}

clab::Instance example10(long window_max = 30) {
    clab::CorpusOptions options;
    options.window_max = window_max;
    return clab::corpus_instance("example10", options);
}

clab::Instance example7() { return clab::corpus_instance("example7"); }

} // namespace

TEST_CASE("orbit of 7 under the example10 rule is [7,2,1] with diameter 6") {
    const auto oracle = oracle_orbit10(7);
    REQUIRE(oracle == std::vector<long>{7, 2, 1});
    CHECK(oracle_diameter(oracle) == 6);

    const auto instance = example10();
    const auto& map = instance.require_map();
    const auto start = map.space().point(*map.space().find_value(Rational(7)));
    const auto stats = clab::compute_orbit(map, start, clab::default_max_steps(map.space()));

    REQUIRE(stats.orbit.size() == 3);
    CHECK(stats.orbit[0].label == "7");
    CHECK(stats.orbit[1].label == "2");
    CHECK(stats.orbit[2].label == "1");
    CHECK(stats.diameter == Rational(6));
    CHECK(stats.tail_entry == 2); // f(1) = 1 repeats the point first seen at index 2
}

TEST_CASE("a fixed point has the singleton orbit with diameter 0") {
    const auto instance = example10();
    const auto& map = instance.require_map();
    const auto one = map.space().point(*map.space().find_value(Rational(1)));
    const auto stats = clab::compute_orbit(map, one, 5);
    CHECK(stats.orbit.size() == 1);
    CHECK(stats.diameter == Rational(0));
    CHECK(stats.tail_entry == 0);
}

TEST_CASE("example7 orbit of 5 is [5,2] with diameter 3") {
    const auto instance = example7();
    const auto& map = instance.require_map();
    const auto start = map.space().point(*map.space().find_value(Rational(5)));
    const auto stats = clab::compute_orbit(map, start, clab::default_max_steps(map.space()));
    REQUIRE(stats.orbit.size() == 2);
    CHECK(stats.orbit[0].label == "5");
    CHECK(stats.orbit[1].label == "2");
    CHECK(stats.diameter == Rational(3));
}

TEST_CASE("orbit budget errors when no repeat happens in time") {
    const auto instance = example10();
    const auto& map = instance.require_map();
    const auto start = map.space().point(*map.space().find_value(Rational(7)));
    CHECK_THROWS_AS(clab::compute_orbit(map, start, 1), clab::BudgetError);
}

TEST_CASE("pair stats match the orbit-union oracle") {
    const auto instance = example10();
    const auto& map = instance.require_map();
    const auto& space = map.space();
    const auto at = [&](long v) { return space.point(*space.find_value(Rational(v))); };
    const std::size_t budget = clab::default_max_steps(space);

    SUBCASE("x=7, y=5: union {7,2,1,5} has diameter 6; mean (6+4)/2 = 5") {
        std::set<long> un;
        for (long v : oracle_orbit10(7)) un.insert(v);
        for (long v : oracle_orbit10(5)) un.insert(v);
        CHECK(oracle_diameter({un.begin(), un.end()}) == 6);

        const auto stats = clab::pair_stats(map, at(7), at(5), budget);
        CHECK(stats.pair_diameter == Rational(6));
        CHECK(stats.mean_diameter == Rational(5));
    }
    SUBCASE("x = y at a fixed point: both stats are 0") {
        const auto stats = clab::pair_stats(map, at(1), at(1), budget);
        CHECK(stats.pair_diameter == Rational(0));
        CHECK(stats.mean_diameter == Rational(0));
    }
    SUBCASE("x=7, y=2: D_f(2) = 1, so the mean is 7/2") {
        const auto stats = clab::pair_stats(map, at(7), at(2), budget);
        CHECK(stats.pair_diameter == Rational(6));
        CHECK(stats.mean_diameter == Rational(7, 2));
    }
}

TEST_CASE("fixed point enumeration") {
    SUBCASE("example10 has the unique fixed point 1") {
        const auto report = clab::fixed_points(example10().require_map());
        REQUIRE(report.fixed_points.size() == 1);
        CHECK(report.fixed_points.front().label == "1");
        CHECK(report.unique);
    }
    SUBCASE("example7 has the two fixed points a=1 and b=2") {
        const auto report = clab::fixed_points(example7().require_map());
        REQUIRE(report.fixed_points.size() == 2);
        CHECK(report.fixed_points[0].label == "1");
        CHECK(report.fixed_points[1].label == "2");
        CHECK(!report.unique);
    }
    SUBCASE("the identity map fixes every point") {
        auto space = std::make_shared<const MetricSpace>(
            MetricSpace::absdiff({Rational(1), Rational(2), Rational(3)}));
        const auto map = SelfMap::table(space, {0, 1, 2});
        const auto report = clab::fixed_points(map);
        CHECK(report.fixed_points.size() == 3);
        CHECK(!report.unique);
    }
}

TEST_CASE("orbit diameter sequences") {
    const auto inst10 = example10();
    const auto& map10 = inst10.require_map();
    const auto& space10 = map10.space();
    const std::size_t budget = clab::default_max_steps(space10);

    SUBCASE("example10 from 7: [6, 1, 0]") {
        const auto start = space10.point(*space10.find_value(Rational(7)));
        const auto seq = clab::orbit_diameter_sequence(map10, start, 2, budget);
        REQUIRE(seq.size() == 3);
        CHECK(seq[0] == Rational(6));
        CHECK(seq[1] == Rational(1));
        CHECK(seq[2] == Rational(0));
    }
    SUBCASE("fixed point start: all zeros") {
        const auto start = space10.point(*space10.find_value(Rational(1)));
        for (const auto& d : clab::orbit_diameter_sequence(map10, start, 3, budget)) {
            CHECK(d == Rational(0));
        }
    }
    SUBCASE("example7 from 5: [3, 0]") {
        const auto inst7 = example7();
        const auto& map7 = inst7.require_map();
        const auto start = map7.space().point(*map7.space().find_value(Rational(5)));
        const auto seq =
            clab::orbit_diameter_sequence(map7, start, 1, clab::default_max_steps(map7.space()));
        REQUIRE(seq.size() == 2);
        CHECK(seq[0] == Rational(3));
        CHECK(seq[1] == Rational(0));
    }
}

TEST_CASE("incremental diameters equal the brute-force oracle on corpus instances") {
    for (const auto& name : clab::corpus_names()) {
        clab::CorpusOptions options;
        options.window_max = 30;
        const auto instance = clab::corpus_instance(name, options);
        const auto& map = instance.require_map();
        const auto& space = map.space();
        OrbitAnalyzer analyzer(map);
        for (std::size_t x = 0; x < space.size(); ++x) {
            const auto& stats = analyzer.orbit(x);
            Rational brute(0);
            for (const auto& u : stats.orbit) {
                for (const auto& v : stats.orbit) {
                    brute = clab::max(brute, space.distance(u.index, v.index));
                }
            }
            CHECK(stats.diameter == brute);
        }
    }
}

TEST_CASE("orbit properties on random table maps") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        std::vector<Rational> values;
        std::set<long> used;
        while (values.size() < n) {
            const long v = static_cast<long>(rng() % (10 * n));
            if (used.insert(v).second) values.emplace_back(v);
        }
        auto space = std::make_shared<const MetricSpace>(MetricSpace::absdiff(values));
        std::vector<std::size_t> images(n);
        for (auto& img : images) img = rng() % n;
        const auto map = SelfMap::table(space, images);
        OrbitAnalyzer analyzer(map);

        for (std::size_t x = 0; x < n; ++x) {
            const auto& stats = analyzer.orbit(x);

            // Orbit entries are pairwise distinct and consecutive under f.
            std::set<std::size_t> seen;
            for (std::size_t s = 0; s < stats.orbit.size(); ++s) {
                CHECK(seen.insert(stats.orbit[s].index).second);
                if (s > 0) CHECK(map.image(stats.orbit[s - 1].index) == stats.orbit[s].index);
            }
            CHECK(stats.tail_entry < stats.orbit.size());

            // Incremental diameter equals the O(n^2) brute force.
            Rational brute(0);
            for (const auto& u : stats.orbit) {
                for (const auto& v : stats.orbit) {
                    brute = clab::max(brute, space->distance(u.index, v.index));
                }
            }
            CHECK(stats.diameter == brute);

            // Monotone orbits: the visited set of f(x) is a subset of x's.
            const auto& next_stats = analyzer.orbit(map.image(x));
            for (const auto& p : next_stats.orbit) {
                CHECK(seen.count(p.index) == 1);
            }

            // Nonincreasing diameter sequence.
            const auto seq = clab::orbit_diameter_sequence(map, space->point(x),
                                                           stats.orbit.size(), n + 1);
            for (std::size_t s = 1; s < seq.size(); ++s) {
                CHECK(seq[s] <= seq[s - 1]);
            }

            // Non-fixed points have positive orbit diameter.
            if (!map.is_fixed(x)) CHECK(stats.diameter.is_positive());

            // Sandwich: M_f(x,y) <= max(D_f x, D_f y) <= D_f(x,y).
            for (std::size_t y = 0; y < n; ++y) {
                const Rational dfx = analyzer.orbit_diameter(x);
                const Rational dfy = analyzer.orbit_diameter(y);
                const Rational pair = analyzer.pair_diameter(x, y);
                const Rational mean = analyzer.mean_diameter(x, y);
                CHECK(clab::max(dfx, dfy) <= pair);
                CHECK(mean <= clab::max(dfx, dfy));
            }
        }
    }
}
