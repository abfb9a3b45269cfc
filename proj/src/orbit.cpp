#include "clab/orbit.hpp"

#include <algorithm>

namespace clab {

OrbitStats compute_orbit(const SelfMap& map, const PointId& x, std::size_t max_steps) {
    const MetricSpace& space = map.space();
    if (x.index >= space.size()) throw DomainError("orbit start point out of range");
    if (max_steps == 0) throw DomainError("max_steps must be positive");

    OrbitStats stats;
    std::vector<std::size_t> first_seen(space.size(), SIZE_MAX);
    std::size_t current = x.index;
    first_seen[current] = 0;
    stats.orbit.push_back(space.point(current));
    stats.diameter = Rational(0);

    for (std::size_t step = 0; step < max_steps; ++step) {
        const std::size_t next = map.image(current);
        if (first_seen[next] != SIZE_MAX) {
            stats.tail_entry = first_seen[next];
            return stats;
        }
        // Running-max diameter update against all previously visited points.
        for (const PointId& seen : stats.orbit) {
            stats.diameter = max(stats.diameter, space.distance(seen.index, next));
        }
        first_seen[next] = stats.orbit.size();
        stats.orbit.push_back(space.point(next));
        current = next;
    }
    throw BudgetError("orbit of '" + x.label + "' not periodic within " +
                      std::to_string(max_steps) + " steps");
}

std::vector<Rational> orbit_diameter_sequence(const SelfMap& map, const PointId& x, std::size_t n,
                                              std::size_t max_steps) {
    std::vector<Rational> seq;
    seq.reserve(n + 1);
    PointId current = x;
    for (std::size_t i = 0; i <= n; ++i) {
        seq.push_back(compute_orbit(map, current, max_steps).diameter);
        current = map.apply(current);
    }
    return seq;
}

PairStats pair_stats(const SelfMap& map, const PointId& x, const PointId& y,
                     std::size_t max_steps) {
    const OrbitStats ox = compute_orbit(map, x, max_steps);
    const OrbitStats oy = compute_orbit(map, y, max_steps);
    const MetricSpace& space = map.space();

    std::vector<std::size_t> un;
    un.reserve(ox.orbit.size() + oy.orbit.size());
    for (const auto& p : ox.orbit) un.push_back(p.index);
    for (const auto& p : oy.orbit) un.push_back(p.index);
    std::sort(un.begin(), un.end());
    un.erase(std::unique(un.begin(), un.end()), un.end());

    PairStats stats;
    stats.pair_diameter = Rational(0);
    for (std::size_t i = 0; i < un.size(); ++i) {
        for (std::size_t j = i + 1; j < un.size(); ++j) {
            stats.pair_diameter = max(stats.pair_diameter, space.distance(un[i], un[j]));
        }
    }
    stats.mean_diameter = (ox.diameter + oy.diameter) / Rational(2);
    return stats;
}

FixPointReport fixed_points(const SelfMap& map) {
    FixPointReport report;
    for (std::size_t i = 0; i < map.space().size(); ++i) {
        if (map.is_fixed(i)) report.fixed_points.push_back(map.space().point(i));
    }
    report.unique = report.fixed_points.size() == 1;
    return report;
}

OrbitAnalyzer::OrbitAnalyzer(const SelfMap& map, std::size_t max_steps) : map_(map) {
    const std::size_t budget = max_steps == 0 ? default_max_steps(map.space()) : max_steps;
    orbits_.reserve(map.space().size());
    for (std::size_t i = 0; i < map.space().size(); ++i) {
        orbits_.push_back(compute_orbit(map, map.space().point(i), budget));
    }
    fixed_ = fixed_points(map);
}

const OrbitStats& OrbitAnalyzer::orbit(std::size_t point) const {
    if (point >= orbits_.size()) throw DomainError("point index out of range in orbit()");
    return orbits_[point];
}

Rational OrbitAnalyzer::pair_diameter(std::size_t x, std::size_t y) const {
    const OrbitStats& ox = orbit(x);
    const OrbitStats& oy = orbit(y);
    const MetricSpace& space = map_.space();
    // max over the union = max(D_f(x), D_f(y), cross distances).
    Rational d = max(ox.diameter, oy.diameter);
    for (const auto& u : ox.orbit) {
        for (const auto& v : oy.orbit) {
            d = max(d, space.distance(u.index, v.index));
        }
    }
    return d;
}

Rational OrbitAnalyzer::mean_diameter(std::size_t x, std::size_t y) const {
    return (orbit(x).diameter + orbit(y).diameter) / Rational(2);
}

} // namespace clab
