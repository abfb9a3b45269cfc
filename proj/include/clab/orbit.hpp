#pragma once

#include <cstddef>
#include <vector>

#include "clab/self_map.hpp"

namespace clab {

// One orbit O_f(x): distinct points in first-visit order, where the orbit
// enters its cycle, and the orbit diameter D_f(x).
struct OrbitStats {
    std::vector<PointId> orbit;
    std::size_t tail_entry = 0; // first index of the first repeated point
    Rational diameter;          // max pairwise distance over the orbit
};

// D_f(x,y) over the orbit union and the mean M_f(x,y) = (D_f(x)+D_f(y))/2.
struct PairStats {
    Rational pair_diameter;
    Rational mean_diameter;
};

struct FixPointReport {
    std::vector<PointId> fixed_points;
    bool unique = false;
};

// Iterates f from x until a previously visited point recurs. Throws
// BudgetError if no repeat happens within max_steps applications of f.
OrbitStats compute_orbit(const SelfMap& map, const PointId& x, std::size_t max_steps);

// [D_f(x), D_f(fx), ..., D_f(f^n x)].
std::vector<Rational> orbit_diameter_sequence(const SelfMap& map, const PointId& x, std::size_t n,
                                              std::size_t max_steps);

PairStats pair_stats(const SelfMap& map, const PointId& x, const PointId& y,
                     std::size_t max_steps);

// Exhaustive scan of the window in point order.
FixPointReport fixed_points(const SelfMap& map);

// Budget that can never fail on a closed table map (pigeonhole).
inline std::size_t default_max_steps(const MetricSpace& space) { return space.size() + 1; }

// Precomputes every orbit of (space, map) once; read-only afterwards, so
// concurrent lookups need no synchronization. Certification evaluates D_f
// values O(n^2) times, hence the memoization.
class OrbitAnalyzer {
public:
    explicit OrbitAnalyzer(const SelfMap& map, std::size_t max_steps = 0);

    const SelfMap& map() const { return map_; }
    const MetricSpace& space() const { return map_.space(); }

    const OrbitStats& orbit(std::size_t point) const;
    const Rational& orbit_diameter(std::size_t point) const { return orbit(point).diameter; }
    Rational pair_diameter(std::size_t x, std::size_t y) const; // D_f(x,y)
    Rational mean_diameter(std::size_t x, std::size_t y) const; // M_f(x,y)
    const FixPointReport& fixed() const { return fixed_; }
    bool is_fixed(std::size_t point) const { return map_.is_fixed(point); }

private:
    const SelfMap& map_;
    std::vector<OrbitStats> orbits_;
    FixPointReport fixed_;
};

} // namespace clab
