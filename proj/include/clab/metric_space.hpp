#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clab/rational.hpp"

namespace clab {

// Index into a space's point table plus its display label.
struct PointId {
    std::size_t index = 0;
    std::string label;

    bool operator==(const PointId& o) const { return index == o.index; }
    bool operator<(const PointId& o) const { return index < o.index; }
};

enum class SpaceKind { FiniteMatrix, AbsdiffWindow };

// A finite metric space: either an explicit symmetric distance matrix over
// labeled points, or a list of numeric values with distance |u - v|.
// Immutable after construction; construction does not validate the metric
// axioms (validate_metric reports on them), only shape.
class MetricSpace {
public:
    static MetricSpace finite_matrix(std::vector<std::string> labels,
                                     std::vector<std::vector<Rational>> matrix);
    static MetricSpace absdiff(std::vector<Rational> values);
    // {1, ..., max_value} \ excluded, ascending. Sets a window disclosure.
    static MetricSpace nat_window(const std::vector<long>& excluded, long max_value);
    // lo, lo+step, ..., up to hi inclusive. Sets a window disclosure.
    static MetricSpace grid_window(const Rational& lo, const Rational& hi, const Rational& step);

    SpaceKind kind() const { return kind_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<PointId>& points() const { return points_; }
    const PointId& point(std::size_t i) const;

    Rational distance(std::size_t x, std::size_t y) const;
    Rational distance(const PointId& x, const PointId& y) const { return distance(x.index, y.index); }

    // Numeric value of a point; AbsdiffWindow only.
    const Rational& value(std::size_t i) const;
    std::optional<std::size_t> find_label(const std::string& label) const;
    std::optional<std::size_t> find_value(const Rational& v) const;

    // Disclosure for windows sampled out of an infinite ambient space. A
    // space with window_of_larger() set never supports theorem claims; the
    // note is carried into every certification report.
    const std::string& window_note() const { return window_note_; }
    bool window_of_larger() const { return window_of_larger_; }
    void set_window(std::string note, bool of_larger);

    // Explicit finite-matrix copy of this space, usable as a complete metric
    // space in its own right (theorem validation on truncations).
    MetricSpace materialize_standalone() const;

    // Display label for a numeric value: integer, short decimal, or "p/q".
    static std::string label_for(const Rational& v);

private:
    MetricSpace() = default;

    SpaceKind kind_ = SpaceKind::AbsdiffWindow;
    std::vector<PointId> points_;
    std::vector<Rational> values_;                 // AbsdiffWindow
    std::vector<std::vector<Rational>> matrix_;    // FiniteMatrix
    std::string window_note_;
    bool window_of_larger_ = false;
};

struct MetricViolation {
    enum class Axiom { Identity, Symmetry, Triangle };
    Axiom axiom;
    PointId x, y;
    std::optional<PointId> z;   // Triangle only
    std::string detail;
};

struct MetricAxiomReport {
    bool pass = true;
    std::vector<MetricViolation> violations;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::string method_note;
};

// Exhaustive pair/triple check for matrix spaces. Absdiff spaces get a
// duplicate-value scan (the only way |u-v| can break an axiom) plus an
// analytic note for symmetry and the triangle inequality.
MetricAxiomReport validate_metric(const MetricSpace& space);

} // namespace clab
