#include "clab/metric_space.hpp"

#include <algorithm>
#include <set>

namespace clab {

MetricSpace MetricSpace::finite_matrix(std::vector<std::string> labels,
                                       std::vector<std::vector<Rational>> matrix) {
    if (labels.empty()) throw InvariantError("finite-matrix space needs at least one point");
    if (matrix.size() != labels.size()) {
        throw InvariantError("matrix row count does not match label count");
    }
    for (const auto& row : matrix) {
        if (row.size() != labels.size()) {
            throw InvariantError("matrix is not square");
        }
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw InvariantError("duplicate point label '" + l + "'");
    }
    MetricSpace s;
    s.kind_ = SpaceKind::FiniteMatrix;
    s.matrix_ = std::move(matrix);
    s.points_.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        s.points_.push_back(PointId{i, labels[i]});
    }
    return s;
}

MetricSpace MetricSpace::absdiff(std::vector<Rational> values) {
    if (values.empty()) throw InvariantError("absdiff-window space needs at least one point");
    MetricSpace s;
    s.kind_ = SpaceKind::AbsdiffWindow;
    s.points_.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        s.points_.push_back(PointId{i, label_for(values[i])});
    }
    s.values_ = std::move(values);
    return s;
}

MetricSpace MetricSpace::nat_window(const std::vector<long>& excluded, long max_value) {
    if (max_value < 1) throw InvariantError("nat_window bound must be >= 1");
    std::vector<Rational> values;
    for (long v = 1; v <= max_value; ++v) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) {
            values.emplace_back(v);
        }
    }
    if (values.empty()) throw InvariantError("nat_window excludes every point");
    MetricSpace s = absdiff(std::move(values));
    std::string note = "window {1..." + std::to_string(max_value) + "}";
    if (!excluded.empty()) {
        note += " minus {";
        for (std::size_t i = 0; i < excluded.size(); ++i) {
            note += (i ? "," : "") + std::to_string(excluded[i]);
        }
        note += "}";
    }
    s.set_window(note + " of an unbounded integer space", true);
    return s;
}

MetricSpace MetricSpace::grid_window(const Rational& lo, const Rational& hi, const Rational& step) {
    if (!step.is_positive()) throw InvariantError("grid step must be positive");
    if (hi < lo) throw InvariantError("grid bounds out of order");
    std::vector<Rational> values;
    for (Rational v = lo; v <= hi; v += step) {
        values.push_back(v);
    }
    MetricSpace s = absdiff(std::move(values));
    s.set_window("grid [" + lo.str() + ", " + hi.str() + "] step " + step.str() +
                     " sampled from an unbounded space",
                 true);
    return s;
}

const PointId& MetricSpace::point(std::size_t i) const {
    if (i >= points_.size()) throw DomainError("point index " + std::to_string(i) + " out of range");
    return points_[i];
}

Rational MetricSpace::distance(std::size_t x, std::size_t y) const {
    if (x >= points_.size() || y >= points_.size()) {
        throw DomainError("point index out of range in distance()");
    }
    if (kind_ == SpaceKind::FiniteMatrix) return matrix_[x][y];
    return (values_[x] - values_[y]).abs();
}

const Rational& MetricSpace::value(std::size_t i) const {
    if (kind_ != SpaceKind::AbsdiffWindow) {
        throw DomainError("point values exist only in absdiff-window spaces");
    }
    if (i >= values_.size()) throw DomainError("point index out of range in value()");
    return values_[i];
}

std::optional<std::size_t> MetricSpace::find_label(const std::string& label) const {
    for (const auto& p : points_) {
        if (p.label == label) return p.index;
    }
    // Numeric labels may be written in any equivalent form ("2.5" vs "5/2").
    if (kind_ == SpaceKind::AbsdiffWindow) {
        if (auto v = Rational::try_parse(label)) return find_value(*v);
    }
    return std::nullopt;
}

std::optional<std::size_t> MetricSpace::find_value(const Rational& v) const {
    if (kind_ != SpaceKind::AbsdiffWindow) return std::nullopt;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == v) return i;
    }
    return std::nullopt;
}

void MetricSpace::set_window(std::string note, bool of_larger) {
    window_note_ = std::move(note);
    window_of_larger_ = of_larger;
}

MetricSpace MetricSpace::materialize_standalone() const {
    std::vector<std::string> labels;
    labels.reserve(size());
    for (const auto& p : points_) labels.push_back(p.label);
    std::vector<std::vector<Rational>> matrix(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            matrix[i][j] = distance(i, j);
        }
    }
    MetricSpace s = finite_matrix(std::move(labels), std::move(matrix));
    if (!window_note_.empty()) {
        s.set_window("standalone finite space materialized from " + window_note_, false);
    }
    return s;
}

std::string MetricSpace::label_for(const Rational& v) {
    if (v.is_integer()) return v.str();
    // Short decimal when the denominator divides 10^6.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 6);
    if (mpz_divisible_p(scale.get_mpz_t(), v.raw().get_den().get_mpz_t())) {
        return v.decimal_str(6);
    }
    return v.str();
}

MetricAxiomReport validate_metric(const MetricSpace& space) {
    MetricAxiomReport report;
    const std::size_t n = space.size();

    if (space.kind() == SpaceKind::AbsdiffWindow) {
        // |u - v| is symmetric and satisfies the triangle inequality for any
        // real values; only duplicate values can break identity of
        // indiscernibles.
        report.method_note =
            "absdiff-window: duplicate-value scan; symmetry and triangle hold for |u-v|";
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                ++report.pairs_checked;
                if (space.value(i) == space.value(j)) {
                    report.violations.push_back(
                        {MetricViolation::Axiom::Identity, space.point(i), space.point(j),
                         std::nullopt,
                         "distinct points share value " + space.value(i).str()});
                }
            }
        }
        report.pass = report.violations.empty();
        return report;
    }

    report.method_note = "finite-matrix: exhaustive pair and triple check";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i) continue;
            ++report.pairs_checked;
            const Rational dij = space.distance(i, j);
            if (i == j) {
                if (!dij.is_zero()) {
                    report.violations.push_back({MetricViolation::Axiom::Identity,
                                                 space.point(i), space.point(j), std::nullopt,
                                                 "D(x,x) = " + dij.str()});
                }
                continue;
            }
            if (dij.is_zero()) {
                report.violations.push_back({MetricViolation::Axiom::Identity, space.point(i),
                                             space.point(j), std::nullopt,
                                             "D(x,y) = 0 for distinct points"});
            }
            if (dij != space.distance(j, i)) {
                report.violations.push_back(
                    {MetricViolation::Axiom::Symmetry, space.point(i), space.point(j),
                     std::nullopt,
                     "D(x,y) = " + dij.str() + " but D(y,x) = " + space.distance(j, i).str()});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                ++report.triples_checked;
                const Rational lhs = space.distance(i, k);
                const Rational rhs = space.distance(i, j) + space.distance(j, k);
                if (lhs > rhs) {
                    report.violations.push_back(
                        {MetricViolation::Axiom::Triangle, space.point(i), space.point(j),
                         space.point(k),
                         "D(x,z) = " + lhs.str() + " > D(x,y) + D(y,z) = " + rhs.str()});
                }
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

} // namespace clab
