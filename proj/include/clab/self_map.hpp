#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "clab/metric_space.hpp"

namespace clab {

enum class MapKind { Table, Rule };

// A total self-map on a metric space. Rule maps are resolved to a table over
// the window at construction, so totality (closure) is checked once and
// everything downstream is a lookup. Immutable after construction.
class SelfMap {
public:
    static SelfMap table(std::shared_ptr<const MetricSpace> space, std::vector<std::size_t> images);
    // Rules: "example10" (no params), "example7" (params a, b).
    static SelfMap rule(std::shared_ptr<const MetricSpace> space, const std::string& name,
                        const std::map<std::string, Rational>& params);

    const MetricSpace& space() const { return *space_; }
    std::shared_ptr<const MetricSpace> space_ptr() const { return space_; }

    std::size_t image(std::size_t point) const;
    PointId apply(const PointId& p) const { return space_->point(image(p.index)); }
    bool is_fixed(std::size_t point) const { return image(point) == point; }

    MapKind kind() const { return kind_; }
    const std::string& rule_name() const { return rule_name_; }
    const std::map<std::string, Rational>& rule_params() const { return rule_params_; }
    const std::vector<std::size_t>& images() const { return images_; }

private:
    SelfMap() = default;

    std::shared_ptr<const MetricSpace> space_;
    std::vector<std::size_t> images_;
    MapKind kind_ = MapKind::Table;
    std::string rule_name_;
    std::map<std::string, Rational> rule_params_;
};

} // namespace clab
