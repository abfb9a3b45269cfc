#include "clab/self_map.hpp"

namespace clab {

namespace {

// Membership classes of Example 10's partition of N\{3}:
// A = {7,11,15,...}, B = {1,5,9,...}, C = evens.
bool in_class_a(long v) { return v >= 7 && v % 4 == 3; }

Rational rule_image_value(const std::string& name, const std::map<std::string, Rational>& params,
                          const Rational& v) {
    if (name == "example10") {
        if (!v.is_integer() || !v.is_positive() || v == Rational(3)) {
            throw InvariantError("rule 'example10' is defined on positive integers except 3; got " +
                                 v.str());
        }
        return in_class_a(v.to_long()) ? Rational(2) : Rational(1);
    }
    if (name == "example7") {
        const auto a = params.find("a");
        const auto b = params.find("b");
        if (a == params.end() || b == params.end()) {
            throw InvariantError("rule 'example7' requires params a and b");
        }
        if (!a->second.is_positive() || !b->second.is_positive()) {
            throw InvariantError("rule 'example7' requires a, b > 0");
        }
        return v == a->second ? a->second : b->second;
    }
    throw ParseError("unknown map rule '" + name + "'");
}

} // namespace

SelfMap SelfMap::table(std::shared_ptr<const MetricSpace> space, std::vector<std::size_t> images) {
    if (!space) throw InvariantError("self-map needs a space");
    if (images.size() != space->size()) {
        throw InvariantError("map table has " + std::to_string(images.size()) + " images for " +
                             std::to_string(space->size()) + " points");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] >= space->size()) {
            throw InvariantError("map image of point '" + space->point(i).label +
                                 "' is outside the point set (index " +
                                 std::to_string(images[i]) + ")");
        }
    }
    SelfMap m;
    m.space_ = std::move(space);
    m.images_ = std::move(images);
    m.kind_ = MapKind::Table;
    return m;
}

SelfMap SelfMap::rule(std::shared_ptr<const MetricSpace> space, const std::string& name,
                      const std::map<std::string, Rational>& params) {
    if (!space) throw InvariantError("self-map needs a space");
    if (space->kind() != SpaceKind::AbsdiffWindow) {
        throw InvariantError("rule maps need numeric point values (absdiff-window space)");
    }
    std::vector<std::size_t> images;
    images.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) {
        const Rational img = rule_image_value(name, params, space->value(i));
        const auto idx = space->find_value(img);
        if (!idx) {
            throw InvariantError("rule '" + name + "' maps point '" + space->point(i).label +
                                 "' to " + img.str() + ", which is outside the window");
        }
        images.push_back(*idx);
    }
    SelfMap m = table(std::move(space), std::move(images));
    m.kind_ = MapKind::Rule;
    m.rule_name_ = name;
    m.rule_params_ = params;
    return m;
}

std::size_t SelfMap::image(std::size_t point) const {
    if (point >= images_.size()) throw DomainError("point index out of range in image()");
    return images_[point];
}

} // namespace clab
