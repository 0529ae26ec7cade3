#include "geoextract/geometry.hpp"

#include <algorithm>
#include <set>

namespace geoextract {

const char* to_string(ObjectClass cls) {
    switch (cls) {
        case ObjectClass::Intervals: return "intervals";
        case ObjectClass::Segments: return "segments";
        case ObjectClass::Rays: return "rays";
        case ObjectClass::Octants: return "octants";
    }
    return "?";
}

ObjectClass parse_object_class(std::string_view name) {
    if (name == "intervals") return ObjectClass::Intervals;
    if (name == "segments") return ObjectClass::Segments;
    if (name == "rays") return ObjectClass::Rays;
    if (name == "octants") return ObjectClass::Octants;
    throw Error(ErrorKind::Parse, "unknown object class '" + std::string(name) + "'");
}

std::size_t dimension(ObjectClass cls) {
    switch (cls) {
        case ObjectClass::Intervals: return 1;
        case ObjectClass::Segments:
        case ObjectClass::Rays: return 2;
        case ObjectClass::Octants: return 3;
    }
    return 0;
}

std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

ObjectClass class_of(const GeomObject& object) {
    switch (object.index()) {
        case 0: return ObjectClass::Intervals;
        case 1: return ObjectClass::Segments;
        case 2: return ObjectClass::Rays;
        default: return ObjectClass::Octants;
    }
}

namespace {

struct AxisCover {
    std::size_t axis;
    const Rational& v;

    bool operator()(const Interval& i) const { return i.a <= v && v <= i.b; }

    bool operator()(const Segment& s) const {
        bool along = (s.axis == Axis::Horizontal) == (axis == 0);
        return along ? (s.lo <= v && v <= s.hi) : v == s.line;
    }

    bool operator()(const Ray& r) const {
        switch (r.orientation) {
            case Orientation::PosX: return axis == 0 ? v >= r.x : v == r.y;
            case Orientation::NegX: return axis == 0 ? v <= r.x : v == r.y;
            case Orientation::PosY: return axis == 0 ? v == r.x : v >= r.y;
            case Orientation::NegY: return axis == 0 ? v == r.x : v <= r.y;
        }
        return false;
    }

    bool operator()(const Octant& o) const {
        const Rational& apex = axis == 0 ? o.a : axis == 1 ? o.b : o.c;
        return v >= apex;
    }
};

}  // namespace

bool covers_coordinate(const GeomObject& object, std::size_t axis, const Rational& value) {
    if (axis >= dimension(class_of(object))) {
        throw Error(ErrorKind::ClassMismatch, "axis out of range for object class");
    }
    return std::visit(AxisCover{axis, value}, object);
}

bool contains(const GeomObject& object, const Point& p) {
    std::size_t d = dimension(class_of(object));
    if (p.dim() != d) {
        throw Error(ErrorKind::ClassMismatch,
                    "point " + to_string(p) + " does not match " + to_string(class_of(object)));
    }
    for (std::size_t k = 0; k < d; ++k) {
        if (!std::visit(AxisCover{k, p[k]}, object)) return false;
    }
    return true;
}

bool contains(const PlaneTriangle& t, const Point& p) {
    if (p.dim() != 2) throw Error(ErrorKind::ClassMismatch, "plane triangle needs a 2D point");
    return p[0] >= t.a && p[1] >= t.b && p[0] + p[1] <= t.s;
}

void validate(const Instance& instance) {
    const std::size_t d = dimension(instance.cls);
    for (std::size_t i = 0; i < instance.objects.size(); ++i) {
        const auto& o = instance.objects[i];
        if (class_of(o) != instance.cls) {
            throw Error(ErrorKind::ClassMismatch, "object " + std::to_string(i) + " is not of class " +
                                                      to_string(instance.cls));
        }
        if (auto* iv = std::get_if<Interval>(&o); iv && !(iv->a < iv->b)) {
            throw Error(ErrorKind::Parse, "degenerate interval at index " + std::to_string(i));
        }
        if (auto* sg = std::get_if<Segment>(&o); sg && !(sg->lo < sg->hi)) {
            throw Error(ErrorKind::Parse, "degenerate segment at index " + std::to_string(i));
        }
    }
    if (instance.weights.size() != instance.objects.size()) {
        throw Error(ErrorKind::InvalidArgument, "weights not aligned with objects");
    }
    for (std::size_t i = 0; i < instance.weights.size(); ++i) {
        if (instance.weights[i] <= 0) {
            throw Error(ErrorKind::InvalidArgument, "non-positive weight at index " + std::to_string(i));
        }
    }
    for (const auto& p : instance.points) {
        if (p.dim() != d) {
            throw Error(ErrorKind::ClassMismatch, "point " + to_string(p) + " has wrong dimension");
        }
    }
}

Instance make_instance(ObjectClass cls, std::vector<GeomObject> objects, std::vector<Rational> weights,
                       std::vector<Point> points) {
    Instance inst;
    inst.cls = cls;
    inst.objects = std::move(objects);
    inst.weights = weights.empty() ? std::vector<Rational>(inst.objects.size(), Rational(1)) : std::move(weights);
    inst.points = std::move(points);
    validate(inst);
    return inst;
}

void validate(const Coloring& coloring, std::size_t object_count) {
    if (coloring.kappa < 1) throw Error(ErrorKind::InvalidArgument, "kappa must be positive");
    if (coloring.colors.size() != object_count) {
        throw Error(ErrorKind::InvalidArgument, "coloring has " + std::to_string(coloring.colors.size()) +
                                                    " entries, instance has " + std::to_string(object_count));
    }
    for (std::size_t i = 0; i < coloring.colors.size(); ++i) {
        int c = coloring.colors[i];
        if (c < 1 || c > coloring.kappa) {
            throw Error(ErrorKind::InvalidArgument, "color of object " + std::to_string(i) + " outside 1.." +
                                                        std::to_string(coloring.kappa));
        }
    }
}

int colors_used(const Coloring& coloring) {
    std::set<int> used(coloring.colors.begin(), coloring.colors.end());
    return static_cast<int>(used.size());
}

Rational total_weight(const Instance& instance, std::span<const std::size_t> subset) {
    Rational sum = 0;
    for (std::size_t i : subset) {
        if (i >= instance.weights.size()) {
            throw Error(ErrorKind::InvalidArgument, "unknown object index " + std::to_string(i));
        }
        sum += instance.weights[i];
    }
    return sum;
}

Rational total_weight(const Instance& instance) {
    Rational sum = 0;
    for (const auto& w : instance.weights) sum += w;
    return sum;
}

Depth depth(const Instance& instance, const Point& p) {
    if (p.dim() != dimension(instance.cls)) {
        throw Error(ErrorKind::ClassMismatch, "point " + to_string(p) + " has wrong dimension");
    }
    Depth result;
    for (std::size_t i = 0; i < instance.objects.size(); ++i) {
        if (contains(instance.objects[i], p)) result.members.push_back(i);
    }
    result.count = result.members.size();
    return result;
}

}  // namespace geoextract
