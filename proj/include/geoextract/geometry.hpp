#pragma once

#include "geoextract/error.hpp"
#include "geoextract/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace geoextract {

enum class ObjectClass { Intervals, Segments, Rays, Octants };

const char* to_string(ObjectClass cls);
ObjectClass parse_object_class(std::string_view name);

// Ambient dimension of the points an object class lives in.
std::size_t dimension(ObjectClass cls);

struct Point {
    std::vector<Rational> coords;

    Point() = default;
    Point(std::initializer_list<Rational> c) : coords(c) {}
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& l, const Point& r) { return l.coords < r.coords; }
};

std::string to_string(const Point& p);

// Closed interval [a, b] with a < b.
struct Interval {
    Rational a;
    Rational b;
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum class Axis { Horizontal, Vertical };

// Closed axis-parallel segment. `line` is the shared y of a horizontal
// segment (x of a vertical one); [lo, hi] is its extent along the line.
struct Segment {
    Axis axis = Axis::Horizontal;
    Rational line;
    Rational lo;
    Rational hi;
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Ray orientations: 1 points to +x, 2 to -x, 3 to +y, 4 to -y.
enum class Orientation { PosX = 1, NegX = 2, PosY = 3, NegY = 4 };

inline bool is_horizontal(Orientation o) {
    return o == Orientation::PosX || o == Orientation::NegX;
}

// Closed ray starting at (x, y).
struct Ray {
    Orientation orientation = Orientation::PosX;
    Rational x;
    Rational y;
    friend bool operator==(const Ray&, const Ray&) = default;
};

// {x >= a, y >= b, z >= c}.
struct Octant {
    Rational a;
    Rational b;
    Rational c;
    friend bool operator==(const Octant&, const Octant&) = default;
};

// Right triangle {u >= a, v >= b, u + v <= s} in plane coordinates.
// Every triangle of this form is a homothet of the others.
struct PlaneTriangle {
    Rational a;
    Rational b;
    Rational s;
    friend bool operator==(const PlaneTriangle&, const PlaneTriangle&) = default;
};

using GeomObject = std::variant<Interval, Segment, Ray, Octant>;

ObjectClass class_of(const GeomObject& object);

// Exact closed-set membership. Throws Error{ClassMismatch} when the point
// dimension does not match the object's class.
bool contains(const GeomObject& object, const Point& p);
bool contains(const PlaneTriangle& t, const Point& p);

// Membership factorizes over axes for every object class:
// contains(o, p) == AND over k of covers_coordinate(o, k, p[k]).
bool covers_coordinate(const GeomObject& object, std::size_t axis, const Rational& value);

// Sorted, duplicate-free list of object indices.
using IndexSet = std::vector<std::size_t>;

struct Instance {
    ObjectClass cls = ObjectClass::Intervals;
    std::vector<GeomObject> objects;
    std::vector<Rational> weights;
    std::vector<Point> points;
    // Free-form provenance (generator kind, seed, ...). Not part of the
    // geometry; kept so documents round-trip.
    std::map<std::string, std::string> meta;

    std::size_t size() const { return objects.size(); }
};

// Builds and validates an instance: objects must match `cls`, intervals and
// segments must be non-degenerate, weights positive (defaulting to 1), and
// points must have the class dimension.
Instance make_instance(ObjectClass cls, std::vector<GeomObject> objects,
                       std::vector<Rational> weights = {}, std::vector<Point> points = {});

// Re-runs the checks of make_instance.
void validate(const Instance& instance);

struct Coloring {
    std::vector<int> colors;  // colors[i] in 1..kappa
    int kappa = 0;

    int operator[](std::size_t i) const { return colors[i]; }
    std::size_t size() const { return colors.size(); }
};

// Throws Error{InvalidArgument} unless the coloring is total over the
// instance and every color lies in 1..kappa.
void validate(const Coloring& coloring, std::size_t object_count);

// Number of distinct colors actually used.
int colors_used(const Coloring& coloring);

Rational total_weight(const Instance& instance, std::span<const std::size_t> subset);
Rational total_weight(const Instance& instance);

struct Depth {
    std::size_t count = 0;
    IndexSet members;
};

Depth depth(const Instance& instance, const Point& p);

}  // namespace geoextract
