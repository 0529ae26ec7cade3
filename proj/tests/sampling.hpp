#pragma once

#include "geoextract/geometry.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <span>

// Hyperedges by brute force on a uniform lattice. Every coordinate is a
// multiple of 1/D, so a lattice of step 1/(3D) hits every event value and a
// point strictly between any two consecutive ones. Sampling one unit past
// the extreme coordinates reaches the unbounded cells.
namespace sampling {

using namespace geoextract;

inline std::vector<Rational> object_coordinates(const GeomObject& o) {
    if (auto* iv = std::get_if<Interval>(&o)) return {iv->a, iv->b};
    if (auto* s = std::get_if<Segment>(&o)) return {s->line, s->lo, s->hi};
    if (auto* r = std::get_if<Ray>(&o)) return {r->x, r->y};
    const auto& oc = std::get<Octant>(o);
    return {oc.a, oc.b, oc.c};
}

inline std::vector<Rational> lattice(const std::vector<Rational>& coords) {
    Integer d = 1;
    for (const auto& c : coords) d = boost::integer::lcm(d, Integer(boost::multiprecision::denominator(c)));
    const Rational lo = *std::min_element(coords.begin(), coords.end()) - 1;
    const Rational hi = *std::max_element(coords.begin(), coords.end()) + 1;
    const Rational step = Rational(1) / Rational(3 * d);
    std::vector<Rational> out;
    for (Rational x = lo; x <= hi; x += step) out.push_back(x);
    return out;
}

inline void visit(std::size_t dim, const std::vector<Rational>& axis, const std::function<void(const Point&)>& f) {
    Point p;
    p.coords.assign(dim, Rational(0));
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
        for (std::size_t k = 0; k < dim; ++k) p.coords[k] = axis[idx[k]];
        f(p);
        std::size_t k = 0;
        while (k < dim && ++idx[k] == axis.size()) idx[k++] = 0;
        if (k == dim) return;
    }
}

inline std::set<IndexSet> dense_hyperedges(const Instance& inst) {
    std::vector<Rational> coords;
    for (const auto& o : inst.objects) {
        auto c = object_coordinates(o);
        coords.insert(coords.end(), c.begin(), c.end());
    }
    std::set<IndexSet> edges;
    visit(dimension(inst.cls), lattice(coords), [&](const Point& p) {
        IndexSet e;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (contains(inst.objects[i], p)) e.push_back(i);
        }
        if (e.size() >= 2) edges.insert(e);
    });
    return edges;
}

inline std::set<IndexSet> dense_hyperedges(std::span<const PlaneTriangle> triangles) {
    std::vector<Rational> coords;
    for (const auto& t : triangles) coords.insert(coords.end(), {t.a, t.b, t.s});
    std::set<IndexSet> edges;
    visit(2, lattice(coords), [&](const Point& p) {
        IndexSet e;
        for (std::size_t i = 0; i < triangles.size(); ++i) {
            if (contains(triangles[i], p)) e.push_back(i);
        }
        if (e.size() >= 2) edges.insert(e);
    });
    return edges;
}

template <class Edges>
std::set<IndexSet> keys(const Edges& hyperedges) {
    std::set<IndexSet> out;
    for (const auto& [e, w] : hyperedges.edges) out.insert(e);
    return out;
}

}  // namespace sampling
