#pragma once

#include "geoextract/geometry.hpp"

#include <string>

namespace support {

using namespace geoextract;

inline Rational q(const std::string& s) { return parse_rational(s); }

inline GeomObject iv(Rational a, Rational b) { return Interval{std::move(a), std::move(b)}; }
inline GeomObject hseg(Rational y, Rational lo, Rational hi) {
    return Segment{Axis::Horizontal, std::move(y), std::move(lo), std::move(hi)};
}
inline GeomObject vseg(Rational x, Rational lo, Rational hi) {
    return Segment{Axis::Vertical, std::move(x), std::move(lo), std::move(hi)};
}
inline GeomObject ray(int orientation, Rational x, Rational y) {
    return Ray{static_cast<Orientation>(orientation), std::move(x), std::move(y)};
}
inline GeomObject oct(Rational a, Rational b, Rational c) { return Octant{std::move(a), std::move(b), std::move(c)}; }

}  // namespace support
