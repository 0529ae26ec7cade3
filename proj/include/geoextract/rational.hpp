#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace geoextract {

// Exact rational scalar. Always held in reduced form with a positive
// denominator; all geometric predicates in the library use it.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p", "-p" or "p/q" (q != 0). Throws Error{Parse} otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

// Display-only conversion; never fed back into computation.
double to_display_double(const Rational& r);

inline Rational midpoint(const Rational& lo, const Rational& hi) {
    return (lo + hi) / 2;
}

}  // namespace geoextract
