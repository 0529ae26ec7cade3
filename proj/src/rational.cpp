#include "geoextract/rational.hpp"

#include "geoextract/error.hpp"

#include <cctype>

namespace geoextract {
namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& r) {
    const auto& n = boost::multiprecision::numerator(r);
    const auto& d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

double to_display_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace geoextract
