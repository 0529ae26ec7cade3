#include "geoextract/io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace geoextract::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) parse_error(where + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
        if (!ok.count(key)) parse_error("unknown field '" + key + "' in " + where);
    }
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) parse_error("missing field '" + std::string(name) + "' in " + where);
    return *it;
}

std::vector<Rational> coordinates(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) {
        parse_error(where + " must be an array of " + std::to_string(dim) + " numbers");
    }
    std::vector<Rational> out;
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

Json coords_json(std::initializer_list<const Rational*> cs) {
    Json arr = Json::array();
    for (const Rational* c : cs) arr.push_back(to_json(*c));
    return arr;
}

Json object_json(const GeomObject& o) {
    if (auto* iv = std::get_if<Interval>(&o)) return {{"a", to_json(iv->a)}, {"b", to_json(iv->b)}};
    if (auto* s = std::get_if<Segment>(&o)) {
        return {{"axis", s->axis == Axis::Horizontal ? "horizontal" : "vertical"},
                {"line", to_json(s->line)},
                {"lo", to_json(s->lo)},
                {"hi", to_json(s->hi)}};
    }
    if (auto* r = std::get_if<Ray>(&o)) {
        return {{"orientation", static_cast<int>(r->orientation)}, {"apex", coords_json({&r->x, &r->y})}};
    }
    const auto& oc = std::get<Octant>(o);
    return {{"apex", coords_json({&oc.a, &oc.b, &oc.c})}};
}

GeomObject object_from_json(const Json& j, ObjectClass cls, std::size_t index) {
    const std::string where = "object " + std::to_string(index);
    switch (cls) {
        case ObjectClass::Intervals:
            only_fields(j, {"a", "b"}, where);
            return Interval{rational_from_json(field(j, "a", where)), rational_from_json(field(j, "b", where))};
        case ObjectClass::Segments: {
            only_fields(j, {"axis", "line", "lo", "hi"}, where);
            const Json& axis = field(j, "axis", where);
            if (!axis.is_string() || (axis != "horizontal" && axis != "vertical")) {
                parse_error(where + ": axis must be \"horizontal\" or \"vertical\"");
            }
            return Segment{axis == "horizontal" ? Axis::Horizontal : Axis::Vertical,
                           rational_from_json(field(j, "line", where)), rational_from_json(field(j, "lo", where)),
                           rational_from_json(field(j, "hi", where))};
        }
        case ObjectClass::Rays: {
            only_fields(j, {"orientation", "apex"}, where);
            const Json& o = field(j, "orientation", where);
            if (!o.is_number_integer() || o.get<long long>() < 1 || o.get<long long>() > 4) {
                parse_error(where + ": orientation must be an integer 1..4");
            }
            auto apex = coordinates(field(j, "apex", where), 2, where + " apex");
            return Ray{static_cast<Orientation>(o.get<int>()), apex[0], apex[1]};
        }
        case ObjectClass::Octants: {
            only_fields(j, {"apex"}, where);
            auto apex = coordinates(field(j, "apex", where), 3, where + " apex");
            return Octant{apex[0], apex[1], apex[2]};
        }
    }
    parse_error("unreachable object class");
}

Json canonical(const Instance& instance) {
    Json objects = Json::array();
    for (const auto& o : instance.objects) objects.push_back(object_json(o));
    Json weights = Json::array();
    for (const auto& w : instance.weights) weights.push_back(to_json(w));
    Json points = Json::array();
    for (const auto& p : instance.points) {
        Json c = Json::array();
        for (const auto& x : p.coords) c.push_back(to_json(x));
        points.push_back(std::move(c));
    }
    return {{"class", to_string(instance.cls)}, {"objects", objects}, {"weights", weights}, {"points", points}};
}

}  // namespace

Json to_json(const Rational& r) {
    const auto& n = boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) == 1 && n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return to_string(r);
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(j.get<std::uint64_t>())) : Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    parse_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const Instance& instance) {
    Json j = canonical(instance);
    if (!instance.meta.empty()) j["meta"] = instance.meta;
    return j;
}

Instance instance_from_json(const Json& j) {
    only_fields(j, {"class", "objects", "weights", "points", "meta"}, "instance");
    const Json& cls_json = field(j, "class", "instance");
    if (!cls_json.is_string()) parse_error("class must be a string");
    const ObjectClass cls = parse_object_class(cls_json.get<std::string>());

    const Json& objs = field(j, "objects", "instance");
    if (!objs.is_array()) parse_error("objects must be an array");
    std::vector<GeomObject> objects;
    for (std::size_t i = 0; i < objs.size(); ++i) objects.push_back(object_from_json(objs[i], cls, i));

    std::vector<Rational> weights;
    if (auto it = j.find("weights"); it != j.end()) {
        if (!it->is_array() || it->size() != objects.size()) parse_error("weights must align with objects");
        for (const auto& w : *it) weights.push_back(rational_from_json(w));
    }

    std::vector<Point> points;
    if (auto it = j.find("points"); it != j.end()) {
        if (!it->is_array()) parse_error("points must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& c = (*it)[i];
            if (!c.is_array()) parse_error("point " + std::to_string(i) + " must be an array");
            // Dimension is checked by make_instance.
            points.emplace_back(coordinates(c, c.size(), "point " + std::to_string(i)));
        }
    }

    Instance inst = make_instance(cls, std::move(objects), std::move(weights), std::move(points));
    if (auto it = j.find("meta"); it != j.end()) {
        if (!it->is_object()) parse_error("meta must be an object");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string()) parse_error("meta values must be strings");
            inst.meta[key] = value.get<std::string>();
        }
    }
    return inst;
}

Json to_json(const Coloring& coloring) { return {{"kappa", coloring.kappa}, {"colors", coloring.colors}}; }

Coloring coloring_from_json(const Json& j) {
    only_fields(j, {"kappa", "colors"}, "coloring");
    const Json& kappa = field(j, "kappa", "coloring");
    const Json& colors = field(j, "colors", "coloring");
    if (!kappa.is_number_integer() || !colors.is_array()) parse_error("coloring needs integer kappa and a colors array");
    Coloring c;
    c.kappa = kappa.get<int>();
    for (const auto& x : colors) {
        if (!x.is_number_integer()) parse_error("colors must be integers");
        c.colors.push_back(x.get<int>());
    }
    return c;
}

Json to_json(const extraction::ExtractionResult& r) {
    return {{"sol", r.sol},
            {"extracted", r.extracted},
            {"color", r.color},
            {"kappa", r.kappa},
            {"extracted_weight", to_json(r.extracted_weight)},
            {"ratio", to_json(r.ratio)}};
}

std::string instance_digest(const Instance& instance) {
    const std::string text = canonical(instance).dump();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        parse_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

Instance read_instance(const std::string& path) { return instance_from_json(read_json(path)); }

Coloring read_coloring(const std::string& path) { return coloring_from_json(read_json(path)); }

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
        out << content;
        if (!out) throw Error(ErrorKind::InvalidArgument, "failed writing '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace geoextract::io
