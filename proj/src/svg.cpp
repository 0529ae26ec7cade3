#include "geoextract/svg.hpp"

#include "geoextract/octant_coloring.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace geoextract::svg {
namespace {

constexpr std::array<const char*, 4> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"};
constexpr const char* kUncolored = "#7f7f7f";
const Rational kCanvas = 600;
const Rational kMargin = 30;

struct Stroke {
    std::size_t index;
    Rational x1, y1, x2, y2;
    bool arrow = false;
};

struct Polygon {
    std::size_t index;
    std::vector<std::pair<Rational, Rational>> corners;
};

struct Scene {
    std::vector<Stroke> strokes;
    std::vector<Polygon> polygons;
    std::vector<std::pair<Rational, Rational>> crosses;
    Rational xmin, xmax, ymin, ymax;
};

void fit(Scene& s, const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    s.xmin = *std::min_element(xs.begin(), xs.end());
    s.xmax = *std::max_element(xs.begin(), xs.end());
    s.ymin = *std::min_element(ys.begin(), ys.end());
    s.ymax = *std::max_element(ys.begin(), ys.end());
}

Scene scene_of(const Instance& inst) {
    Scene s;
    std::vector<Rational> xs, ys;
    switch (inst.cls) {
        case ObjectClass::Intervals: {
            for (std::size_t i = 0; i < inst.size(); ++i) {
                const auto& iv = std::get<Interval>(inst.objects[i]);
                Rational row = Rational(static_cast<long>(i) + 1);
                s.strokes.push_back({i, iv.a, row, iv.b, row});
                xs.insert(xs.end(), {iv.a, iv.b});
                ys.push_back(row);
            }
            for (const auto& p : inst.points) {
                s.crosses.emplace_back(p[0], Rational(0));
                xs.push_back(p[0]);
            }
            ys.push_back(0);
            fit(s, xs, ys);
            break;
        }
        case ObjectClass::Segments: {
            for (std::size_t i = 0; i < inst.size(); ++i) {
                const auto& sg = std::get<Segment>(inst.objects[i]);
                if (sg.axis == Axis::Horizontal) {
                    s.strokes.push_back({i, sg.lo, sg.line, sg.hi, sg.line});
                } else {
                    s.strokes.push_back({i, sg.line, sg.lo, sg.line, sg.hi});
                }
            }
            for (const auto& st : s.strokes) {
                xs.insert(xs.end(), {st.x1, st.x2});
                ys.insert(ys.end(), {st.y1, st.y2});
            }
            for (const auto& p : inst.points) {
                s.crosses.emplace_back(p[0], p[1]);
                xs.push_back(p[0]);
                ys.push_back(p[1]);
            }
            fit(s, xs, ys);
            break;
        }
        case ObjectClass::Rays: {
            for (const auto& o : inst.objects) {
                const auto& r = std::get<Ray>(o);
                xs.push_back(r.x);
                ys.push_back(r.y);
            }
            for (const auto& p : inst.points) {
                s.crosses.emplace_back(p[0], p[1]);
                xs.push_back(p[0]);
                ys.push_back(p[1]);
            }
            fit(s, xs, ys);
            // Padded viewport; every ray runs out to its edge.
            s.xmin -= 2;
            s.xmax += 2;
            s.ymin -= 2;
            s.ymax += 2;
            for (std::size_t i = 0; i < inst.size(); ++i) {
                const auto& r = std::get<Ray>(inst.objects[i]);
                Stroke st{i, r.x, r.y, r.x, r.y, true};
                switch (r.orientation) {
                    case Orientation::PosX: st.x2 = s.xmax; break;
                    case Orientation::NegX: st.x2 = s.xmin; break;
                    case Orientation::PosY: st.y2 = s.ymax; break;
                    case Orientation::NegY: st.y2 = s.ymin; break;
                }
                s.strokes.push_back(st);
            }
            break;
        }
        case ObjectClass::Octants: {
            std::vector<Octant> octs;
            for (const auto& o : inst.objects) octs.push_back(std::get<Octant>(o));
            const auto dag = octants::compute_domination(octs);
            std::vector<Octant> kept;
            for (std::size_t i : dag.nondominated) kept.push_back(octs[i]);
            const Rational cmax = octants::compute_cmax(kept);
            for (std::size_t k = 0; k < kept.size(); ++k) {
                const auto& o = kept[k];
                const Rational s_ = cmax - o.c;
                s.polygons.push_back({dag.nondominated[k], {{o.a, o.b}, {s_ - o.b, o.b}, {o.a, s_ - o.a}}});
                xs.insert(xs.end(), {o.a, s_ - o.b});
                ys.insert(ys.end(), {o.b, s_ - o.a});
            }
            for (const auto& p : inst.points) {
                s.crosses.emplace_back(p[0], p[1]);
                xs.push_back(p[0]);
                ys.push_back(p[1]);
            }
            fit(s, xs, ys);
            break;
        }
    }
    if (s.xmax == s.xmin) {
        s.xmin -= 1;
        s.xmax += 1;
    }
    if (s.ymax == s.ymin) {
        s.ymin -= 1;
        s.ymax += 1;
    }
    return s;
}

class Frame {
public:
    explicit Frame(const Scene& s) : xmin_(s.xmin), ymax_(s.ymax) {
        scale_ = (kCanvas - 2 * kMargin) / std::max(s.xmax - s.xmin, s.ymax - s.ymin);
        width_ = (s.xmax - s.xmin) * scale_ + 2 * kMargin;
        height_ = (s.ymax - s.ymin) * scale_ + 2 * kMargin;
    }
    std::string x(const Rational& v) const { return fixed6((v - xmin_) * scale_ + kMargin); }
    std::string y(const Rational& v) const { return fixed6((ymax_ - v) * scale_ + kMargin); }
    const Rational& width() const { return width_; }
    const Rational& height() const { return height_; }

private:
    Rational xmin_, ymax_, scale_, width_, height_;
};

const char* stroke_color(const std::optional<Coloring>& coloring, std::size_t index) {
    if (!coloring) return kUncolored;
    int c = coloring->colors[index];
    return c >= 1 ? kPalette[static_cast<std::size_t>(c - 1) % kPalette.size()] : kUncolored;
}

}  // namespace

std::string fixed6(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Rational scaled = abs(r) * 1000000;
    Integer q = numerator(scaled) / denominator(scaled);
    Integer rem = numerator(scaled) % denominator(scaled);
    if (2 * rem >= denominator(scaled)) ++q;
    std::string digits = q.str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    std::string out = (r < 0 && q != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
    return out;
}

std::string render_svg(const Instance& instance, const std::optional<Coloring>& coloring) {
    validate(instance);
    if (coloring) validate(*coloring, instance.size());
    if (instance.objects.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to render");
    const Scene scene = scene_of(instance);
    const Frame f(scene);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(f.width()) << "\" height=\""
        << fixed6(f.height()) << "\" viewBox=\"0 0 " << fixed6(f.width()) << " " << fixed6(f.height()) << "\">\n";
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" "
           "markerHeight=\"8\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" "
           "fill=\"context-stroke\"/></marker></defs>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& p : scene.polygons) {
        out << "<polygon class=\"object\" data-index=\"" << p.index << "\" points=\"";
        for (std::size_t k = 0; k < p.corners.size(); ++k) {
            out << (k ? " " : "") << f.x(p.corners[k].first) << "," << f.y(p.corners[k].second);
        }
        const char* color = stroke_color(coloring, p.index);
        out << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    for (const auto& s : scene.strokes) {
        out << "<line class=\"object\" data-index=\"" << s.index << "\" x1=\"" << f.x(s.x1) << "\" y1=\"" << f.y(s.y1)
            << "\" x2=\"" << f.x(s.x2) << "\" y2=\"" << f.y(s.y2) << "\" stroke=\"" << stroke_color(coloring, s.index)
            << "\" stroke-width=\"3\"";
        if (s.arrow) out << " marker-end=\"url(#arrow)\"";
        out << "/>\n";
    }
    for (const auto& [x, y] : scene.crosses) {
        out << "<path class=\"target\" transform=\"translate(" << f.x(x) << "," << f.y(y)
            << ")\" d=\"M-5,-5 L5,5 M-5,5 L5,-5\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace geoextract::svg
