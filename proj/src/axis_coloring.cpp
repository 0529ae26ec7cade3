#include "geoextract/axis_coloring.hpp"

#include "geoextract/interval_coloring.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace geoextract::axis {
namespace {

const Rational& line_of(const Ray& r) { return is_horizontal(r.orientation) ? r.y : r.x; }
const Rational& position_of(const Ray& r) { return is_horizontal(r.orientation) ? r.x : r.y; }

// Rotation (x, y) -> (y, -x): +y becomes +x, -y becomes -x, +x becomes -y,
// -x becomes +y.
Ray rotate(const Ray& r) {
    static constexpr Orientation image[] = {Orientation::NegY, Orientation::PosY, Orientation::PosX,
                                            Orientation::NegX};
    return Ray{image[static_cast<int>(r.orientation) - 1], r.y, -r.x};
}

// Two orientations present: the dominating rays of the lower orientation
// get 1 and the others 2; for the higher orientation the roles flip.
std::vector<int> color_two_orientations(std::span<const Ray> rays, const std::vector<bool>& dominating,
                                        Orientation first) {
    std::vector<int> color(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        bool primary = rays[i].orientation == first;
        color[i] = dominating[i] == primary ? 1 : 2;
    }
    return color;
}

}  // namespace

std::vector<LineGroup> group_by_line(std::span<const Segment> segments) {
    std::map<std::pair<int, Rational>, IndexSet> groups;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        groups[{segments[i].axis == Axis::Horizontal ? 0 : 1, segments[i].line}].push_back(i);
    }
    std::vector<LineGroup> out;
    for (auto& [key, members] : groups) {
        out.push_back({key.first == 0 ? Axis::Horizontal : Axis::Vertical, key.second, std::move(members)});
    }
    return out;
}

std::vector<int> color_segments(std::span<const Segment> segments) {
    std::vector<int> color(segments.size(), 0);
    for (const LineGroup& group : group_by_line(segments)) {
        std::vector<Interval> along;
        along.reserve(group.members.size());
        for (std::size_t i : group.members) along.push_back({segments[i].lo, segments[i].hi});
        const std::vector<int> local = intervals::color_intervals(along);
        const int shift = group.axis == Axis::Horizontal ? 0 : 2;
        for (std::size_t k = 0; k < group.members.size(); ++k) color[group.members[k]] = local[k] + shift;
    }
    return color;
}

Coloring color_segments(const Instance& instance) {
    if (instance.cls != ObjectClass::Segments) {
        throw Error(ErrorKind::ClassMismatch, "segment colorer needs a segments instance");
    }
    std::vector<Segment> segs;
    segs.reserve(instance.size());
    for (const auto& o : instance.objects) segs.push_back(std::get<Segment>(o));
    return Coloring{color_segments(segs), 4};
}

RayTypeProfile ray_type_profile(std::span<const Ray> rays) {
    RayTypeProfile profile;
    for (const auto& r : rays) profile.present[static_cast<int>(r.orientation) - 1] = true;
    profile.type = static_cast<int>(std::count(profile.present.begin(), profile.present.end(), true));
    return profile;
}

std::vector<bool> dominating_rays(std::span<const Ray> rays) {
    std::map<std::pair<int, Rational>, std::size_t> best;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const Ray& r = rays[i];
        auto key = std::make_pair(static_cast<int>(r.orientation), line_of(r));
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, i);
            continue;
        }
        const Rational& incumbent = position_of(rays[it->second]);
        const Rational& candidate = position_of(r);
        bool towards_positive = r.orientation == Orientation::PosX || r.orientation == Orientation::PosY;
        if (towards_positive ? candidate < incumbent : candidate > incumbent) it->second = i;
    }
    std::vector<bool> dominating(rays.size(), false);
    for (const auto& [key, i] : best) dominating[i] = true;
    return dominating;
}

ClippedRays clip_rays_to_box(std::span<const Ray> rays) {
    if (rays.empty()) throw Error(ErrorKind::InvalidArgument, "cannot clip an empty ray set");
    ClippedRays out;
    auto [xlo, xhi] = std::minmax_element(rays.begin(), rays.end(),
                                          [](const Ray& l, const Ray& r) { return l.x < r.x; });
    auto [ylo, yhi] = std::minmax_element(rays.begin(), rays.end(),
                                          [](const Ray& l, const Ray& r) { return l.y < r.y; });
    out.xmin = xlo->x - 1;
    out.xmax = xhi->x + 1;
    out.ymin = ylo->y - 1;
    out.ymax = yhi->y + 1;
    out.segments.reserve(rays.size());
    for (const Ray& r : rays) {
        switch (r.orientation) {
            case Orientation::PosX: out.segments.push_back({Axis::Horizontal, r.y, r.x, out.xmax}); break;
            case Orientation::NegX: out.segments.push_back({Axis::Horizontal, r.y, out.xmin, r.x}); break;
            case Orientation::PosY: out.segments.push_back({Axis::Vertical, r.x, r.y, out.ymax}); break;
            case Orientation::NegY: out.segments.push_back({Axis::Vertical, r.x, out.ymin, r.y}); break;
        }
    }
    return out;
}

Coloring color_rays(std::span<const Ray> rays) {
    if (rays.empty()) throw Error(ErrorKind::InvalidArgument, "cannot color an empty ray set");
    const RayTypeProfile profile = ray_type_profile(rays);

    switch (profile.type) {
        case 1: {
            auto dominating = dominating_rays(rays);
            Coloring c{std::vector<int>(rays.size()), 2};
            for (std::size_t i = 0; i < rays.size(); ++i) c.colors[i] = dominating[i] ? 1 : 2;
            return c;
        }
        case 2: {
            auto first = static_cast<Orientation>(
                1 + (std::find(profile.present.begin(), profile.present.end(), true) - profile.present.begin()));
            return Coloring{color_two_orientations(rays, dominating_rays(rays), first), 2};
        }
        case 3: {
            // Canonical frame: the parallel pair is horizontal (orientations 1, 2).
            bool horizontal_pair = profile.present[0] && profile.present[1];
            std::vector<Ray> frame(rays.begin(), rays.end());
            if (!horizontal_pair) {
                for (auto& r : frame) r = rotate(r);
            }
            auto dominating = dominating_rays(frame);
            auto color = color_two_orientations(frame, dominating, Orientation::PosX);
            for (std::size_t i = 0; i < frame.size(); ++i) {
                if (!is_horizontal(frame[i].orientation)) color[i] = dominating[i] ? 3 : 1;
            }
            return Coloring{std::move(color), 3};
        }
        default: {
            auto clipped = clip_rays_to_box(rays);
            return Coloring{color_segments(clipped.segments), 4};
        }
    }
}

Coloring color_rays(const Instance& instance) {
    if (instance.cls != ObjectClass::Rays) throw Error(ErrorKind::ClassMismatch, "ray colorer needs a rays instance");
    std::vector<Ray> rays;
    rays.reserve(instance.size());
    for (const auto& o : instance.objects) rays.push_back(std::get<Ray>(o));
    return color_rays(rays);
}

}  // namespace geoextract::axis
