#include "geoextract/colorers.hpp"

#include "geoextract/axis_coloring.hpp"
#include "geoextract/interval_coloring.hpp"
#include "geoextract/octant_coloring.hpp"

#include <algorithm>

namespace geoextract {

Coloring color_instance(const Instance& instance, std::size_t size_cap) {
    switch (instance.cls) {
        case ObjectClass::Intervals: return intervals::color_intervals(instance);
        case ObjectClass::Segments: return axis::color_segments(instance);
        case ObjectClass::Rays: return axis::color_rays(instance);
        case ObjectClass::Octants: return octants::color_octants(instance, {.size_cap = size_cap});
    }
    throw Error(ErrorKind::InvalidArgument, "unknown object class");
}

int color_budget(const Instance& instance) {
    switch (instance.cls) {
        case ObjectClass::Intervals: return 2;
        case ObjectClass::Segments:
        case ObjectClass::Octants: return 4;
        case ObjectClass::Rays: {
            std::vector<Ray> rays;
            for (const auto& o : instance.objects) rays.push_back(std::get<Ray>(o));
            return std::max(2, axis::ray_type_profile(rays).type);
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown object class");
}

}  // namespace geoextract
