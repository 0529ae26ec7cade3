#include "doctest.h"
#include "support.hpp"

#include "geoextract/axis_coloring.hpp"
#include "geoextract/generators.hpp"
#include "geoextract/interval_coloring.hpp"
#include "geoextract/io.hpp"
#include "geoextract/oracle.hpp"

using namespace support;
using namespace geoextract::generators;

namespace {

void all_depths(const Instance& inst, std::size_t expected) {
    for (const auto& p : inst.points) CHECK(depth(inst, p).count == expected);
}

}  // namespace

TEST_CASE("interval pair") {
    auto inst = gen_interval_pair();
    CHECK(inst.size() == 2);
    CHECK(inst.points.size() == 1);
    all_depths(inst, 2);
    CHECK(colors_used(intervals::color_intervals(inst)) == 2);
}

TEST_CASE("k-box") {
    for (int k : {2, 3}) {
        auto inst = gen_kbox(k);
        CHECK(inst.size() == static_cast<std::size_t>(4 * k * k));
        CHECK(inst.points.size() == static_cast<std::size_t>(k * k * k * k + 2 * k * k));
        all_depths(inst, 2);
        CHECK(oracle::check_proper(inst, axis::color_segments(inst)).proper);
    }
    CHECK_THROWS_AS(gen_kbox(1), Error);
}

TEST_CASE("k-box with rays") {
    auto inst = gen_kbox_rays(2);
    CHECK(inst.size() == 16);
    all_depths(inst, 2);
    std::vector<Ray> rays;
    for (const auto& o : inst.objects) rays.push_back(std::get<Ray>(o));
    CHECK(axis::ray_type_profile(rays).type == 4);
    CHECK(oracle::check_proper(inst, axis::color_rays(inst)).proper);
    CHECK(inst.points == gen_kbox(2).points);
}

TEST_CASE("ray fan") {
    for (int k = 1; k <= 5; ++k) {
        auto inst = gen_rayfan(k);
        CHECK(inst.size() == static_cast<std::size_t>(3 * k));
        CHECK(inst.points.size() == static_cast<std::size_t>(k * k + k));
        all_depths(inst, 2);
    }
    auto c = axis::color_rays(gen_rayfan(4));
    CHECK(c.kappa == 3);
    CHECK(oracle::check_proper(gen_rayfan(4), c).proper);
    CHECK_THROWS_AS(gen_rayfan(0), Error);
}

TEST_CASE("four octants") {
    auto inst = gen_octant4();
    CHECK(inst.size() == 4);
    CHECK(inst.points.size() == 6);
    all_depths(inst, 2);
    std::set<IndexSet> pairs;
    for (const auto& p : inst.points) pairs.insert(depth(inst, p).members);
    CHECK(pairs.size() == 6);

    auto found = search_octant4(2);
    REQUIRE(found);
    CHECK(found->points.size() == 6);
}

TEST_CASE("random instances") {
    CHECK(gen_random(ObjectClass::Intervals, 1, 9).points.empty());
    auto octs = gen_random(ObjectClass::Octants, 10, 7);
    for (const auto& p : octs.points) CHECK(depth(octs, p).count >= 2);
    for (ObjectClass cls : {ObjectClass::Intervals, ObjectClass::Segments, ObjectClass::Rays, ObjectClass::Octants}) {
        auto a = gen_random(cls, 8, 42);
        auto b = gen_random(cls, 8, 42);
        CHECK(io::to_json(a) == io::to_json(b));
        CHECK(a.size() == 8);
        CHECK(a.meta.at("seed") == "42");
        for (const auto& w : a.weights) CHECK(w > 0);
    }
    CHECK(io::to_json(gen_random(ObjectClass::Segments, 8, 1)) != io::to_json(gen_random(ObjectClass::Segments, 8, 2)));

    RandomOptions opt;
    opt.orientations = {2, 4};
    opt.all_orientations = true;
    auto rays = gen_random(ObjectClass::Rays, 5, 3, opt);
    std::set<Orientation> seen;
    for (const auto& o : rays.objects) seen.insert(std::get<Ray>(o).orientation);
    CHECK(seen == std::set<Orientation>{Orientation::NegX, Orientation::NegY});
    CHECK_THROWS_AS(gen_random(ObjectClass::Intervals, 0, 1), Error);
}
