#include "doctest.h"
#include "support.hpp"

#include "geoextract/generators.hpp"
#include "geoextract/octant_coloring.hpp"
#include "geoextract/oracle.hpp"

using namespace support;
using namespace geoextract::octants;

namespace {

std::vector<Octant> octs(std::initializer_list<std::array<int, 3>> apexes) {
    std::vector<Octant> out;
    for (auto [a, b, c] : apexes) out.push_back({a, b, c});
    return out;
}

}  // namespace

TEST_CASE("domination") {
    auto d = compute_domination(octs({{0, 0, 0}, {1, 1, 1}}));
    CHECK(d.nondominated == IndexSet{0});
    CHECK(d.dominator_of == std::map<std::size_t, std::size_t>{{1, 0}});

    CHECK(compute_domination(octs({{0, 1, 0}, {1, 0, 0}})).nondominated == IndexSet{0, 1});

    auto dup = compute_domination(octs({{0, 0, 0}, {0, 0, 0}}));
    CHECK(dup.nondominated == IndexSet{0});
    CHECK(dup.dominator_of.at(1) == 0);

    auto later = compute_domination(octs({{2, 2, 2}, {1, 1, 1}}));
    CHECK(later.nondominated == IndexSet{1});
    CHECK(later.dominator_of.at(0) == 1);
}

TEST_CASE("c_max") {
    CHECK(compute_cmax(octs({{0, 1, 0}, {1, 0, 0}})) == 2);
    CHECK(compute_cmax(octs({{0, 0, 0}})) == 1);
    auto three = octs({{0, 0, 3}, {0, 4, 0}, {3, 0, 0}});
    Rational c = compute_cmax(three);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const auto& p = three[i];
            const auto& r = three[j];
            CHECK(c >= std::max(p.a, r.a) + std::max(p.b, r.b) + std::max(p.c, r.c));
        }
    }
    CHECK(c == 7);
}

TEST_CASE("projection") {
    auto t = project(octs({{0, 0, 0}}), 3);
    REQUIRE(t.size() == 1);
    CHECK(t[0].a == 0);
    CHECK(t[0].b == 0);
    CHECK(t[0].s == 3);

    auto pair = project(octs({{0, 1, 0}, {1, 0, 0}}), 2);
    CHECK(std::max(pair[0].a, pair[1].a) + std::max(pair[0].b, pair[1].b) <= std::min(pair[0].s, pair[1].s));
    CHECK_THROWS_AS(project(octs({{2, 2, 2}}), 3), Error);
}

TEST_CASE("triangle coloring") {
    auto one = color_triangles(std::vector<PlaneTriangle>{{0, 0, 3}});
    CHECK(one.colors == std::vector<int>{1});

    auto inst = generators::gen_octant4();
    std::vector<Octant> o4;
    for (const auto& o : inst.objects) o4.push_back(std::get<Octant>(o));
    auto tris = project(o4, compute_cmax(o4));
    auto c = color_triangles(tris);
    CHECK(c.kappa == 4);
    CHECK(oracle::check_proper(oracle::enumerate_hyperedges(tris), c).proper);

    TriangleColoringOptions forced;
    forced.extra_edges = {{0, 1}};
    auto two = std::vector<PlaneTriangle>{{0, 0, 4}, {3, 3, 6}};
    auto cf = color_triangles(two, forced);
    CHECK(cf.colors[0] != cf.colors[1]);
}

TEST_CASE("dominated octants take a color off their dominator") {
    auto c = color_octants(octs({{0, 0, 0}, {1, 1, 1}}));
    CHECK(c.colors[0] != c.colors[1]);
}

TEST_CASE("four-octant configuration") {
    auto inst = generators::gen_octant4();
    auto c = color_octants(inst);
    CHECK(c.kappa == 4);
    CHECK(colors_used(c) == 4);
    CHECK(oracle::check_proper(inst, c).proper);
}

TEST_CASE("random octants") {
    for (std::size_t n : {12u, 15u}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            CAPTURE(seed);
            auto inst = generators::gen_random(ObjectClass::Octants, n, seed);
            auto c = color_octants(inst);
            CHECK(colors_used(c) <= 4);
            CHECK(oracle::check_proper(inst, c).proper);
        }
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto inst = generators::gen_random(ObjectClass::Octants, 1 + seed % 10, seed);
        CHECK(oracle::check_proper(inst, color_octants(inst)).proper);
    }
}

TEST_CASE("caps and class") {
    auto inst = generators::gen_random(ObjectClass::Octants, 10, 4);
    try {
        color_octants(inst, {.size_cap = 5});
        FAIL("expected a size cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeCap);
    }
    CHECK_THROWS_AS(color_octants(generators::gen_interval_pair()), Error);
}
