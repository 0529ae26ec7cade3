#include "doctest.h"
#include "support.hpp"

#include "geoextract/colorers.hpp"
#include "geoextract/extraction.hpp"
#include "geoextract/generators.hpp"
#include "geoextract/oracle.hpp"

#include <optional>

using namespace support;
using namespace geoextract::extraction;

namespace {

// Every subset, smallest weight first found.
Rational brute_min_cover(const Instance& inst) {
    const std::size_t m = inst.size();
    std::optional<Rational> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        IndexSet s;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) s.push_back(i);
        }
        if (!oracle::check_cover(inst, s).covered) continue;
        Rational w = total_weight(inst, s);
        if (!best || w < *best) best = w;
    }
    return *best;
}

std::size_t brute_mis(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j : adj[i]) ok = ok && !(mask >> j & 1);
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

Instance only_depth_two(Instance inst) {
    std::vector<Point> kept;
    for (const auto& p : inst.points) {
        if (depth(inst, p).count == 2) kept.push_back(p);
    }
    inst.points = std::move(kept);
    return inst;
}

}  // namespace

TEST_CASE("extract on the interval pair") {
    auto inst = generators::gen_interval_pair();
    auto r = extract(inst, Coloring{{1, 2}, 2});
    CHECK(r.extracted_weight == 1);
    CHECK(r.ratio == 2);
    CHECK(r.color == 1);
    CHECK(r.extracted == IndexSet{0});
    CHECK(r.sol == IndexSet{1});
}

TEST_CASE("extract on the four octants") {
    auto inst = generators::gen_octant4();
    auto c = color_instance(inst, 40);
    auto r = extract(inst, c);
    CHECK(r.extracted_weight == 1);
    CHECK(r.ratio == 4);
    CHECK(r.sol.size() == 3);
}

TEST_CASE("heaviest class wins, ties to the lowest color") {
    auto inst = make_instance(ObjectClass::Intervals, {iv(0, 2), iv(1, 3), iv(10, 11)}, {1, 1, q("1/2")},
                              {Point{q("3/2")}});
    auto r = extract(inst, Coloring{{1, 2, 2}, 2});
    CHECK(r.color == 2);
    CHECK(r.extracted_weight == q("3/2"));
    auto tie = extract(inst, Coloring{{1, 2, 3}, 3});
    CHECK(tie.color == 1);
    // An empty color class is never the heaviest.
    auto gap = extract(generators::gen_interval_pair(), Coloring{{2, 4}, 4});
    CHECK(gap.color == 2);
    CHECK(gap.extracted_weight * 4 >= 2);
}

TEST_CASE("extraction errors") {
    auto shallow = make_instance(ObjectClass::Intervals, {iv(0, 2), iv(1, 3)}, {}, {Point{q("1/2")}});
    try {
        extract(shallow, Coloring{{1, 2}, 2});
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
    }
    try {
        extract(generators::gen_interval_pair(), Coloring{{1, 1}, 2});
        FAIL("expected an improper coloring error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ImproperColoring);
    }
}

TEST_CASE("W over kappa bound on random instances") {
    for (ObjectClass cls : {ObjectClass::Intervals, ObjectClass::Segments, ObjectClass::Rays, ObjectClass::Octants}) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto inst = generators::gen_random(cls, 2 + seed % 9, seed);
            if (inst.points.empty()) continue;
            auto c = color_instance(inst, 40);
            auto r = extract(inst, c);
            CHECK(r.extracted_weight * c.kappa >= total_weight(inst));
            CHECK(oracle::check_cover(inst, r.sol).covered);
        }
    }
}

TEST_CASE("exact min cover matches exhaustive search") {
    for (ObjectClass cls : {ObjectClass::Intervals, ObjectClass::Segments, ObjectClass::Rays, ObjectClass::Octants}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto inst = generators::gen_random(cls, 2 + seed % 11, seed);
            CAPTURE(seed);
            CHECK(exact_min_cover(inst).weight == brute_min_cover(inst));
            CHECK(min_cover_set_search(inst).weight == brute_min_cover(inst));
            auto pairs = only_depth_two(inst);
            CHECK(min_cover_vertex_cover(pairs).weight == min_cover_set_search(pairs).weight);
            auto mc = exact_min_cover(inst);
            CHECK(oracle::check_cover(inst, mc.cover).covered);
            CHECK(total_weight(inst, mc.cover) == mc.weight);
        }
    }
    auto triple = make_instance(ObjectClass::Intervals, {iv(0, 3), iv(1, 3), iv(2, 3)}, {}, {Point{q("5/2")}});
    CHECK_THROWS_AS(min_cover_vertex_cover(triple), Error);
}

TEST_CASE("reference values of the constructions") {
    CHECK(exact_min_cover(generators::gen_interval_pair()).weight == 1);
    CHECK(exact_extraction_number(generators::gen_interval_pair()) == 2);

    CHECK(exact_min_cover(generators::gen_octant4()).weight == 3);
    CHECK(exact_extraction_number(generators::gen_octant4()) == 4);

    for (int k = 1; k <= 5; ++k) {
        auto fan = generators::gen_rayfan(k);
        CAPTURE(k);
        CHECK(exact_min_cover(fan).weight == 2 * k - 1);
        CHECK(exact_extraction_number(fan) == Rational(3 * k, k + 1));
        auto adj = oracle::intersection_graph(oracle::enumerate_hyperedges(fan), fan.size());
        CHECK(max_independent_set_size(adj) == static_cast<std::size_t>(k + 1));
        CHECK(brute_mis(adj) == static_cast<std::size_t>(k + 1));
    }

    CHECK(exact_min_cover(generators::gen_kbox(2)).weight == 8);
    CHECK(exact_extraction_number(generators::gen_kbox(2)) == 2);
    CHECK(exact_min_cover(generators::gen_kbox(3)).weight == 20);
    CHECK(exact_extraction_number(generators::gen_kbox(3)) == q("9/4"));
    CHECK(exact_min_cover(generators::gen_kbox_rays(2)).weight == exact_min_cover(generators::gen_kbox(2)).weight);
}

TEST_CASE("unbounded and depth-0 points") {
    auto lone = make_instance(ObjectClass::Intervals, {iv(0, 2)}, {}, {Point{1}});
    try {
        exact_extraction_number(lone);
        FAIL("expected unbounded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unbounded);
    }
    auto empty_point = make_instance(ObjectClass::Intervals, {iv(0, 2)}, {}, {Point{5}});
    CHECK_THROWS_AS(exact_min_cover(empty_point), Error);
    CHECK_THROWS_AS(exact_min_cover(generators::gen_kbox(3), 10), Error);
}

TEST_CASE("exact chromatic number") {
    CHECK(exact_chromatic(generators::gen_interval_pair()) == 2);
    CHECK(exact_chromatic(make_instance(ObjectClass::Intervals, {iv(0, 1), iv(2, 3)})) == 1);
    CHECK(exact_chromatic(generators::gen_rayfan(3)) <= 3);
    CHECK(exact_chromatic(generators::gen_octant4()) == 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = generators::gen_random(ObjectClass::Segments, 8, seed);
        CHECK(exact_chromatic(inst) <= color_instance(inst, 40).kappa);
    }
}

TEST_CASE("independent sets") {
    CHECK(max_independent_set_size({}) == 0);
    CHECK(max_independent_set_size({{1}, {0, 2}, {1}}) == 2);
    CHECK(max_independent_set_size({{1, 2}, {0, 2}, {0, 1}}) == 1);
}
