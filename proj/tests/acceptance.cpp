// One line per acceptance criterion; exit status 1 if any fails.
#include "sampling.hpp"

#include "geoextract/axis_coloring.hpp"
#include "geoextract/colorers.hpp"
#include "geoextract/extraction.hpp"
#include "geoextract/generators.hpp"
#include "geoextract/octant_coloring.hpp"
#include "geoextract/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace geoextract;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 1, kLimit2 = 10, kLimit3 = 10, kLimit4 = 5, kLimit5 = 60, kLimit6 = 120, kLimit7 = 60,
                 kLimit8 = 30;

constexpr int kPropertyInstances = 200;  // per class
constexpr std::size_t kPropertyMaxN = 12;
constexpr std::size_t kPropertyMaxOctants = 10;
constexpr int kOracleInstances = 100;  // per class
constexpr std::size_t kOracleMaxN = 8;
constexpr int kClipInstances = 100;
constexpr std::size_t kClipMaxN = 12;

// kbox extraction numbers from the exact solver.
const Rational kKboxAlpha2 = 2;
const Rational kKboxAlpha3 = Rational(9, 4);

const std::vector<ObjectClass> kClasses{ObjectClass::Intervals, ObjectClass::Segments, ObjectClass::Rays,
                                        ObjectClass::Octants};

// Collects the first failure message.
struct Check {
    std::string failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        if (!ok && failure.empty()) failure = what();
    }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

Check criterion1() {
    Check c;
    auto inst = generators::gen_interval_pair();
    Rational alpha = extraction::exact_extraction_number(inst);
    c.expect(alpha == 2, [&] { return "extraction number " + to_string(alpha); });
    auto r = extraction::extract(inst, color_instance(inst, octants::kDefaultSizeCap));
    c.expect(r.ratio == 2, [&] { return "extract ratio " + to_string(r.ratio); });
    return c;
}

Check criterion2() {
    Check c;
    for (int k = 2; k <= 5; ++k) {
        auto fan = generators::gen_rayfan(k);
        auto mc = extraction::exact_min_cover(fan);
        c.expect(mc.weight == 2 * k - 1, [&] { return "k=" + str(k) + " min cover " + to_string(mc.weight); });
        Rational alpha = extraction::exact_extraction_number(fan);
        c.expect(alpha == Rational(3 * k, k + 1), [&] { return "k=" + str(k) + " extraction number " + to_string(alpha); });
    }
    return c;
}

Check criterion3() {
    Check c;
    for (int k = 1; k <= 5; ++k) {
        auto fan = generators::gen_rayfan(k);
        auto adj = oracle::intersection_graph(oracle::enumerate_hyperedges(fan), fan.size());
        std::size_t mis = extraction::max_independent_set_size(adj);
        c.expect(mis == static_cast<std::size_t>(k + 1), [&] { return "k=" + str(k) + " MIS " + str(mis); });
    }
    return c;
}

Check criterion4() {
    Check c;
    auto inst = generators::gen_octant4();
    auto mc = extraction::exact_min_cover(inst);
    c.expect(mc.weight == 3, [&] { return "min cover " + to_string(mc.weight); });
    Rational alpha = extraction::exact_extraction_number(inst);
    c.expect(alpha == 4, [&] { return "extraction number " + to_string(alpha); });
    auto col = octants::color_octants(inst);
    c.expect(col.kappa == 4 && colors_used(col) <= 4, [&] { return "uses " + str(colors_used(col)) + " colors"; });
    c.expect(oracle::check_proper(inst, col).proper, [] { return "coloring is improper"; });
    return c;
}

Check criterion5() {
    Check c;
    std::vector<Rational> alphas;
    for (int k : {2, 3}) {
        auto inst = generators::gen_kbox(k);
        const std::size_t m = inst.size();
        c.expect(m == static_cast<std::size_t>(4 * k * k), [&] { return "k=" + str(k) + " m=" + str(m); });
        for (const auto& p : inst.points) {
            std::size_t d = depth(inst, p).count;
            c.expect(d == 2, [&] { return "point " + to_string(p) + " depth " + str(d); });
        }
        auto col = axis::color_segments(inst);
        c.expect(colors_used(col) <= 4, [&] { return "k=" + str(k) + " uses " + str(colors_used(col)) + " colors"; });
        c.expect(oracle::check_proper(inst, col).proper, [&] { return "k=" + str(k) + " improper coloring"; });
        auto r = extraction::extract(inst, col);
        c.expect(r.extracted_weight * 4 >= Rational(m),
                 [&] { return "k=" + str(k) + " extracted " + to_string(r.extracted_weight); });
        alphas.push_back(extraction::exact_extraction_number(inst));
    }
    c.expect(alphas[0] == kKboxAlpha2 && alphas[1] == kKboxAlpha3,
             [&] { return "extraction numbers " + to_string(alphas[0]) + ", " + to_string(alphas[1]); });
    c.expect(alphas[1] > alphas[0], [] { return "extraction number does not grow from k=2 to k=3"; });
    return c;
}

Check criterion6() {
    Check c;
    for (ObjectClass cls : kClasses) {
        const std::size_t max_n = cls == ObjectClass::Octants ? kPropertyMaxOctants : kPropertyMaxN;
        for (int t = 0; t < kPropertyInstances; ++t) {
            const std::uint64_t seed = 60000 + static_cast<std::uint64_t>(t);
            auto inst = generators::gen_random(cls, 1 + static_cast<std::size_t>(t) % max_n, seed);
            auto tag = [&] { return std::string(to_string(cls)) + " seed " + str(seed) + ": "; };
            auto col = color_instance(inst, octants::kDefaultSizeCap);
            c.expect(oracle::check_proper(inst, col).proper, [&] { return tag() + "improper"; });
            const int budget = color_budget(inst);
            c.expect(colors_used(col) <= budget && col.kappa <= budget,
                     [&] { return tag() + str(colors_used(col)) + " colors > " + str(budget); });
            auto r = extraction::extract(inst, col);
            c.expect(r.extracted_weight * col.kappa >= total_weight(inst),
                     [&] { return tag() + "extracted " + to_string(r.extracted_weight); });
            c.expect(oracle::check_cover(inst, r.sol).covered, [&] { return tag() + "sol is not a cover"; });
        }
    }
    return c;
}

Check criterion7() {
    Check c;
    for (ObjectClass cls : kClasses) {
        for (int t = 0; t < kOracleInstances; ++t) {
            const std::uint64_t seed = 70000 + static_cast<std::uint64_t>(t);
            auto inst = generators::gen_random(cls, 1 + static_cast<std::size_t>(t) % kOracleMaxN, seed);
            c.expect(sampling::keys(oracle::enumerate_hyperedges(inst)) == sampling::dense_hyperedges(inst),
                     [&] { return std::string(to_string(cls)) + " seed " + str(seed) + ": enumerations differ"; });
        }
    }
    return c;
}

Check criterion8() {
    Check c;
    generators::RandomOptions opt;
    opt.all_orientations = true;
    for (int t = 0; t < kClipInstances; ++t) {
        const std::uint64_t seed = 80000 + static_cast<std::uint64_t>(t);
        auto inst = generators::gen_random(ObjectClass::Rays, 4 + static_cast<std::size_t>(t) % (kClipMaxN - 3), seed, opt);
        std::vector<Ray> rays;
        for (const auto& o : inst.objects) rays.push_back(std::get<Ray>(o));
        c.expect(axis::ray_type_profile(rays).type == 4, [&] { return "seed " + str(seed) + " is not type 4"; });
        auto clipped = axis::clip_rays_to_box(rays);
        std::vector<GeomObject> segs(clipped.segments.begin(), clipped.segments.end());
        auto seg_inst = make_instance(ObjectClass::Segments, std::move(segs));
        c.expect(sampling::keys(oracle::enumerate_hyperedges(inst)) ==
                     sampling::keys(oracle::enumerate_hyperedges(seg_inst)),
                 [&] { return "seed " + str(seed) + ": hyperedge sets differ"; });
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        Check (*run)();
    };
    const Criterion all[] = {
        {1, "tight interval pair", kLimit1, criterion1},
        {2, "ray fan cover and extraction number", kLimit2, criterion2},
        {3, "ray fan independence", kLimit3, criterion3},
        {4, "octant tightness", kLimit4, criterion4},
        {5, "k-box", kLimit5, criterion5},
        {6, "property suites", kLimit6, criterion6},
        {7, "oracle self-validation", kLimit7, criterion7},
        {8, "clipping equivalence", kLimit8, criterion8},
    };
    int failed = 0;
    for (const auto& cr : all) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.failure.empty() && secs >= cr.limit) {
            result.failure = "took " + str(secs) + " s, limit " + str(cr.limit) + " s";
        }
        const bool ok = result.failure.empty();
        failed += !ok;
        std::printf("%s criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    ok ? "" : " -- ", result.failure.c_str());
    }
    return failed ? 1 : 0;
}
