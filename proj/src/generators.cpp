#include "geoextract/generators.hpp"

#include "geoextract/octant_coloring.hpp"
#include "geoextract/oracle.hpp"

#include <random>
#include <set>

namespace geoextract::generators {
namespace {

[[noreturn]] void invariant(const std::string& what) {
    throw Error(ErrorKind::AlgorithmInvariant, "generator: " + what);
}

void require_depth(const Instance& inst, std::size_t exact_or_min, bool exact) {
    for (const auto& p : inst.points) {
        std::size_t d = depth(inst, p).count;
        if (exact ? d != exact_or_min : d < exact_or_min) {
            invariant("target " + to_string(p) + " has depth " + std::to_string(d));
        }
    }
}

enum class Piece { Left, Right, Down, Up };

struct TaggedSegment {
    Segment segment;
    Piece piece;
    Rational meet;  // coordinate of the meeting point along the line
};

struct KBox {
    std::vector<TaggedSegment> segments;
    std::vector<Point> targets;
};

// All coordinates are integers: lines sit on even values, meeting points on
// odd ones, so no meeting point lies on another line.
KBox build_kbox(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k-box needs k >= 2");
    const long span = 2L * k + 2;
    const Rational lo = 0;
    const Rational hi = Rational(k * span);
    KBox box;
    std::vector<Rational> hlines, vlines;
    for (long b = 0; b < k; ++b) {
        const long origin = b * span;
        // Row r: left piece covers columns 1..k-r+1 of its box; column c: down
        // piece covers rows 1..k-c+1. Inside a box left meets down and right
        // meets up; across boxes left meets up and right meets down.
        for (long r = 1; r <= k; ++r) {
            Rational y = origin + 2 * r;
            Rational meet = origin + 2 * (k - r + 1) + 1;
            box.segments.push_back({{Axis::Horizontal, y, lo, meet}, Piece::Left, meet});
            box.segments.push_back({{Axis::Horizontal, y, meet, hi}, Piece::Right, meet});
            box.targets.push_back(Point{meet, y});
            hlines.push_back(y);
        }
        for (long c = 1; c <= k; ++c) {
            Rational x = origin + 2 * c;
            Rational meet = origin + 2 * (k - c + 1) + 1;
            box.segments.push_back({{Axis::Vertical, x, lo, meet}, Piece::Down, meet});
            box.segments.push_back({{Axis::Vertical, x, meet, hi}, Piece::Up, meet});
            box.targets.push_back(Point{x, meet});
            vlines.push_back(x);
        }
    }
    for (const auto& x : vlines) {
        for (const auto& y : hlines) box.targets.push_back(Point{x, y});
    }
    return box;
}

Instance finish_kbox(std::vector<GeomObject> objects, ObjectClass cls, std::vector<Point> targets, int k,
                     const char* kind) {
    Instance inst = make_instance(cls, std::move(objects), {}, std::move(targets));
    inst.meta["generator"] = kind;
    inst.meta["k"] = std::to_string(k);
    if (inst.size() != static_cast<std::size_t>(4 * k * k)) invariant("k-box object count is not 4k^2");
    const std::size_t expected_targets = static_cast<std::size_t>(k) * k * k * k + 2 * static_cast<std::size_t>(k) * k;
    if (inst.points.size() != expected_targets) invariant("k-box target count mismatch");
    require_depth(inst, 2, true);
    return inst;
}

Rational random_weight(std::mt19937_64& rng) {
    return Rational(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4));
}

long draw(std::mt19937_64& rng, int range) { return static_cast<long>(rng() % static_cast<std::uint64_t>(range)); }

// Sections of four octants; empty when they are not all non-dominated or a
// pair has no exclusive cell.
std::vector<Point> octant4_targets(const std::vector<Octant>& octs) {
    auto dag = octants::compute_domination(octs);
    if (dag.nondominated.size() != octs.size()) return {};
    const Rational cmax = octants::compute_cmax(octs);
    const auto triangles = octants::project(octs, cmax);
    const auto edges = oracle::enumerate_hyperedges(triangles);
    std::vector<Point> targets;
    for (std::size_t i = 0; i < octs.size(); ++i) {
        for (std::size_t j = i + 1; j < octs.size(); ++j) {
            auto it = edges.edges.find(IndexSet{i, j});
            if (it == edges.edges.end()) return {};
            const Point& w = it->second;
            targets.push_back(Point{w[0], w[1], cmax - w[0] - w[1]});
        }
    }
    return targets;
}

Instance octant4_instance(const std::vector<Octant>& octs, std::vector<Point> targets) {
    std::vector<GeomObject> objects(octs.begin(), octs.end());
    Instance inst = make_instance(ObjectClass::Octants, std::move(objects), {}, std::move(targets));
    inst.meta["generator"] = "octant4";
    return inst;
}

}  // namespace

Instance gen_interval_pair() {
    Instance inst = make_instance(ObjectClass::Intervals, {Interval{0, 2}, Interval{1, 3}}, {},
                                  {Point{Rational(3, 2)}});
    inst.meta["generator"] = "interval-pair";
    require_depth(inst, 2, true);
    return inst;
}

Instance gen_kbox(int k) {
    KBox box = build_kbox(k);
    std::vector<GeomObject> objects;
    for (const auto& t : box.segments) objects.push_back(t.segment);
    return finish_kbox(std::move(objects), ObjectClass::Segments, std::move(box.targets), k, "kbox");
}

Instance gen_kbox_rays(int k) {
    KBox box = build_kbox(k);
    std::vector<GeomObject> objects;
    for (const auto& t : box.segments) {
        const Rational& line = t.segment.line;
        switch (t.piece) {
            case Piece::Right: objects.push_back(Ray{Orientation::PosX, t.meet, line}); break;
            case Piece::Left: objects.push_back(Ray{Orientation::NegX, t.meet, line}); break;
            case Piece::Up: objects.push_back(Ray{Orientation::PosY, line, t.meet}); break;
            case Piece::Down: objects.push_back(Ray{Orientation::NegY, line, t.meet}); break;
        }
    }
    return finish_kbox(std::move(objects), ObjectClass::Rays, std::move(box.targets), k, "kbox-rays");
}

Instance gen_rayfan(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "ray fan needs k >= 1");
    std::vector<GeomObject> objects;
    std::vector<Point> targets;
    for (long c = 1; c <= k; ++c) objects.push_back(Ray{Orientation::PosY, c, 0});
    for (long i = 1; i <= k; ++i) {
        Rational x = Rational(2 * i + 1, 2);
        objects.push_back(Ray{Orientation::NegX, x, i});
        objects.push_back(Ray{Orientation::PosX, x, i});
        targets.push_back(Point{x, i});
        for (long c = 1; c <= k; ++c) targets.push_back(Point{c, i});
    }
    Instance inst = make_instance(ObjectClass::Rays, std::move(objects), {}, std::move(targets));
    inst.meta["generator"] = "rayfan";
    inst.meta["k"] = std::to_string(k);

    // Row i: the left ray meets up-rays 1..i, the right ray meets i+1..k.
    for (long i = 1; i <= k; ++i) {
        const auto& left = inst.objects[static_cast<std::size_t>(k + 2 * (i - 1))];
        const auto& right = inst.objects[static_cast<std::size_t>(k + 2 * (i - 1) + 1)];
        for (long c = 1; c <= k; ++c) {
            Point crossing{c, i};
            if (!contains(inst.objects[static_cast<std::size_t>(c - 1)], crossing)) invariant("up-ray misses a row");
            if (contains(left, crossing) != (c <= i) || contains(right, crossing) != (c > i)) {
                invariant("ray fan row " + std::to_string(i) + " meets the wrong up-rays");
            }
        }
    }
    require_depth(inst, 2, true);
    // Every intersecting pair has its target.
    auto edges = oracle::enumerate_hyperedges(inst);
    std::set<IndexSet> covered;
    for (const auto& p : inst.points) covered.insert(depth(inst, p).members);
    for (const auto& [edge, witness] : edges.edges) {
        if (!covered.count(edge)) invariant("ray fan intersection without a target");
    }
    return inst;
}

Instance gen_octant4() {
    // Found with search_octant4(2) and frozen.
    const std::vector<Octant> octs{{0, 0, 3}, {0, 4, 0}, {3, 0, 0}, {1, 1, 2}};
    auto targets = octant4_targets(octs);
    if (targets.size() != 6) invariant("frozen octant configuration lost a pairwise cell");
    Instance inst = octant4_instance(octs, std::move(targets));
    require_depth(inst, 2, true);
    return inst;
}

std::optional<Instance> search_octant4(std::uint64_t seed, int attempts) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < attempts; ++t) {
        std::vector<Octant> octs;
        for (int i = 0; i < 4; ++i) octs.push_back({draw(rng, 5), draw(rng, 5), draw(rng, 5)});
        auto targets = octant4_targets(octs);
        if (targets.size() == 6) return octant4_instance(octs, std::move(targets));
    }
    return std::nullopt;
}

Instance gen_random(ObjectClass cls, std::size_t n, std::uint64_t seed, const RandomOptions& options) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "random instance needs n >= 1");
    if (n > oracle::kDefaultSizeCap) throw Error(ErrorKind::SizeCap, "random instance above the oracle cap");
    std::mt19937_64 rng(seed);
    std::vector<GeomObject> objects;
    std::vector<Rational> weights;

    switch (cls) {
        case ObjectClass::Intervals: {
            const int range = options.coordinate_range ? options.coordinate_range : 10;
            while (objects.size() < n) {
                long a = draw(rng, range), b = draw(rng, range);
                if (a == b) continue;
                objects.push_back(Interval{std::min(a, b), std::max(a, b)});
            }
            break;
        }
        case ObjectClass::Segments: {
            const int range = options.coordinate_range ? options.coordinate_range : 8;
            while (objects.size() < n) {
                Axis axis = rng() % 2 ? Axis::Vertical : Axis::Horizontal;
                long line = draw(rng, range), a = draw(rng, range), b = draw(rng, range);
                if (a == b) continue;
                objects.push_back(Segment{axis, line, std::min(a, b), std::max(a, b)});
            }
            break;
        }
        case ObjectClass::Rays: {
            const int range = options.coordinate_range ? options.coordinate_range : 6;
            const auto& allowed = options.orientations;
            if (allowed.empty()) throw Error(ErrorKind::InvalidArgument, "no ray orientations allowed");
            for (int o : allowed) {
                if (o < 1 || o > 4) throw Error(ErrorKind::InvalidArgument, "ray orientation must be 1..4");
            }
            if (options.all_orientations && n < allowed.size()) {
                throw Error(ErrorKind::InvalidArgument, "too few rays for the requested orientations");
            }
            for (std::size_t i = 0; i < n; ++i) {
                int o = options.all_orientations && i < allowed.size() ? allowed[i] : allowed[rng() % allowed.size()];
                objects.push_back(Ray{static_cast<Orientation>(o), draw(rng, range), draw(rng, range)});
            }
            break;
        }
        case ObjectClass::Octants: {
            const int range = options.coordinate_range ? options.coordinate_range : 6;
            for (std::size_t i = 0; i < n; ++i) objects.push_back(Octant{draw(rng, range), draw(rng, range), draw(rng, range)});
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) weights.push_back(random_weight(rng));

    Instance inst = make_instance(cls, std::move(objects), std::move(weights));
    for (const auto& [edge, witness] : oracle::enumerate_hyperedges(inst).edges) inst.points.push_back(witness);
    inst.meta["generator"] = "random";
    inst.meta["seed"] = std::to_string(seed);
    require_depth(inst, 2, false);
    return inst;
}

}  // namespace geoextract::generators
