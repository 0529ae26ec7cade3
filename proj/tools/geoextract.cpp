#include "geoextract/axis_coloring.hpp"
#include "geoextract/colorers.hpp"
#include "geoextract/extraction.hpp"
#include "geoextract/generators.hpp"
#include "geoextract/io.hpp"
#include "geoextract/octant_coloring.hpp"
#include "geoextract/oracle.hpp"
#include "geoextract/svg.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <optional>

using namespace geoextract;
using io::Json;

namespace {

struct Globals {
    std::string out;
    std::optional<std::size_t> size_cap;
    std::uint64_t seed = 1;
};

Json point_json(const Point& p) {
    Json arr = Json::array();
    for (const auto& c : p.coords) arr.push_back(io::to_json(c));
    return arr;
}

// Ray type and the extraction factor the colorer backs, for rays.
void annotate_rays(const Instance& inst, Json& result) {
    if (inst.cls != ObjectClass::Rays) return;
    std::vector<Ray> rays;
    for (const auto& o : inst.objects) rays.push_back(std::get<Ray>(o));
    const int type = axis::ray_type_profile(rays).type;
    result["ray_type"] = type;
    result["extraction_guarantee"] = type == 1 ? Json("not claimed") : Json("W/" + std::to_string(type));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string tok = text.substr(start, end - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18) {
            throw Error(ErrorKind::Parse, "bad index '" + tok + "' in --cover");
        }
        out.push_back(std::stoull(tok));
        start = end + 1;
    }
    return out;
}

void write_out(const Globals& g, const std::string& content) {
    if (!g.out.empty()) io::write_text_atomic(g.out, content);
}

Coloring coloring_for(const Instance& inst, const std::string& path, const Globals& g) {
    if (!path.empty()) {
        Coloring c = io::read_coloring(path);
        validate(c, inst.size());
        return c;
    }
    return color_instance(inst, g.size_cap.value_or(octants::kDefaultSizeCap));
}

Json cmd_color(const Instance& inst, const std::string& class_override, const Globals& g) {
    if (!class_override.empty() && parse_object_class(class_override) != inst.cls) {
        throw Error(ErrorKind::ClassMismatch, std::string("instance holds ") + to_string(inst.cls) + ", not " +
                                                  class_override);
    }
    const Coloring c = color_instance(inst, g.size_cap.value_or(octants::kDefaultSizeCap));
    Json result = io::to_json(c);
    result["colors_used"] = colors_used(c);
    annotate_rays(inst, result);
    write_out(g, io::to_json(c).dump(2) + "\n");
    return result;
}

Json cmd_extract(const Instance& inst, const std::string& coloring_path, const Globals& g) {
    const Coloring c = coloring_for(inst, coloring_path, g);
    const auto r = extraction::extract(inst, c);
    Json result = io::to_json(r);
    result["total_weight"] = io::to_json(total_weight(inst));
    annotate_rays(inst, result);
    write_out(g, result.dump(2) + "\n");
    return result;
}

Json cmd_verify(const Instance& inst, const std::string& coloring_path, const std::string& cover, const Globals& g,
                bool& positive) {
    if (coloring_path.empty() == cover.empty()) {
        throw Error(ErrorKind::InvalidArgument, "verify needs exactly one of --coloring and --cover");
    }
    Json result;
    if (!coloring_path.empty()) {
        const Coloring c = io::read_coloring(coloring_path);
        validate(c, inst.size());
        const auto v = oracle::check_proper(inst, c, g.size_cap.value_or(oracle::kDefaultSizeCap));
        positive = v.proper;
        result["verdict"] = v.proper ? "proper" : "improper";
        if (!v.proper) {
            result["monochromatic_edge"] = v.monochromatic_edge;
            result["witness"] = point_json(v.witness);
        }
    } else {
        const auto subset = parse_indices(cover);
        for (std::size_t i : subset) {
            if (i >= inst.size()) throw Error(ErrorKind::InvalidArgument, "cover index " + std::to_string(i) + " out of range");
        }
        const auto v = oracle::check_cover(inst, subset);
        positive = v.covered;
        result["verdict"] = v.covered ? "covered" : "uncovered";
        if (!v.covered) {
            result["uncovered_point"] = *v.uncovered_point;
            result["witness"] = point_json(inst.points[*v.uncovered_point]);
        }
    }
    write_out(g, result.dump(2) + "\n");
    return result;
}

Json cmd_bounds(const Instance& inst, const Globals& g) {
    const std::size_t cover_cap = g.size_cap.value_or(extraction::kCoverSizeCap);
    const std::size_t chromatic_cap = g.size_cap.value_or(extraction::kChromaticSizeCap);
    const auto mc = extraction::exact_min_cover(inst, cover_cap);
    Json result;
    result["min_cover"] = {{"indices", mc.cover}, {"weight", io::to_json(mc.weight)}};
    result["total_weight"] = io::to_json(total_weight(inst));
    try {
        result["extraction_number"] = io::to_json(extraction::exact_extraction_number(inst, cover_cap));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unbounded) throw;
        result["extraction_number"] = "unbounded";
    }
    if (inst.size() <= chromatic_cap) {
        result["chromatic_number"] = extraction::exact_chromatic(inst, chromatic_cap);
    } else {
        result["chromatic_number"] = nullptr;
    }
    write_out(g, result.dump(2) + "\n");
    return result;
}

struct GenArgs {
    std::string kind;
    int k = 0;
    std::string cls;
    std::size_t n = 0;
};

Instance cmd_gen(const GenArgs& a, const Globals& g) {
    auto need_k = [&] {
        if (a.k <= 0) throw Error(ErrorKind::InvalidArgument, "--kind " + a.kind + " needs --k");
        return a.k;
    };
    if (a.kind == "interval-pair") return generators::gen_interval_pair();
    if (a.kind == "kbox") return generators::gen_kbox(need_k());
    if (a.kind == "kbox-rays") return generators::gen_kbox_rays(need_k());
    if (a.kind == "rayfan") return generators::gen_rayfan(need_k());
    if (a.kind == "octant4") return generators::gen_octant4();
    if (a.kind == "random") {
        if (a.cls.empty() || a.n == 0) throw Error(ErrorKind::InvalidArgument, "--kind random needs --class and --n");
        return generators::gen_random(parse_object_class(a.cls), a.n, g.seed);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator kind '" + a.kind + "'");
}

void fail(const std::string& kind, const std::string& message) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proper colorings and cover extraction for geometric hypergraphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--out", g.out, "Write the primary artifact here");
    app.add_option("--size-cap", g.size_cap, "Override the size cap of the exact routines")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random generators");

    std::string input, class_override, coloring_path, cover;
    GenArgs gen;

    auto* color = app.add_subcommand("color", "Properly color an instance");
    color->add_option("input", input, "Instance document")->required();
    color->add_option("--class", class_override, "Expected object class");

    auto* extract = app.add_subcommand("extract", "Extract a heavy color class and report the cover");
    extract->add_option("input", input, "Instance document")->required();
    extract->add_option("--coloring", coloring_path, "Coloring document (computed if absent)");

    auto* verify = app.add_subcommand("verify", "Check a coloring or a cover against the oracle");
    verify->add_option("input", input, "Instance document")->required();
    auto* vc = verify->add_option("--coloring", coloring_path, "Coloring document");
    auto* vs = verify->add_option("--cover", cover, "Comma-separated object indices");
    vc->excludes(vs);

    auto* bounds = app.add_subcommand("bounds", "Exact minimum cover, extraction number, chromatic number");
    bounds->add_option("input", input, "Instance document")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--kind", gen.kind, "interval-pair|kbox|kbox-rays|rayfan|octant4|random")->required();
    gen_cmd->add_option("--k", gen.k, "Construction size");
    gen_cmd->add_option("--class", gen.cls, "Object class for random instances");
    gen_cmd->add_option("--n", gen.n, "Object count for random instances");

    auto* render = app.add_subcommand("render", "Draw an instance as SVG");
    render->add_option("input", input, "Instance document")->required();
    render->add_option("--coloring", coloring_path, "Coloring document");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Json report;
        int code = 0;
        std::optional<Instance> inst;
        if (gen_cmd->parsed()) {
            inst = cmd_gen(gen, g);
            report["command"] = "gen";
            write_out(g, io::to_json(*inst).dump(2) + "\n");
            report["result"] = {{"instance", io::to_json(*inst)},
                                {"objects", inst->size()},
                                {"points", inst->points.size()}};
        } else {
            inst = io::read_instance(input);
            if (color->parsed()) {
                report["command"] = "color";
                report["result"] = cmd_color(*inst, class_override, g);
            } else if (extract->parsed()) {
                report["command"] = "extract";
                report["result"] = cmd_extract(*inst, coloring_path, g);
            } else if (verify->parsed()) {
                report["command"] = "verify";
                bool positive = true;
                report["result"] = cmd_verify(*inst, coloring_path, cover, g, positive);
                code = positive ? 0 : 1;
            } else if (bounds->parsed()) {
                report["command"] = "bounds";
                report["result"] = cmd_bounds(*inst, g);
            } else {
                std::optional<Coloring> c;
                if (!coloring_path.empty()) {
                    c = io::read_coloring(coloring_path);
                    validate(*c, inst->size());
                }
                const std::string svg = svg::render_svg(*inst, c);
                if (g.out.empty()) {
                    std::cout << svg;
                    return 0;
                }
                write_out(g, svg);
                report["command"] = "render";
                report["result"] = {{"bytes", svg.size()}};
            }
        }
        report["instance_digest"] = io::instance_digest(*inst);
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timings"] = {{"ms", ms}};
        std::cout << report.dump(2) << "\n";
        return code;
    } catch (const Error& e) {
        fail(to_string(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        fail("internal", e.what());
        return 4;
    }
}
