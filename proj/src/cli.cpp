#include "ptpoly/cli.hpp"

#include "ptpoly/errors.hpp"
#include "ptpoly/io.hpp"
#include "ptpoly/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ptpoly {

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string offsets = "squared";
    double tolerance = 1e-9;
    unsigned precision = 53;
    bool oracle = false;
    std::string format = "table";
    std::string out_dir;
};

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

OffsetVector resolve_offsets(const RunConfig& cfg, const PointSet& ps) {
    const std::string& mode = cfg.offsets;
    if (mode == "squared") return canonical_offsets(ps, {0, 0}, {0, 0});
    if (mode.rfind("two-point:", 0) == 0) {
        std::vector<Rational> v;
        std::stringstream ss(mode.substr(10));
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
        if (v.size() != 4) throw Error(ErrorKind::parse_error, "two-point offsets need ax,ay,bx,by");
        return canonical_offsets(ps, {v[0], v[1]}, {v[2], v[3]});
    }
    if (mode.rfind("file:", 0) == 0) return parse_offsets(read_file(mode.substr(5)));
    throw Error(ErrorKind::parse_error, "unknown offsets mode " + mode);
}

ValidityOptions validity_options(const RunConfig& cfg, const PointSet& ps) {
    return {ps.has_collinearities() ? ValidityMode::weak : ValidityMode::strict, cfg.tolerance, cfg.precision};
}

std::string validity_line(const ValidityReport& r) {
    std::ostringstream os;
    if (r.passed()) {
        os << "validity: PASS (" << (r.mode == ValidityMode::strict ? "strict" : "weak") << "; " << r.quadruples
           << " quadruples, " << r.triples << " triples, " << r.five_point << " five-point, " << r.tight << " tight)";
    } else {
        os << "validity: FAIL at " << describe(r.failures.front()) << " (" << to_string(r.failures.front().status)
           << ")";
    }
    return os.str();
}

// Output sink: stdout, or a file in --out DIR.
class Sink {
public:
    Sink(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void emit(const std::string& name, const std::string& text) {
        if (cfg_.out_dir.empty()) {
            out_ << text;
            return;
        }
        std::filesystem::create_directories(cfg_.out_dir);
        std::ofstream f(std::filesystem::path(cfg_.out_dir) / name);
        f << text;
        out_ << "wrote " << (std::filesystem::path(cfg_.out_dir) / name).string() << "\n";
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

std::string extension(const std::string& format) {
    return format == "table" ? "txt" : format;
}

int cmd_classify(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    std::ostringstream os;
    if (cfg.format == "json") {
        Json pts = Json::array();
        for (int i = 0; i < ps.size(); ++i)
            pts.push_back({{"x", to_string(ps.point(i).x)},
                           {"y", to_string(ps.point(i).y)},
                           {"class", to_string(ps.label(i))}});
        const Json j = {{"n", ps.size()},
                        {"n_v", ps.n_extremal()},
                        {"n_s", ps.n_semi_interior()},
                        {"n_i", ps.n_interior()},
                        {"points", pts}};
        os << j.dump(2) << "\n";
    } else {
        os << "n=" << ps.size() << " n_v=" << ps.n_extremal() << " n_s=" << ps.n_semi_interior()
           << " n_i=" << ps.n_interior() << "\n";
        for (int i = 0; i < ps.size(); ++i)
            os << i << " " << to_string(ps.point(i).x) << " " << to_string(ps.point(i).y) << " "
               << to_string(ps.label(i)) << "\n";
    }
    sink.emit("classify." + extension(cfg.format), os.str());
    return 0;
}

bool oracle_matches(const PointSet& ps, const FlipGraph& g) {
    std::vector<MarkedGraph> nodes = g.nodes;
    std::sort(nodes.begin(), nodes.end());
    return nodes == brute_force_fmpts(ps);
}

int cmd_enumerate(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    const FlipGraph g = enumerate_flip_graph(ps);
    bool ok = true;
    std::optional<bool> oracle;
    if (cfg.oracle) ok = *(oracle = oracle_matches(ps, g));

    if (cfg.format == "svg") {
        for (std::size_t k = 0; k < g.size(); ++k) sink.emit("fmpt_" + std::to_string(k) + ".svg", to_svg(ps, g.nodes[k]));
    } else if (cfg.format == "json") {
        Json j = {{"count", g.size()}, {"fmpts", Json::array()}};
        for (const auto& t : g.nodes) j["fmpts"].push_back(to_json(t));
        if (oracle) j["oracle"] = *oracle;
        sink.emit("enumerate.json", j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "fully-marked pseudo-triangulations: " << g.size() << "\n";
        for (std::size_t k = 0; k < g.size(); ++k) os << k << " " << to_string(g.nodes[k]) << "\n";
        if (oracle) os << "oracle: " << pass(*oracle) << "\n";
        sink.emit("enumerate.txt", os.str());
    }
    return ok ? 0 : 1;
}

int cmd_flipgraph(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    const FlipGraph g = enumerate_flip_graph(ps);
    const std::size_t degree = static_cast<std::size_t>(2 * ps.n_interior() + ps.size() - 3);
    const bool regular =
        std::all_of(g.adjacency.begin(), g.adjacency.end(), [&](const auto& a) { return a.size() == degree; });
    int mirrors = 0;
    for (const auto& a : g.adjacency)
        for (const auto& e : a)
            if (e.flip.kind == FlipKind::mirror) ++mirrors;
    bool ok = regular;
    std::optional<bool> oracle;
    if (cfg.oracle) ok = *(oracle = oracle_matches(ps, g)) && ok;

    if (cfg.format == "dot") {
        sink.emit("flipgraph.dot", to_dot(g));
    } else if (cfg.format == "json") {
        Json j = to_json(g);
        j["degree"] = degree;
        j["regular"] = regular;
        if (oracle) j["oracle"] = *oracle;
        sink.emit("flipgraph.json", j.dump(2) + "\n");
    } else if (cfg.format == "svg") {
        for (std::size_t k = 0; k < g.size(); ++k) sink.emit("fmpt_" + std::to_string(k) + ".svg", to_svg(ps, g.nodes[k]));
    } else {
        std::ostringstream os;
        os << "nodes " << g.size() << ", edges " << g.edge_count() << ", mirror flips " << mirrors / 2 << "\n";
        os << "regular of degree " << degree << ": " << pass(regular) << "\n";
        if (oracle) os << "oracle: " << pass(*oracle) << "\n";
        sink.emit("flipgraph.txt", os.str());
    }
    return ok ? 0 : 1;
}

int polytope_extended(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    const Extension ext = extend_for_boundary_collinearities(ps);
    const OffsetVector f = resolve_offsets(cfg, ext.extended);
    const ValidityReport validity = check_validity(ext.extended, f, validity_options(cfg, ext.extended));
    std::ostringstream os;
    Json j = {{"validity", to_json(validity)}, {"extended_points", ext.extended.size()}};
    os << "boundary collinearities: extended set has " << ext.extended.size() << " points\n";
    os << validity_line(validity) << "\n";
    int code = 0;
    if (validity.passed()) {
        const FaceReport face = forced_face(ext, f, {cfg.tolerance, cfg.precision});
        const int expected = 3 * ps.size() - 3 - ps.n_semi_interior();
        const bool ok = face.dimension == expected && face.dimension_at_vertex == expected;
        os << "face dimension " << face.dimension << " (expected 3n-3-n_s = " << expected << "): " << pass(ok) << "\n";
        const FlipGraph g = enumerate_flip_graph(ps);
        os << "fully-marked pseudo-triangulations: " << g.size() << "\n";
        j["face_dimension"] = face.dimension;
        j["face_dimension_at_vertex"] = face.dimension_at_vertex;
        j["expected_dimension"] = expected;
        j["fmpts"] = g.size();
        j["passed"] = ok;
        code = ok ? 0 : 1;
    } else {
        j["passed"] = false;
        code = 1;
    }
    if (cfg.format == "json") sink.emit("polytope.json", j.dump(2) + "\n");
    else sink.emit("polytope.txt", os.str());
    return code;
}

int cmd_polytope(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    if (ps.has_boundary_collinearities()) return polytope_extended(cfg, ps, sink);
    const OffsetVector f = resolve_offsets(cfg, ps);
    const ValidityReport validity = check_validity(ps, f, validity_options(cfg, ps));
    if (!validity.passed()) {
        if (cfg.format == "json")
            sink.emit("polytope.json", Json{{"validity", to_json(validity)}, {"passed", false}}.dump(2) + "\n");
        else
            sink.emit("polytope.txt", validity_line(validity) + "\n");
        return 1;
    }

    const PolytopeOptions opt{cfg.tolerance, cfg.precision};
    const ConstraintSystem cs = build_system(ps, f);
    const FlipGraph g = enumerate_flip_graph(ps);
    std::ostringstream os;
    os << validity_line(validity) << "\n";
    SkeletonReport rep;
    bool skeleton_ok = true;
    std::string mismatch;
    try {
        rep = skeleton(cs, g, opt);
    } catch (const Error& e) {
        skeleton_ok = false;
        mismatch = e.what();
    }
    if (!skeleton_ok) {
        os << "skeleton≅flips: FAIL (" << mismatch << ")\n";
        if (cfg.format == "json")
            sink.emit("polytope.json",
                      Json{{"validity", to_json(validity)}, {"passed", false}, {"error", mismatch}}.dump(2) + "\n");
        else
            sink.emit("polytope.txt", os.str());
        return 1;
    }

    const int n = ps.size();
    const int exp_yf = 2 * ps.n_interior() + n - 3;
    const int exp_f = 2 * ps.n_interior() + ps.n_extremal() - 3;
    const bool dims_ok = rep.dim_yf == exp_yf && rep.dim_f == exp_f;
    const bool iso = rep.bijective && rep.bounded_edges.size() == g.edge_count();
    const std::size_t rays_per_vertex = static_cast<std::size_t>(2 * ps.n_extremal() + ps.n_semi_interior());
    const bool rays_ok = rep.rays_complete && rep.yf_bounded && rep.rays.size() == rep.vertices.size() * rays_per_vertex;
    bool ok = rep.passed() && dims_ok && iso && rays_ok;

    os << "dim Y_f = " << rep.dim_yf << ", vertices " << rep.vertices.size() << ", simple: " << pass(rep.simple)
       << ", skeleton≅flips: " << pass(iso) << "\n";
    if (ps.n_interior() == 0)
        os << "Y_f = associahedron: " << rep.vertices.size() << " vertices, " << rep.bounded_edges.size() << " edges\n";
    os << "dimensions: " << pass(dims_ok) << " (Y_f " << rep.dim_yf << " expected " << exp_yf << ", F " << rep.dim_f
       << " expected " << exp_f << ")\n";
    os << "face F: " << rep.f_vertices.size() << " vertices, " << rep.f_edges << " edges\n";
    os << "rays: " << rep.rays.size() << " (" << rays_per_vertex << " per vertex): " << pass(rays_ok) << "\n";
    for (const auto& p : rep.problems) os << "problem: " << p << "\n";

    Json j = to_json(rep, cfg.precision > 53 ? 34 : 17);
    j["validity"] = to_json(validity);
    j["dimensions_ok"] = dims_ok;
    j["skeleton_matches_flips"] = iso;
    j["rays_ok"] = rays_ok;

    if (cfg.oracle) {
        bool oracle_ok = false;
        std::size_t found = 0;
        try {
            const auto bf = brute_force_vertex_enumeration(cs, opt);
            found = bf.size();
            oracle_ok = bf.size() == rep.vertices.size();
            for (const auto& v : rep.vertices) {
                const bool hit = std::any_of(bf.begin(), bf.end(), [&](const PolytopeVertex& w) {
                    double d = 0, m = 1;
                    for (std::size_t k = 0; k < v.coords.size(); ++k) {
                        d = std::max(d, std::abs(v.coords[k] - w.coords[k]));
                        m = std::max(m, std::abs(v.coords[k]));
                    }
                    return d <= 1e-7 * m;
                });
                oracle_ok = oracle_ok && hit;
            }
            os << "oracle: " << pass(oracle_ok) << " (" << found << " basic solutions)\n";
        } catch (const Error& e) {
            os << "oracle: skipped (" << e.what() << ")\n";
            oracle_ok = true;
        }
        j["oracle"] = oracle_ok;
        ok = ok && oracle_ok;
    }
    j["passed"] = ok;
    if (cfg.format == "json") sink.emit("polytope.json", j.dump(2) + "\n");
    else sink.emit("polytope.txt", os.str());
    return ok ? 0 : 1;
}

int cmd_rigidity(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    const FlipGraph g = enumerate_flip_graph(ps);
    const auto rows = rigidity_table(ps, g.nodes);
    const int full = 2 * ps.size() - 3;
    int rigid = 0;
    bool ok = true;
    for (const auto& r : rows) {
        rigid += r.rigid ? 1 : 0;
        ok = ok && r.rigid && r.self_stresses == r.non_pointed && r.incidence.failures.empty();
    }
    // Rigidity is only asserted without boundary collinearities.
    const bool asserted = !ps.has_boundary_collinearities();
    if (cfg.format == "json") {
        Json j = {{"rows", to_json(rows)}, {"rigid", rigid}, {"total", rows.size()}, {"asserted", asserted}};
        j["passed"] = ok || !asserted;
        sink.emit("rigidity.json", j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "pt  rank  rigid  self-stresses  non-pointed  incidence\n";
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const auto& r = rows[k];
            os << k << "  " << r.rank << "/" << full << "  " << (r.rigid ? "yes" : "no") << "  " << r.self_stresses
               << "  " << r.non_pointed << "  "
               << (r.incidence.failures.empty() ? "ok" : std::to_string(r.incidence.failures.size()) + " failing")
               << "\n";
        }
        os << "rigid " << rigid << " of " << rows.size();
        if (asserted) os << ": " << pass(ok);
        os << "\n";
        sink.emit("rigidity.txt", os.str());
    }
    return ok || !asserted ? 0 : 1;
}

int cmd_validate(const RunConfig& cfg, const PointSet& ps, Sink& sink) {
    const OffsetVector f = resolve_offsets(cfg, ps);
    const ValidityReport r = check_validity(ps, f, validity_options(cfg, ps));
    if (cfg.format == "json") sink.emit("validate-f.json", to_json(r).dump(2) + "\n");
    else sink.emit("validate-f.txt", validity_line(r) + "\n");
    return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Pseudo-triangulations, flips and their polytope"};
    app.add_option("command", cfg.command, "classify, enumerate, flipgraph, polytope, rigidity or validate-f")
        ->required()
        ->check(CLI::IsMember({"classify", "enumerate", "flipgraph", "polytope", "rigidity", "validate-f"}));
    app.add_option("--input", cfg.input, "point file")->required();
    app.add_option("--offsets", cfg.offsets, "squared | two-point:ax,ay,bx,by | file:PATH");
    app.add_option("--tolerance", cfg.tolerance, "relative tolerance")->check(CLI::PositiveNumber);
    app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(24U, 4096U));
    app.add_flag("--oracle", cfg.oracle, "cross-check against brute force");
    app.add_option("--format", cfg.format, "json | dot | svg | table")
        ->check(CLI::IsMember({"json", "dot", "svg", "table"}));
    app.add_option("--out", cfg.out_dir, "directory for output files");

    std::vector<std::string> argv_storage{"ptpoly"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.format == "dot" && cfg.command != "flipgraph") {
        err << "error: dot output is only available for flipgraph\n";
        return 2;
    }
    if (cfg.format == "svg" && cfg.command != "enumerate" && cfg.command != "flipgraph") {
        err << "error: svg output is only available for enumerate and flipgraph\n";
        return 2;
    }
    if (cfg.format == "svg" && cfg.out_dir.empty()) {
        err << "error: svg output needs --out\n";
        return 2;
    }

    try {
        const PointSet ps = PointSet::classify(read_points(cfg.input));
        Sink sink(cfg, out);
        if (cfg.command == "classify") return cmd_classify(cfg, ps, sink);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg, ps, sink);
        if (cfg.command == "flipgraph") return cmd_flipgraph(cfg, ps, sink);
        if (cfg.command == "polytope") return cmd_polytope(cfg, ps, sink);
        if (cfg.command == "rigidity") return cmd_rigidity(cfg, ps, sink);
        return cmd_validate(cfg, ps, sink);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ptpoly
