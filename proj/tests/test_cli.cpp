#include "ptpoly/cli.hpp"
#include "ptpoly/errors.hpp"
#include "ptpoly/report.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ptpoly;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PTPOLY_DATA_DIR) + "/" + name + ".pts"; }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ptpoly_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("classify") {
    auto r = run({"classify", "--input", data("q4e")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=5 n_v=4 n_s=0 n_i=1"));
    r = run({"classify", "--input", data("square")});
    CHECK(contains(r.out, "n_v=4 n_s=0 n_i=0"));

    const auto line = scratch("line.pts");
    std::ofstream(line) << "0 0\n1 1\n2 2\n";
    r = run({"classify", "--input", line.string()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "degenerate input"));

    const auto j = Json::parse(run({"classify", "--input", data("tri_mid"), "--format", "json"}).out);
    CHECK(j["n_s"] == 1);
    CHECK(j["points"][3]["class"] == "semi_interior");
}

TEST_CASE("enumerate and flipgraph") {
    CHECK(contains(run({"enumerate", "--input", data("pentagon")}).out, "pseudo-triangulations: 5"));
    CHECK(contains(run({"enumerate", "--input", data("q4e")}).out, "pseudo-triangulations: 11"));
    auto r = run({"enumerate", "--input", data("col5"), "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pseudo-triangulations: 8"));
    CHECK(contains(r.out, "oracle: PASS"));

    r = run({"flipgraph", "--input", data("col5")});
    CHECK(contains(r.out, "regular of degree 4: PASS"));
    CHECK_FALSE(contains(r.out, "mirror flips 0"));

    r = run({"flipgraph", "--input", data("pentagon"), "--format", "dot"});
    CHECK(contains(r.out, "graph flips {"));
    CHECK(contains(r.out, "0 -- 1"));

    const auto j = Json::parse(run({"flipgraph", "--input", data("q4e"), "--format", "json"}).out);
    const FlipGraph g = flip_graph_from_json(j);
    CHECK(g.size() == 11);
    CHECK(g.edge_count() == 22);
    CHECK(to_json(g)["nodes"] == j["nodes"]);
}

TEST_CASE("svg output goes to files") {
    const auto dir = scratch("svg");
    fs::remove_all(dir);
    auto r = run({"enumerate", "--input", data("square"), "--format", "svg", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "fmpt_0.svg"));
    CHECK(fs::exists(dir / "fmpt_1.svg"));
    std::ifstream in(dir / "fmpt_0.svg");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(contains(ss.str(), "<svg"));
    CHECK(contains(ss.str(), "<circle"));
    CHECK(run({"enumerate", "--input", data("square"), "--format", "svg"}).code == 2);
}

TEST_CASE("polytope summaries") {
    auto r = run({"polytope", "--input", data("q4e"), "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dim Y_f = 4, vertices 11, simple: PASS, skeleton≅flips: PASS"));

    r = run({"polytope", "--input", data("pentagon")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Y_f = associahedron: 5 vertices, 5 edges"));

    r = run({"polytope", "--input", data("col5"), "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "validity: PASS (weak"));

    r = run({"polytope", "--input", data("tri_mid")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "face dimension 8 (expected 3n-3-n_s = 8): PASS"));

    r = run({"polytope", "--input", data("hexagon"), "--offsets", "two-point:1/3,2,-1,1/2", "--precision", "128"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vertices 14"));
}

TEST_CASE("invalid offsets stop before solving") {
    OffsetVector bad = canonical_offsets(testing::load("q4e"), {0, 0}, {0, 0});
    for (auto& [e, x] : bad.edges) x = -x;
    const auto file = scratch("bad_offsets.json");
    std::ofstream(file) << to_json(bad).dump();
    auto r = run({"polytope", "--input", data("q4e"), "--offsets", "file:" + file.string()});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "validity: FAIL at quadruple ("));
    CHECK_FALSE(contains(r.out, "dim Y_f"));
    r = run({"validate-f", "--input", data("q4e"), "--offsets", "file:" + file.string()});
    CHECK(r.code == 1);
}

TEST_CASE("rigidity table") {
    auto r = run({"rigidity", "--input", data("q4e")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "rigid 11 of 11: PASS"));
    r = run({"rigidity", "--input", data("sq2mid"), "--format", "json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["rigid"] == 6);
    CHECK(j["total"] == 14);
}

TEST_CASE("json mirrors the table") {
    const auto table = run({"polytope", "--input", data("q4e")});
    const auto j = Json::parse(run({"polytope", "--input", data("q4e"), "--format", "json"}).out);
    CHECK(j["dim_yf"] == 4);
    CHECK(j["vertices"].size() == 11);
    CHECK(j["f_vertices"].size() == 8);
    CHECK(j["passed"] == true);
    CHECK(j["validity"]["passed"] == true);
    CHECK(j["vertices"][0]["coords"][0].is_string());
    CHECK(contains(table.out, "face F: 8 vertices, " + std::to_string(j["f_edges"].get<int>()) + " edges"));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense", "--input", data("q4e")}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--input", "/nonexistent.pts"}).code == 2);
    CHECK(run({"polytope", "--input", data("q4e"), "--format", "dot"}).code == 2);
    CHECK(run({"polytope", "--input", data("q4e"), "--offsets", "two-point:1,2"}).code == 2);
    CHECK(run({"polytope", "--input", data("q4e"), "--tolerance", "-1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("serialization round trips") {
    const auto ps = testing::load("q4e");
    const OffsetVector f = canonical_offsets(ps, {Rational(1, 3), 2}, {-1, Rational(1, 2)});
    OffsetVector g = parse_offsets(to_json(f).dump());
    CHECK(g.edges == f.edges);
    g = parse_offsets(R"({"edges": {"0,1": "3/4"}, "marks": {"2": "-0.5"}})");
    CHECK(g.edge(Edge(0, 1)) == Rational(3, 4));
    CHECK(g.mark(2) == Rational(-1, 2));
    CHECK(g.edge(Edge(1, 2)) == 0);
    CHECK_THROWS_AS(parse_offsets("{\"edges\": {\"01\": \"1\"}}"), Error);
    CHECK_THROWS_AS(parse_offsets("not json"), Error);

    const MarkedGraph t({Edge(0, 1), Edge(1, 2)}, {0, 2});
    CHECK(graph_from_json(to_json(t)) == t);

    const FlipGraph fg = enumerate_flip_graph(ps);
    const FlipGraph back = flip_graph_from_json(to_json(fg));
    CHECK(back.nodes == fg.nodes);
    for (std::size_t k = 0; k < fg.size(); ++k)
        for (std::size_t e = 0; e < fg.adjacency[k].size(); ++e) {
            CHECK(back.adjacency[k][e].target == fg.adjacency[k][e].target);
            CHECK(back.adjacency[k][e].flip.kind == fg.adjacency[k][e].flip.kind);
            CHECK(back.adjacency[k][e].flip.removed == fg.adjacency[k][e].flip.removed);
        }
}
