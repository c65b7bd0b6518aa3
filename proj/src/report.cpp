#include "ptpoly/report.hpp"

#include "ptpoly/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ptpoly {

namespace {

std::string decimal(double x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

Json element_json(const Element& el) {
    return el.is_edge() ? Json::array({el.a, el.b}) : Json(el.vertex());
}

Element element_from_json(const Json& j) {
    if (j.is_array() && j.size() == 2) return Element::edge(j[0].get<int>(), j[1].get<int>());
    if (j.is_number_integer()) return Element::mark(j.get<int>());
    throw Error(ErrorKind::parse_error, "element must be a pair or a point index");
}

FlipKind flip_kind_from(const std::string& s) {
    for (FlipKind k : {FlipKind::diagonal, FlipKind::deletion, FlipKind::insertion, FlipKind::mirror})
        if (to_string(k) == s) return k;
    throw Error(ErrorKind::parse_error, "unknown flip kind " + s);
}

}  // namespace

Json to_json(const MarkedGraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
    return {{"edges", edges}, {"marks", g.marks()}};
}

MarkedGraph graph_from_json(const Json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return MarkedGraph(std::move(edges), j.at("marks").get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

Json to_json(const OffsetVector& f) {
    Json edges = Json::object(), marks = Json::object();
    for (const auto& [e, x] : f.edges) edges[std::to_string(e.a) + "," + std::to_string(e.b)] = to_string(x);
    for (const auto& [v, x] : f.marks) marks[std::to_string(v)] = to_string(x);
    return {{"edges", edges}, {"marks", marks}};
}

OffsetVector parse_offsets(std::string_view text) {
    OffsetVector f;
    try {
        const Json j = Json::parse(text);
        if (j.contains("edges"))
            for (const auto& [key, value] : j.at("edges").items()) {
                const auto comma = key.find(',');
                if (comma == std::string::npos) throw Error(ErrorKind::parse_error, "edge key " + key);
                const Edge e(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
                f.edges[e] = parse_rational(value.get<std::string>());
            }
        if (j.contains("marks"))
            for (const auto& [key, value] : j.at("marks").items())
                f.marks[std::stoi(key)] = parse_rational(value.get<std::string>());
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    } catch (const std::logic_error& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
    return f;
}

Json to_json(const FlipGraph& g) {
    Json nodes = Json::array(), adjacency = Json::array();
    for (std::size_t k = 0; k < g.size(); ++k) {
        nodes.push_back(to_json(g.nodes[k]));
        Json row = Json::array();
        for (const FlipEdge& e : g.adjacency[k])
            row.push_back({{"target", e.target},
                           {"kind", to_string(e.flip.kind)},
                           {"removed", element_json(e.flip.removed)},
                           {"inserted", element_json(e.flip.inserted)}});
        adjacency.push_back(std::move(row));
    }
    return {{"nodes", nodes}, {"adjacency", adjacency}};
}

FlipGraph flip_graph_from_json(const Json& j) {
    FlipGraph g;
    try {
        for (const auto& n : j.at("nodes")) g.nodes.push_back(graph_from_json(n));
        for (const auto& row : j.at("adjacency")) {
            std::vector<FlipEdge> edges;
            for (const auto& e : row)
                edges.push_back({{element_from_json(e.at("removed")), element_from_json(e.at("inserted")),
                                  flip_kind_from(e.at("kind").get<std::string>())},
                                 e.at("target").get<int>()});
            g.adjacency.push_back(std::move(edges));
        }
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
    if (g.adjacency.size() != g.nodes.size()) throw Error(ErrorKind::parse_error, "adjacency size mismatch");
    return g;
}

std::string to_dot(const FlipGraph& g) {
    std::ostringstream os;
    os << "graph flips {\n";
    for (std::size_t k = 0; k < g.size(); ++k) os << "  " << k << " [label=\"" << k << "\"];\n";
    for (std::size_t k = 0; k < g.size(); ++k)
        for (const FlipEdge& e : g.adjacency[k])
            if (static_cast<std::size_t>(e.target) > k)
                os << "  " << k << " -- " << e.target << " [label=\"" << to_string(e.flip.kind) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_svg(const PointSet& ps, const MarkedGraph& g) {
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Point& p : ps.points()) {
        minx = std::min(minx, p.x.get_d());
        maxx = std::max(maxx, p.x.get_d());
        miny = std::min(miny, p.y.get_d());
        maxy = std::max(maxy, p.y.get_d());
    }
    const double size = 400, pad = 20;
    const double scale = (size - 2 * pad) / std::max({maxx - minx, maxy - miny, 1e-12});
    auto sx = [&](int i) { return pad + (ps.point(i).x.get_d() - minx) * scale; };
    // SVG y grows downwards.
    auto sy = [&](int i) { return size - pad - (ps.point(i).y.get_d() - miny) * scale; };

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    for (const Edge& e : g.edges())
        os << "  <line x1=\"" << sx(e.a) << "\" y1=\"" << sy(e.a) << "\" x2=\"" << sx(e.b) << "\" y2=\"" << sy(e.b)
           << "\" stroke=\"black\" stroke-width=\"" << (ps.is_hull_edge(e) ? 3 : 1) << "\"/>\n";
    for (int i = 0; i < ps.size(); ++i) {
        const bool marked = g.has_mark(i);
        os << "  <circle cx=\"" << sx(i) << "\" cy=\"" << sy(i) << "\" r=\"" << (marked ? 6 : 3)
           << "\" fill=\"" << (marked ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

Json to_json(const ValidityReport& r) {
    Json failures = Json::array();
    for (const auto& c : r.failures)
        failures.push_back({{"check", describe(c)}, {"status", to_string(c.status)}, {"value", c.value}, {"exact", c.exact}});
    return {{"mode", r.mode == ValidityMode::strict ? "strict" : "weak"},
            {"passed", r.passed()},
            {"quadruples", r.quadruples},
            {"triples", r.triples},
            {"five_point", r.five_point},
            {"tight", r.tight},
            {"failures", failures}};
}

Json to_json(const SkeletonReport& r, int digits) {
    Json vertices = Json::array();
    for (const auto& v : r.vertices) {
        Json coords = Json::array();
        for (double x : v.coords) coords.push_back(decimal(x, digits));
        vertices.push_back({{"source", v.source},
                            {"coords", coords},
                            {"tight_strict", to_json(v.tight_strict)},
                            {"tight_weak", to_json(v.tight_weak)},
                            {"min_slack", v.min_slack}});
    }
    Json edges = Json::array();
    for (const auto& e : r.bounded_edges)
        edges.push_back({{"u", e.u}, {"w", e.w}, {"kind", to_string(e.flip.kind)}});
    Json rays = Json::array();
    for (const auto& ray : r.rays) {
        Json d = Json::array();
        for (double x : ray.direction) d.push_back(decimal(x, digits));
        rays.push_back({{"vertex", ray.vertex}, {"dropped", to_string(ray.dropped)}, {"direction", d}});
    }
    return {{"precision_digits", digits},
            {"dimension", r.dimension},
            {"dim_yf", r.dim_yf},
            {"dim_f", r.dim_f},
            {"f_vertices", r.f_vertices},
            {"f_edges", r.f_edges},
            {"simple", r.simple},
            {"bijective", r.bijective},
            {"rays_complete", r.rays_complete},
            {"yf_bounded", r.yf_bounded},
            {"problems", r.problems},
            {"vertices", vertices},
            {"bounded_edges", edges},
            {"rays", rays}};
}

Json to_json(const std::vector<RigidityRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json failing = Json::array();
        for (const auto& f : row.incidence.failures)
            failing.push_back({{"pointed", f.pointed}, {"non_pointed", f.non_pointed}, {"incident", f.incident}});
        out.push_back({{"graph", to_json(row.graph)},
                       {"rank", row.rank},
                       {"rigid", row.rigid},
                       {"self_stress_dim", row.self_stresses},
                       {"non_pointed", row.non_pointed},
                       {"subsets_checked", row.incidence.subsets},
                       {"exhaustive", row.incidence.exhaustive},
                       {"failing_subsets", failing}});
    }
    return out;
}

}  // namespace ptpoly
