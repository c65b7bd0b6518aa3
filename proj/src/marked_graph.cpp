#include "ptpoly/marked_graph.hpp"

#include "ptpoly/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptpoly {

std::string to_string(const Element& e) {
    if (e.is_mark()) return "m" + std::to_string(e.a);
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

MarkedGraph::MarkedGraph(std::vector<Edge> edges, std::vector<int> marks)
    : edges_(std::move(edges)), marks_(std::move(marks)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::sort(marks_.begin(), marks_.end());
    marks_.erase(std::unique(marks_.begin(), marks_.end()), marks_.end());
}

bool MarkedGraph::has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool MarkedGraph::has_mark(int v) const { return std::binary_search(marks_.begin(), marks_.end(), v); }

bool MarkedGraph::contains(const Element& el) const {
    return el.is_edge() ? has_edge(el.as_edge()) : has_mark(el.vertex());
}

bool MarkedGraph::contains(const MarkedGraph& other) const {
    return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end()) &&
           std::includes(marks_.begin(), marks_.end(), other.marks_.begin(), other.marks_.end());
}

MarkedGraph MarkedGraph::with(const Element& el) const {
    MarkedGraph g = *this;
    if (el.is_edge()) {
        const Edge e = el.as_edge();
        auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
        if (it == g.edges_.end() || *it != e) g.edges_.insert(it, e);
    } else {
        auto it = std::lower_bound(g.marks_.begin(), g.marks_.end(), el.vertex());
        if (it == g.marks_.end() || *it != el.vertex()) g.marks_.insert(it, el.vertex());
    }
    return g;
}

MarkedGraph MarkedGraph::without(const Element& el) const {
    MarkedGraph g = *this;
    if (el.is_edge()) {
        auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), el.as_edge());
        if (it != g.edges_.end() && *it == el.as_edge()) g.edges_.erase(it);
    } else {
        auto it = std::lower_bound(g.marks_.begin(), g.marks_.end(), el.vertex());
        if (it != g.marks_.end() && *it == el.vertex()) g.marks_.erase(it);
    }
    return g;
}

std::vector<Element> MarkedGraph::elements() const {
    std::vector<Element> out;
    out.reserve(element_count());
    for (const Edge& e : edges_) out.push_back(Element::edge(e));
    for (int v : marks_) out.push_back(Element::mark(v));
    return out;
}

std::string to_string(const MarkedGraph& g) {
    std::string s = "{";
    bool first = true;
    for (const Element& el : g.elements()) {
        if (!first) s += ' ';
        s += to_string(el);
        first = false;
    }
    return s + "}";
}

std::size_t MarkedGraphHash::operator()(const MarkedGraph& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
    for (const Edge& e : g.edges()) mix(static_cast<std::size_t>(e.a) * 4099u + static_cast<std::size_t>(e.b));
    mix(0xffffu);
    for (int v : g.marks()) mix(static_cast<std::size_t>(v));
    return h;
}

int Face::corner_count() const {
    return static_cast<int>(std::count_if(cycle.begin(), cycle.end(),
                                          [](const Corner& c) { return c.angle == AngleKind::convex; }));
}

bool Face::is_simple() const {
    std::vector<int> vs;
    vs.reserve(cycle.size());
    for (const Corner& c : cycle) vs.push_back(c.vertex);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

namespace {

void sort_ccw(const PointSet& ps, int v, std::vector<int>& nbrs) {
    std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
        const int ha = ps.half(v, a);
        const int hb = ps.half(v, b);
        if (ha != hb) return ha < hb;
        const int o = ps.orientation(v, a, b);
        if (o != 0) return o > 0;
        return a < b;
    });
}

// Sector swept counterclockwise around v from neighbor `from` to neighbor `to`.
AngleKind sector(const PointSet& ps, int v, int from, int to) {
    if (from == to) return AngleKind::reflex;
    const int o = ps.orientation(v, from, to);
    if (o > 0) return AngleKind::convex;
    if (o < 0) return AngleKind::reflex;
    return ps.between(from, v, to) ? AngleKind::straight : AngleKind::convex;
}

// Pointedness of v given its counterclockwise-sorted neighbors.
bool pointed_sorted(const PointSet& ps, int v, const std::vector<int>& nbrs) {
    switch (ps.label(v)) {
    case PointClass::extremal: return true;
    case PointClass::semi_interior: {
        const int prev = ps.boundary_neighbors(v).first;
        return std::all_of(nbrs.begin(), nbrs.end(), [&](int w) { return ps.orientation(prev, v, w) == 0; });
    }
    case PointClass::interior: break;
    }
    if (nbrs.size() <= 1) return true;
    for (std::size_t k = 0; k < nbrs.size(); ++k)
        if (sector(ps, v, nbrs[k], nbrs[(k + 1) % nbrs.size()]) != AngleKind::convex) return true;
    return false;
}

int straight_sectors(const PointSet& ps, int v, const std::vector<int>& nbrs) {
    if (nbrs.size() < 2) return 0;
    int count = 0;
    for (std::size_t k = 0; k < nbrs.size(); ++k)
        if (sector(ps, v, nbrs[k], nbrs[(k + 1) % nbrs.size()]) == AngleKind::straight) ++count;
    return count;
}

// Counterclockwise rotation system of a straight-line graph.
class Embedding {
public:
    Embedding(const PointSet& ps, const std::vector<Edge>& edges)
        : ps_(ps), adj_(static_cast<std::size_t>(ps.size())) {
        for (const Edge& e : edges) {
            adj_[e.a].push_back(e.b);
            adj_[e.b].push_back(e.a);
        }
        for (int v = 0; v < ps.size(); ++v) sort_ccw(ps, v, adj_[v]);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool pointed(int v) const { return pointed_sorted(ps_, v, adj_[v]); }
    int straight_count(int v) const { return straight_sectors(ps_, v, adj_[v]); }

    bool connected() const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == adj_.size();
    }

    FaceDecomposition faces() const {
        FaceDecomposition out;
        std::vector<std::vector<char>> used(adj_.size());
        for (std::size_t v = 0; v < adj_.size(); ++v) used[v].assign(adj_[v].size(), 0);

        const auto& boundary = ps_.boundary_cycle();
        const int outer_from = boundary[1];
        const int outer_to = boundary[0];

        for (int u = 0; u < ps_.size(); ++u) {
            for (std::size_t k = 0; k < adj_[u].size(); ++k) {
                if (used[u][k]) continue;
                Face face;
                int cu = u;
                std::size_t ck = k;
                while (!used[cu][ck]) {
                    used[cu][ck] = 1;
                    const int cv = adj_[cu][ck];
                    if (cu == outer_from && cv == outer_to) face.outer = true;
                    const auto& around = adj_[cv];
                    const std::size_t back = index_of(cv, cu);
                    const std::size_t next = (back + around.size() - 1) % around.size();
                    const int w = around[next];
                    face.cycle.push_back({cv, sector(ps_, cv, w, cu)});
                    cu = cv;
                    ck = next;
                }
                if (face.outer) out.outer_face = static_cast<int>(out.faces.size());
                out.faces.push_back(std::move(face));
            }
        }
        return out;
    }

private:
    std::size_t index_of(int v, int w) const {
        const auto& a = adj_[v];
        return static_cast<std::size_t>(std::find(a.begin(), a.end(), w) - a.begin());
    }

    const PointSet& ps_;
    std::vector<std::vector<int>> adj_;
};

bool contains_hull(const PointSet& ps, const std::vector<Edge>& edges) {
    return std::all_of(ps.hull_edges().begin(), ps.hull_edges().end(),
                       [&](const Edge& e) { return std::binary_search(edges.begin(), edges.end(), e); });
}

}  // namespace

bool is_interior_element(const PointSet& ps, const Element& el) {
    if (el.is_edge()) return !ps.is_hull_edge(el.as_edge());
    return !ps.is_extremal(el.vertex());
}

bool edges_noncrossing(const PointSet& ps, const std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].a == edges[i].b || ps.edge_blocked(edges[i])) return false;
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (segments_cross(ps, edges[i], edges[j])) return false;
    }
    return true;
}

bool is_pointed(const PointSet& ps, const MarkedGraph& g, int v) {
    std::vector<int> nbrs;
    for (const Edge& e : g.edges())
        if (e.touches(v)) nbrs.push_back(e.other(v));
    sort_ccw(ps, v, nbrs);
    return pointed_sorted(ps, v, nbrs);
}

int straight_angle_count(const PointSet& ps, const MarkedGraph& g, int v) {
    std::vector<int> nbrs;
    for (const Edge& e : g.edges())
        if (e.touches(v)) nbrs.push_back(e.other(v));
    sort_ccw(ps, v, nbrs);
    return straight_sectors(ps, v, nbrs);
}

std::vector<int> pointed_vertices(const PointSet& ps, const std::vector<Edge>& edges) {
    const Embedding emb(ps, edges);
    std::vector<int> out;
    for (int v = 0; v < ps.size(); ++v)
        if (emb.pointed(v)) out.push_back(v);
    return out;
}

bool is_noncrossing(const PointSet& ps, const MarkedGraph& g) {
    if (!edges_noncrossing(ps, g.edges())) return false;
    const Embedding emb(ps, g.edges());
    return std::all_of(g.marks().begin(), g.marks().end(), [&](int v) { return emb.pointed(v); });
}

FaceDecomposition face_decomposition(const PointSet& ps, const MarkedGraph& g) {
    if (!edges_noncrossing(ps, g.edges())) throw Error(ErrorKind::crossing_input, "graph " + to_string(g));
    for (const Edge& e : ps.hull_edges())
        if (!g.has_edge(e)) throw Error(ErrorKind::missing_hull, "hull edge " + to_string(e) + " absent");
    return Embedding(ps, g.edges()).faces();
}

bool is_pseudo_triangle(const Face& face) { return !face.outer && face.is_simple() && face.corner_count() == 3; }

bool is_pseudo_triangulation(const PointSet& ps, const MarkedGraph& g) {
    const auto& edges = g.edges();
    if (!contains_hull(ps, edges)) return false;
    if (!edges_noncrossing(ps, edges)) return false;
    const Embedding emb(ps, edges);
    if (!emb.connected()) return false;
    for (int v = 0; v < ps.size(); ++v)
        if (ps.is_interior(v) && emb.straight_count(v) >= 2) return false;
    const FaceDecomposition fd = emb.faces();
    for (const Face& f : fd.faces)
        if (!f.outer && !is_pseudo_triangle(f)) return false;
    return true;
}

bool is_fmpt(const PointSet& ps, const MarkedGraph& g) {
    if (!is_pseudo_triangulation(ps, g)) return false;
    return pointed_vertices(ps, g.edges()) == g.marks();
}

MarkedGraph fully_marked(const PointSet& ps, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<int> marks = pointed_vertices(ps, edges);
    return MarkedGraph(std::move(edges), std::move(marks));
}

MarkedGraph hull_graph(const PointSet& ps) {
    std::vector<int> marks;
    for (int v = 0; v < ps.size(); ++v)
        if (ps.is_extremal(v)) marks.push_back(v);
    return MarkedGraph(ps.hull_edges(), std::move(marks));
}

MarkedGraph complete_to_fmpt(const PointSet& ps, const MarkedGraph& g) {
    if (!is_noncrossing(ps, g)) throw Error(ErrorKind::crossing_input, "cannot complete " + to_string(g));

    std::vector<Edge> edges = g.edges();
    for (const Edge& e : ps.hull_edges()) edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const int n = ps.size();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> must_stay_pointed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        sort_ccw(ps, v, adj[v]);
        must_stay_pointed[v] = pointed_sorted(ps, v, adj[v]) ? 1 : 0;
    }

    auto keeps_pointed = [&](int v, int w) {
        if (!must_stay_pointed[v]) return true;
        std::vector<int> nbrs = adj[v];
        nbrs.push_back(w);
        sort_ccw(ps, v, nbrs);
        return pointed_sorted(ps, v, nbrs);
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Edge cand(i, j);
            if (ps.edge_blocked(cand) || std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end()) continue;
            const bool crosses = std::any_of(edges.begin(), edges.end(),
                                             [&](const Edge& e) { return segments_cross(ps, e, cand); });
            if (crosses || !keeps_pointed(i, j) || !keeps_pointed(j, i)) continue;
            edges.push_back(cand);
            adj[i].push_back(j);
            adj[j].push_back(i);
            sort_ccw(ps, i, adj[i]);
            sort_ccw(ps, j, adj[j]);
        }
    }

    MarkedGraph result = fully_marked(ps, std::move(edges));
    if (!is_fmpt(ps, result) || !result.contains(g))
        throw std::logic_error("completion of " + to_string(g) + " produced " + to_string(result));
    return result;
}

ElementCounts count_elements(const PointSet& ps, const MarkedGraph& g) {
    ElementCounts c;
    c.edges = static_cast<int>(g.edges().size());
    c.marks = static_cast<int>(g.marks().size());
    for (const Edge& e : g.edges())
        if (!ps.is_hull_edge(e)) ++c.interior_edges;
    for (int v : g.marks())
        if (!ps.is_extremal(v)) ++c.interior_marks;
    return c;
}

int non_pointed_count(const PointSet& ps, const MarkedGraph& g) {
    return ps.size() - static_cast<int>(pointed_vertices(ps, g.edges()).size());
}

}  // namespace ptpoly
