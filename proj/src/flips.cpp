#include "ptpoly/flips.hpp"

#include "ptpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace ptpoly {

std::string_view to_string(FlipKind kind) {
    switch (kind) {
    case FlipKind::diagonal: return "diagonal";
    case FlipKind::deletion: return "deletion";
    case FlipKind::insertion: return "insertion";
    case FlipKind::mirror: return "mirror";
    }
    return "?";
}

namespace {

FlipKind classify_flip(const PointSet& ps, const MarkedGraph& reduced, const Element& removed,
                       const Element& inserted) {
    if (removed.is_edge() && inserted.is_mark()) return FlipKind::deletion;
    if (removed.is_mark() && inserted.is_edge()) return FlipKind::insertion;
    if (removed.is_mark()) throw std::logic_error("mark exchanged for mark");
    // An edge exchange is a mirror flip when the removal leaves an interior
    // endpoint with two straight angles.
    const Edge e = removed.as_edge();
    for (int v : {e.a, e.b})
        if (ps.is_interior(v) && straight_angle_count(ps, reduced, v) >= 2) return FlipKind::mirror;
    return FlipKind::diagonal;
}

FlipResult flip_unchecked(const PointSet& ps, const MarkedGraph& t, const Element& removed) {
    const MarkedGraph reduced = t.without(removed);
    std::vector<FlipResult> found;

    const int n = ps.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Edge cand(i, j);
            const Element el = Element::edge(cand);
            if (el == removed || reduced.has_edge(cand) || ps.edge_blocked(cand)) continue;
            const bool crosses = std::any_of(reduced.edges().begin(), reduced.edges().end(),
                                             [&](const Edge& e) { return segments_cross(ps, e, cand); });
            if (crosses) continue;
            MarkedGraph g = reduced.with(el);
            if (is_fmpt(ps, g)) found.push_back({{removed, el, FlipKind::diagonal}, std::move(g)});
        }
    }
    for (int v = 0; v < n; ++v) {
        const Element el = Element::mark(v);
        if (el == removed || reduced.has_mark(v)) continue;
        MarkedGraph g = reduced.with(el);
        if (is_fmpt(ps, g)) found.push_back({{removed, el, FlipKind::diagonal}, std::move(g)});
    }

    if (found.size() != 1)
        throw std::logic_error("flip of " + to_string(removed) + " in " + to_string(t) + " has " +
                               std::to_string(found.size()) + " completions");
    FlipResult& r = found.front();
    r.flip.kind = classify_flip(ps, reduced, removed, r.flip.inserted);
    return std::move(r);
}

}  // namespace

FlipResult flip(const PointSet& ps, const MarkedGraph& t, const Element& removed) {
    if (!is_fmpt(ps, t)) throw Error(ErrorKind::not_fmpt, to_string(t));
    if (!t.contains(removed)) throw Error(ErrorKind::not_fmpt, to_string(removed) + " is not in " + to_string(t));
    if (!is_interior_element(ps, removed)) throw Error(ErrorKind::boundary_element, to_string(removed));
    return flip_unchecked(ps, t, removed);
}

std::vector<FlipResult> all_flips(const PointSet& ps, const MarkedGraph& t) {
    if (!is_fmpt(ps, t)) throw Error(ErrorKind::not_fmpt, to_string(t));
    std::vector<FlipResult> out;
    for (const Element& el : t.elements())
        if (is_interior_element(ps, el)) out.push_back(flip_unchecked(ps, t, el));
    return out;
}

std::size_t FlipGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adjacency) total += a.size();
    return total / 2;
}

int FlipGraph::find(const MarkedGraph& g) const {
    auto it = std::find(nodes.begin(), nodes.end(), g);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

bool FlipGraph::adjacent(int u, int w) const {
    const auto& a = adjacency[static_cast<std::size_t>(u)];
    return std::any_of(a.begin(), a.end(), [w](const FlipEdge& e) { return e.target == w; });
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("PTPOLY_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

FlipGraph enumerate_flip_graph(const PointSet& ps, unsigned threads) {
    if (threads == 0) threads = default_thread_count();

    FlipGraph graph;
    std::unordered_map<MarkedGraph, int> index;
    const MarkedGraph seed = complete_to_fmpt(ps, hull_graph(ps));
    graph.nodes.push_back(seed);
    graph.adjacency.emplace_back();
    index.emplace(seed, 0);

    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::vector<FlipResult>> expanded(frontier.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k = next++; k < frontier.size(); k = next++)
                expanded[k] = all_flips(ps, graph.nodes[static_cast<std::size_t>(frontier[k])]);
        };
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(frontier.size()));
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }

        // Sequential merge in frontier order reproduces FIFO discovery order.
        std::vector<int> next_frontier;
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            const int from = frontier[k];
            for (FlipResult& r : expanded[k]) {
                auto [it, inserted] = index.emplace(r.result, static_cast<int>(graph.nodes.size()));
                if (inserted) {
                    graph.nodes.push_back(std::move(r.result));
                    graph.adjacency.emplace_back();
                    next_frontier.push_back(it->second);
                }
                graph.adjacency[static_cast<std::size_t>(from)].push_back({r.flip, it->second});
            }
        }
        frontier = std::move(next_frontier);
    }
    return graph;
}

std::vector<MarkedGraph> brute_force_fmpts(const PointSet& ps, int bound) {
    if (ps.size() > bound)
        throw Error(ErrorKind::too_large,
                    std::to_string(ps.size()) + " points exceeds oracle bound " + std::to_string(bound));

    const int n = ps.size();
    std::vector<Edge> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Edge e(i, j);
            if (!ps.is_hull_edge(e) && !ps.edge_blocked(e)) candidates.push_back(e);
        }
    const std::size_t m = candidates.size();
    std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && segments_cross(ps, candidates[i], candidates[j])) compatible[i][j] = 0;

    const int hull = static_cast<int>(ps.hull_edges().size());
    const int min_edges = 2 * n - ps.n_semi_interior() - 3;
    const int max_edges = 3 * n - ps.n_semi_interior() - 3 - ps.n_extremal();

    std::vector<MarkedGraph> out;
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t next) -> void {
        const int have = hull + static_cast<int>(chosen.size());
        if (have > max_edges) return;
        if (have + static_cast<int>(m - next) < min_edges) return;
        if (next == m) {
            std::vector<Edge> edges = ps.hull_edges();
            for (std::size_t c : chosen) edges.push_back(candidates[c]);
            std::sort(edges.begin(), edges.end());
            const MarkedGraph g(edges, {});
            if (is_pseudo_triangulation(ps, g)) out.push_back(fully_marked(ps, std::move(edges)));
            return;
        }
        const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][next]; });
        if (fits) {
            chosen.push_back(next);
            self(self, next + 1);
            chosen.pop_back();
        }
        self(self, next + 1);
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ptpoly
