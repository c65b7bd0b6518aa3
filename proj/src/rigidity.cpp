#include "ptpoly/rigidity.hpp"

#include "ptpoly/errors.hpp"
#include "ptpoly/polytope.hpp"

#include <algorithm>
#include <random>

namespace ptpoly {

namespace {

// Row echelon rank by exact elimination.
int exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const Rational factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<Element> edge_rows(const std::vector<Edge>& edges) {
    std::vector<Element> rows;
    for (const Edge& e : edges) rows.push_back(Element::edge(e));
    return rows;
}

int incident_edges(const std::vector<Edge>& edges, const std::vector<int>& vs) {
    int count = 0;
    for (const Edge& e : edges)
        if (std::any_of(vs.begin(), vs.end(), [&](int v) { return e.touches(v); })) ++count;
    return count;
}

}  // namespace

int rigidity_rank(const PointSet& ps, const std::vector<Edge>& edges) {
    // Same column layout as the velocity part of the constraint system.
    const auto [p1, p2] = ps.normalization_pair();
    const int n = ps.size();
    std::vector<int> col(static_cast<std::size_t>(2 * n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 2; ++c)
            if (!(i == p1 || (i == p2 && c == 0))) col[static_cast<std::size_t>(2 * i + c)] = next++;

    std::vector<std::vector<Rational>> m;
    for (const Edge& e : edges) {
        std::vector<Rational> row(static_cast<std::size_t>(next), Rational(0));
        const Point& a = ps.point(e.a);
        const Point& b = ps.point(e.b);
        const Rational d[2] = {a.x - b.x, a.y - b.y};
        for (int c = 0; c < 2; ++c) {
            if (const int k = col[static_cast<std::size_t>(2 * e.a + c)]; k >= 0) row[static_cast<std::size_t>(k)] += d[c];
            if (const int k = col[static_cast<std::size_t>(2 * e.b + c)]; k >= 0) row[static_cast<std::size_t>(k)] -= d[c];
        }
        m.push_back(std::move(row));
    }
    return exact_rank(std::move(m));
}

int self_stress_dim(const PointSet& ps, const std::vector<Edge>& edges) {
    return static_cast<int>(edges.size()) - rigidity_rank(ps, edges);
}

RigidityCertificate is_inf_rigid_pt(const PointSet& ps, const MarkedGraph& t) {
    RigidityCertificate cert;
    cert.rank = rigidity_rank(ps, t.edges());
    cert.deficit = 2 * ps.size() - 3 - cert.rank;
    cert.rigid = cert.deficit == 0;
    const ConstraintSystem cs = build_system(ps, OffsetVector{});
    cert.marked_rank = row_rank(cs, fully_marked(ps, t.edges()).elements());
    return cert;
}

bool incidence_check(const PointSet& ps, const MarkedGraph& t, const std::vector<int>& pointed,
                     const std::vector<int>& non_pointed) {
    std::vector<int> all = pointed;
    all.insert(all.end(), non_pointed.begin(), non_pointed.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error(ErrorKind::bad_subset, "vertex listed twice");
    if (static_cast<int>(all.size()) > ps.size() - 2)
        throw Error(ErrorKind::bad_subset, "more than n - 2 vertices");
    for (int v : all)
        if (v < 0 || v >= ps.size()) throw Error(ErrorKind::bad_subset, "vertex out of range");
    for (int v : pointed)
        if (!is_pointed(ps, t, v)) throw Error(ErrorKind::bad_subset, std::to_string(v) + " is not pointed");
    for (int v : non_pointed)
        if (is_pointed(ps, t, v)) throw Error(ErrorKind::bad_subset, std::to_string(v) + " is pointed");
    return incident_edges(t.edges(), all) >= 2 * static_cast<int>(pointed.size()) + 3 * static_cast<int>(non_pointed.size());
}

IncidenceReport weighted_incidence_check(const PointSet& ps, const std::vector<Edge>& edges,
                                         const std::vector<int>& heavy) {
    const int n = ps.size();
    std::vector<bool> is_heavy(static_cast<std::size_t>(n));
    for (int v : heavy) is_heavy[static_cast<std::size_t>(v)] = true;

    IncidenceReport rep;
    auto check = [&](unsigned long long bits) {
        std::vector<int> k, l;
        for (int v = 0; v < n; ++v)
            if (bits >> v & 1ULL) (is_heavy[static_cast<std::size_t>(v)] ? l : k).push_back(v);
        ++rep.subsets;
        std::vector<int> all = k;
        all.insert(all.end(), l.begin(), l.end());
        const int incident = incident_edges(edges, all);
        if (incident < 2 * static_cast<int>(k.size()) + 3 * static_cast<int>(l.size()))
            rep.failures.push_back({k, l, incident});
    };

    if (n <= 10) {
        for (unsigned long long bits = 1; bits < (1ULL << n); ++bits)
            if (__builtin_popcountll(bits) <= n - 2) check(bits);
        return rep;
    }
    rep.exhaustive = false;
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> size(1, n - 2);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    for (int s = 0; s < 100000; ++s) {
        std::shuffle(order.begin(), order.end(), gen);
        unsigned long long bits = 0;
        const int k = size(gen);
        for (int j = 0; j < k; ++j) bits |= 1ULL << order[static_cast<std::size_t>(j)];
        check(bits);
    }
    return rep;
}

IncidenceReport incidence_check_all(const PointSet& ps, const MarkedGraph& t) {
    std::vector<int> heavy;
    for (int v = 0; v < ps.size(); ++v)
        if (!is_pointed(ps, t, v)) heavy.push_back(v);
    return weighted_incidence_check(ps, t.edges(), heavy);
}

std::vector<int> mark_basis(const PointSet& ps, const std::vector<Edge>& edges) {
    const ConstraintSystem cs = build_system(ps, OffsetVector{});
    std::vector<Element> rows = edge_rows(edges);
    int rank = row_rank(cs, rows);
    std::vector<int> unmarked;
    for (int v = 0; v < ps.size(); ++v) {
        rows.push_back(Element::mark(v));
        const int r = row_rank(cs, rows);
        if (r > rank) {
            rank = r;
        } else {
            rows.pop_back();
            unmarked.push_back(v);
        }
    }
    if (rank < cs.dimension())
        throw Error(ErrorKind::not_rigid, "edge and mark rows reach rank " + std::to_string(rank) + " of " +
                                              std::to_string(cs.dimension()));
    return unmarked;
}

std::vector<RigidityRow> rigidity_table(const PointSet& ps, const std::vector<MarkedGraph>& pts) {
    std::vector<RigidityRow> out;
    for (const MarkedGraph& t : pts) {
        RigidityRow row;
        row.graph = t;
        row.rank = rigidity_rank(ps, t.edges());
        row.rigid = row.rank == 2 * ps.size() - 3;
        row.self_stresses = static_cast<int>(t.edges().size()) - row.rank;
        row.non_pointed = non_pointed_count(ps, t);
        row.incidence = incidence_check_all(ps, t);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace ptpoly
