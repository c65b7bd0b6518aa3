#include "ptpoly/errors.hpp"
#include "ptpoly/flips.hpp"
#include "ptpoly/polytope.hpp"
#include "ptpoly/rigidity.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ptpoly;
using testing::load;
using testing::points;

namespace {

// Floating-point rank of the unpinned 2n-column rigidity matrix. The
// trivial motions are in its kernel, so the rank matches the pinned one.
int float_rank(const PointSet& ps, const std::vector<Edge>& edges) {
    std::vector<std::vector<double>> rows;
    for (const Edge& e : edges) {
        std::vector<double> r(static_cast<std::size_t>(2 * ps.size()), 0.0);
        const double dx = Rational(ps.point(e.a).x - ps.point(e.b).x).get_d();
        const double dy = Rational(ps.point(e.a).y - ps.point(e.b).y).get_d();
        r[static_cast<std::size_t>(2 * e.a)] = dx;
        r[static_cast<std::size_t>(2 * e.a + 1)] = dy;
        r[static_cast<std::size_t>(2 * e.b)] = -dx;
        r[static_cast<std::size_t>(2 * e.b + 1)] = -dy;
        rows.push_back(std::move(r));
    }
    return vector_rank(rows, 1e-10);
}

std::vector<Edge> octahedron(int a, int b, int c, int d, int e, int f) {
    return {{a, b}, {b, c}, {c, a}, {d, e}, {e, f}, {f, d}, {d, a}, {d, b}, {e, b}, {e, c}, {f, c}, {f, a}};
}

// Exhaustive version of the weighted incidence condition, any n.
bool weighted_condition(int n, const std::vector<Edge>& edges, const std::vector<int>& heavy) {
    for (unsigned s = 1; s < (1U << n); ++s) {
        if (__builtin_popcount(s) > n - 2) continue;
        int need = 0, incident = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1U) need += std::count(heavy.begin(), heavy.end(), v) ? 3 : 2;
        for (const Edge& e : edges)
            if ((s >> e.a & 1U) || (s >> e.b & 1U)) ++incident;
        if (incident < need) return false;
    }
    return true;
}

const char* const kGeneral[] = {"square", "pentagon", "hexagon", "heptagon", "q4e", "tri_in", "gp6", "gp7"};

}  // namespace

TEST_CASE("rigidity rank examples") {
    const auto tri = points({{0, 0}, {4, 0}, {1, 3}});
    CHECK(rigidity_rank(tri, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}) == 3);
    const auto sq = load("square");
    CHECK(rigidity_rank(sq, sq.hull_edges()) == 4);
    CHECK(self_stress_dim(sq, sq.hull_edges()) == 0);
    CHECK(self_stress_dim(sq, {Edge(0, 1)}) == 0);
    CHECK(rigidity_rank(sq, {}) == 0);
    // K4 on a square has one self-stress.
    CHECK(self_stress_dim(sq, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(0, 2), Edge(1, 3)}) == 1);
}

TEST_CASE("every pseudo-triangulation of a general fixture is infinitesimally rigid") {
    for (const char* name : kGeneral) {
        CAPTURE(name);
        const auto ps = load(name);
        const int n = ps.size();
        for (const auto& t : brute_force_fmpts(ps)) {
            const auto cert = is_inf_rigid_pt(ps, t);
            CHECK(cert.rigid);
            CHECK(cert.rank == 2 * n - 3);
            CHECK(cert.rank == float_rank(ps, t.edges()));
            CHECK(cert.marked_rank == 3 * n - 3);
            CHECK(self_stress_dim(ps, t.edges()) == non_pointed_count(ps, t));
        }
    }
}

TEST_CASE("incidence condition holds exhaustively on general fixtures") {
    for (const char* name : kGeneral) {
        CAPTURE(name);
        const auto ps = load(name);
        const long long expected = [&] {
            long long c = 0;
            for (unsigned s = 1; s < (1U << ps.size()); ++s)
                if (__builtin_popcount(s) <= ps.size() - 2) ++c;
            return c;
        }();
        for (const auto& row : rigidity_table(ps, brute_force_fmpts(ps))) {
            CHECK(row.incidence.exhaustive);
            CHECK(row.incidence.subsets == expected);
            CHECK(row.incidence.failures.empty());
            CHECK(row.self_stresses == row.non_pointed);
        }
    }
}

TEST_CASE("incidence_check examples and errors") {
    const auto q = load("q4e");
    const auto star = MarkedGraph(
        [&] {
            auto e = q.hull_edges();
            for (int v = 0; v < 4; ++v) e.emplace_back(v, 4);
            return e;
        }(),
        {0, 1, 2, 3});
    CHECK(incidence_check(q, star, {0}, {}));
    CHECK(incidence_check(q, star, {}, {4}));
    CHECK(incidence_check(q, star, {0, 1}, {4}));
    for (auto [k, l] : {std::pair<std::vector<int>, std::vector<int>>{{4}, {}},
                        {{}, {0}},
                        {{0, 0}, {}},
                        {{0, 1, 2}, {4}}}) {
        try {
            incidence_check(q, star, k, l);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::bad_subset);
        }
    }
}

TEST_CASE("mark basis leaves out as many marks as extra edges") {
    for (const char* name : {"q4e", "tri_in", "gp6"}) {
        CAPTURE(name);
        const auto ps = load(name);
        const int n = ps.size();
        for (const auto& t : brute_force_fmpts(ps)) {
            const auto y = mark_basis(ps, t.edges());
            CHECK(static_cast<int>(y.size()) == static_cast<int>(t.edges().size()) - (2 * n - 3));
            CHECK(weighted_incidence_check(ps, t.edges(), y).failures.empty());
            if (non_pointed_count(ps, t) == 0) CHECK(y.empty());
        }
    }
}

TEST_CASE("counting condition without rigidity") {
    // Two octahedral graphs hinged at one point: each part is rigid with three
    // extra edges, the whole flexes about the hinge.
    const auto ps = load("two_octahedra");
    auto edges = octahedron(0, 1, 2, 3, 4, 5);
    const auto second = octahedron(1, 6, 7, 8, 9, 10);
    edges.insert(edges.end(), second.begin(), second.end());
    REQUIRE_FALSE(ps.has_collinearities());
    REQUIRE(edges_noncrossing(ps, edges));
    CHECK(edges.size() == 2 * 11 - 3 + 5);
    CHECK(rigidity_rank(ps, edges) == 18);
    CHECK(weighted_condition(11, edges, {0, 1, 2, 6, 7}));
    CHECK_FALSE(weighted_condition(11, edges, {2, 3, 4, 5, 9}));
    try {
        mark_basis(ps, edges);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_rigid);
    }
}

TEST_CASE("boundary collinearities allow flexible pseudo-triangulations") {
    const auto tm = load("tri_mid");
    const auto pts = brute_force_fmpts(tm);
    const bool flexible = std::any_of(pts.begin(), pts.end(), [&](const MarkedGraph& t) {
        return !is_inf_rigid_pt(tm, t).rigid;
    });
    CHECK(flexible);

    const auto sq = load("sq2mid");
    const auto g = enumerate_flip_graph(sq);
    CHECK(g.size() == 14);
    const auto rigid = std::count_if(g.nodes.begin(), g.nodes.end(),
                                     [&](const MarkedGraph& t) { return is_inf_rigid_pt(sq, t).rigid; });
    CHECK(rigid == 6);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.adjacency[k].size() == 3);
}
