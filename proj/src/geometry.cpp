#include "ptpoly/geometry.hpp"

#include "ptpoly/errors.hpp"

#include <numeric>

namespace ptpoly {

std::string to_string(const Edge& e) { return std::to_string(e.a) + "-" + std::to_string(e.b); }

std::string_view to_string(PointClass c) {
    switch (c) {
    case PointClass::extremal: return "extremal";
    case PointClass::semi_interior: return "semi_interior";
    case PointClass::interior: return "interior";
    }
    return "?";
}

int orientation(const Point& p, const Point& q, const Point& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

bool between(const Point& p, const Point& q, const Point& r) {
    if (orientation(p, q, r) != 0) return false;
    const Rational dot = (q.x - p.x) * (r.x - q.x) + (q.y - p.y) * (r.y - q.y);
    return sgn(dot) > 0;
}

Rational det3(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational squared_distance(const Point& a, const Point& b) {
    const Rational dx = a.x - b.x;
    const Rational dy = a.y - b.y;
    return dx * dx + dy * dy;
}

namespace {

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Strict convex hull (no collinear vertices), counterclockwise, monotone chain.
std::vector<int> strict_hull(const std::vector<Point>& pts) {
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });

    std::vector<int> hull(2 * order.size());
    std::size_t k = 0;
    for (int i : order) {
        while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
        const int i = order[t];
        while (k >= lower && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

PointSet PointSet::classify(std::vector<Point> points) {
    const std::size_t n = points.size();
    if (n < 3) throw Error(ErrorKind::degenerate_input, "need at least 3 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw Error(ErrorKind::degenerate_input,
                            "duplicate points " + std::to_string(i) + " and " + std::to_string(j));

    PointSet ps;
    ps.n_ = n;
    ps.points_ = std::move(points);
    const auto& pts = ps.points_;

    ps.orient_.assign(n * n * n, 0);
    ps.between_.assign(n * n * n, 0);
    bool all_collinear = true;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                if (p == q || q == r || p == r) continue;
                const std::size_t idx = (p * n + q) * n + r;
                const int o = ptpoly::orientation(pts[p], pts[q], pts[r]);
                ps.orient_[idx] = static_cast<std::int8_t>(o);
                if (o != 0) all_collinear = false;
                else if (ptpoly::between(pts[p], pts[q], pts[r])) ps.between_[idx] = 1;
            }
    if (all_collinear) throw Error(ErrorKind::degenerate_input, "all points are collinear");

    ps.half_.assign(n * n, 0);
    ps.blocked_.assign(n * n, 0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            const Rational dx = pts[q].x - pts[p].x;
            const Rational dy = pts[q].y - pts[p].y;
            const bool upper = sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0);
            ps.half_[p * n + q] = upper ? 0 : 1;
            for (std::size_t k = 0; k < n; ++k)
                if (ps.between_[(p * n + k) * n + q]) ps.blocked_[p * n + q] = 1;
        }

    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = a + 1; b < static_cast<int>(n); ++b)
            for (int m = 0; m < static_cast<int>(n); ++m)
                if (ps.between(a, m, b)) ps.triples_.push_back({a, m, b});

    // Boundary cycle: strict hull vertices with semi-interior points spliced in.
    const std::vector<int> hull = strict_hull(pts);
    ps.labels_.assign(n, PointClass::interior);
    for (int v : hull) ps.labels_[v] = PointClass::extremal;
    ps.n_extremal_ = static_cast<int>(hull.size());
    for (std::size_t h = 0; h < hull.size(); ++h) {
        const int a = hull[h];
        const int b = hull[(h + 1) % hull.size()];
        ps.boundary_.push_back(a);
        std::vector<int> on_edge;
        for (int k = 0; k < static_cast<int>(n); ++k)
            if (ps.between(a, k, b)) on_edge.push_back(k);
        std::sort(on_edge.begin(), on_edge.end(), [&](int u, int w) {
            return squared_distance(pts[a], pts[u]) < squared_distance(pts[a], pts[w]);
        });
        for (int k : on_edge) {
            ps.labels_[k] = PointClass::semi_interior;
            ps.boundary_.push_back(k);
            ++ps.n_semi_;
        }
    }

    ps.boundary_pos_.assign(n, -1);
    ps.hull_edge_flag_.assign(n * n, 0);
    for (std::size_t i = 0; i < ps.boundary_.size(); ++i) {
        const int a = ps.boundary_[i];
        const int b = ps.boundary_[(i + 1) % ps.boundary_.size()];
        ps.boundary_pos_[a] = static_cast<int>(i);
        ps.hull_edges_.emplace_back(a, b);
        ps.hull_edge_flag_[static_cast<std::size_t>(a) * n + b] = 1;
        ps.hull_edge_flag_[static_cast<std::size_t>(b) * n + a] = 1;
    }
    return ps;
}

std::pair<int, int> PointSet::boundary_neighbors(int v) const {
    const int pos = boundary_pos_[static_cast<std::size_t>(v)];
    if (pos < 0) return {-1, -1};
    const int m = static_cast<int>(boundary_.size());
    return {boundary_[static_cast<std::size_t>((pos + m - 1) % m)], boundary_[static_cast<std::size_t>((pos + 1) % m)]};
}

std::pair<int, int> PointSet::normalization_pair() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (point(i).y != point(j).y) return {i, j};
    throw Error(ErrorKind::degenerate_input, "all points share a y-coordinate");
}

bool point_on_edge(const PointSet& ps, Edge e, int k) {
    return k != e.a && k != e.b && ps.between(e.a, k, e.b);
}

bool segments_cross(const PointSet& ps, Edge e, Edge f) {
    if (e == f) return false;
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) {
        const int x = (e.a == f.a || e.a == f.b) ? e.a : e.b;
        const int y = e.other(x);
        const int z = f.other(x);
        // Sharing x, they meet elsewhere only when they overlap along a ray from x.
        return ps.orientation(x, y, z) == 0 && !ps.between(y, x, z);
    }
    const int o1 = ps.orientation(e.a, e.b, f.a);
    const int o2 = ps.orientation(e.a, e.b, f.b);
    const int o3 = ps.orientation(f.a, f.b, e.a);
    const int o4 = ps.orientation(f.a, f.b, e.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && ps.between(e.a, f.a, e.b)) return true;
    if (o2 == 0 && ps.between(e.a, f.b, e.b)) return true;
    if (o3 == 0 && ps.between(f.a, e.a, f.b)) return true;
    if (o4 == 0 && ps.between(f.a, e.b, f.b)) return true;
    return false;
}

}  // namespace ptpoly
