#pragma once

#include "ptpoly/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ptpoly {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Undirected pair of point indices, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {}

    bool touches(int v) const { return a == v || b == v; }
    int other(int v) const { return v == a ? b : a; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

enum class PointClass : std::uint8_t { extremal, semi_interior, interior };

std::string_view to_string(PointClass c);

/// Exact sign of det(q - p, r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& p, const Point& q, const Point& r);

/// True iff q lies in the open segment (p, r).
bool between(const Point& p, const Point& q, const Point& r);

/// det of the 3x3 matrix with rows (1,1,1), (x_a, x_b, x_c), (y_a, y_b, y_c):
/// twice the signed area of triangle abc.
Rational det3(const Point& a, const Point& b, const Point& c);

Rational squared_distance(const Point& a, const Point& b);

/// An immutable, classified planar point set. Indices are positions in the
/// input sequence. All predicates are exact and tabulated at construction.
class PointSet {
public:
    /// Throws Error(degenerate_input) for fewer than 3 points, duplicates, or
    /// all points collinear.
    static PointSet classify(std::vector<Point> points);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

    PointClass label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    bool is_extremal(int i) const { return label(i) == PointClass::extremal; }
    bool is_semi_interior(int i) const { return label(i) == PointClass::semi_interior; }
    bool is_interior(int i) const { return label(i) == PointClass::interior; }
    bool on_boundary(int i) const { return label(i) != PointClass::interior; }

    int n_extremal() const { return n_extremal_; }
    int n_semi_interior() const { return n_semi_; }
    int n_interior() const { return size() - n_extremal_ - n_semi_; }

    /// Boundary points (extremal and semi-interior) in counterclockwise order.
    const std::vector<int>& boundary_cycle() const { return boundary_; }
    /// Consecutive boundary pairs; one per hull edge, in boundary order.
    const std::vector<Edge>& hull_edges() const { return hull_edges_; }
    bool is_hull_edge(Edge e) const { return hull_edge_flag_[pair_index(e.a, e.b)] != 0; }

    /// Previous and next boundary points of a boundary point.
    std::pair<int, int> boundary_neighbors(int v) const;

    int orientation(int p, int q, int r) const {
        return orient_[(static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q)) * n_ +
                       static_cast<std::size_t>(r)];
    }
    /// q in the open segment (p, r).
    bool between(int p, int q, int r) const {
        return between_[(static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q)) * n_ +
                        static_cast<std::size_t>(r)] != 0;
    }
    /// Some point of the set lies in the open segment of e.
    bool edge_blocked(Edge e) const { return blocked_[pair_index(e.a, e.b)] != 0; }

    /// Half-plane class of the direction q - p: 0 for angles in [0, pi), 1 for [pi, 2pi).
    int half(int p, int q) const { return half_[pair_index(p, q)]; }

    /// Collinear triples (a, m, b) with m strictly between a and b, a < b.
    const std::vector<std::array<int, 3>>& collinear_triples() const { return triples_; }
    bool has_collinearities() const { return !triples_.empty(); }
    /// Some hull edge carries a semi-interior point.
    bool has_boundary_collinearities() const { return n_semi_ > 0; }

    /// Lexicographically first pair (i, j), i < j, with distinct y-coordinates.
    std::pair<int, int> normalization_pair() const;

    Rational squared_length(int i, int j) const { return squared_distance(point(i), point(j)); }

private:
    PointSet() = default;

    std::size_t pair_index(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
    }
    std::size_t n_ = 0;
    std::vector<Point> points_;
    std::vector<PointClass> labels_;
    std::vector<int> boundary_;
    std::vector<Edge> hull_edges_;
    std::vector<int> boundary_pos_;
    std::vector<std::int8_t> orient_;
    std::vector<std::uint8_t> between_;
    std::vector<std::uint8_t> half_;
    std::vector<std::uint8_t> blocked_;
    std::vector<std::uint8_t> hull_edge_flag_;
    std::vector<std::array<int, 3>> triples_;
    int n_extremal_ = 0;
    int n_semi_ = 0;
};

/// True iff the closed segments of a and b meet outside their shared endpoints.
bool segments_cross(const PointSet& ps, Edge a, Edge b);

/// True iff point k lies in the open segment of e.
bool point_on_edge(const PointSet& ps, Edge e, int k);

}  // namespace ptpoly
