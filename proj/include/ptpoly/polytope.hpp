#pragma once

#include "ptpoly/flips.hpp"
#include "ptpoly/stress.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptpoly {

struct PolytopeOptions {
    /// Relative tolerance for tightness and rank decisions.
    double tolerance = 1e-9;
    /// Working precision; above 53 the linear algebra runs in MPFR.
    unsigned precision_bits = 53;
};

/// The inequalities
///   <p_i - p_j, v_i - v_j> - |p_i - p_j| (t_i + t_j) >= f_ij   for every pair,
///   t_j >= f_0j                                                 for every point,
/// in the variables (v, t) with three velocity coordinates pinned: both
/// coordinates of the first normalization point and x of the second.
///
/// Variable layout: v_0.x, v_0.y, v_1.x, ... with the pinned ones skipped,
/// then t_0 .. t_{n-1}. Rows: every pair in lexicographic order, then every
/// point, matching Element order.
class ConstraintSystem {
public:
    /// Throws Error(degenerate_input) if the normalization pair shares a y-coordinate.
    ConstraintSystem(PointSet ps, OffsetVector f, std::pair<int, int> pin);

    const PointSet& points() const { return ps_; }
    const OffsetVector& offsets() const { return f_; }
    std::pair<int, int> normalization() const { return pin_; }

    int dimension() const { return 3 * ps_.size() - 3; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<Element>& rows() const { return rows_; }
    int row_of(const Element& el) const;

    /// Column of coordinate c (0 = x, 1 = y) of v_i, or -1 when pinned.
    int v_column(int i, int c) const { return v_col_[static_cast<std::size_t>(2 * i + c)]; }
    int t_column(int i) const { return 2 * ps_.size() - 3 + i; }

    /// Full velocity and time vectors (pinned entries zero) from a coordinate vector.
    std::vector<double> velocities(const std::vector<double>& x) const;
    std::vector<double> times(const std::vector<double>& x) const;

private:
    PointSet ps_;
    OffsetVector f_;
    std::pair<int, int> pin_;
    std::vector<int> v_col_;
    std::vector<Element> rows_;
};

/// Uses the lexicographically first pair of points with distinct y-coordinates.
ConstraintSystem build_system(const PointSet& ps, const OffsetVector& f);
ConstraintSystem build_system(const PointSet& ps, const OffsetVector& f, std::pair<int, int> pin);

struct PolytopeVertex {
    std::vector<double> coords;
    /// Every row with slack within tolerance.
    MarkedGraph tight_strict;
    /// Tight rows not implied by the others: a tight row is dropped when a
    /// dependency among the tight rows writes it as a nonnegative combination
    /// of the remaining ones.
    MarkedGraph tight_weak;
    int source = -1;
    /// Smallest relative slack among rows that are not tight.
    double min_slack = 0;
};

/// Solves the square system of t's rows and classifies every slack.
/// Throws Error(singular_system) or Error(infeasible_vertex).
PolytopeVertex vertex_from_fmpt(const ConstraintSystem& cs, const MarkedGraph& t, const PolytopeOptions& opt = {});

/// Relative slack of every row at x, in row order.
std::vector<double> relative_slacks(const ConstraintSystem& cs, const std::vector<double>& x,
                                    const PolytopeOptions& opt = {});

/// Rank of the given rows, with relative tolerance.
int row_rank(const ConstraintSystem& cs, const std::vector<Element>& rows, const PolytopeOptions& opt = {});

/// Rank of a set of vectors, with tolerance relative to the largest entry.
int vector_rank(const std::vector<std::vector<double>>& vs, double tolerance = 1e-9);

struct BoundedEdge {
    int u = -1;
    int w = -1;
    Flip flip;
};

struct Ray {
    int vertex = -1;
    Element dropped;
    std::vector<double> direction;
};

struct SkeletonReport {
    std::vector<PolytopeVertex> vertices;
    std::vector<BoundedEdge> bounded_edges;
    std::vector<Ray> rays;
    int dimension = 0;
    /// Affine dimension of the face with every hull row tight, and of its face
    /// with every mark row tight, measured from the vertex coordinates.
    int dim_yf = 0;
    int dim_f = 0;
    std::vector<int> f_vertices;
    int f_edges = 0;
    /// Every vertex lies on exactly `dimension` facets.
    bool simple = true;
    /// Distinct vertices, one per node, weak tight graph equal to the node.
    bool bijective = true;
    /// Every hull element of every vertex yields a recession direction.
    bool rays_complete = true;
    /// No recession direction keeps every hull row tight.
    bool yf_bounded = true;
    std::vector<std::string> problems;

    bool passed() const { return simple && bijective && rays_complete && yf_bounded && problems.empty(); }
};

/// Solves every node of the flip graph and checks the bounded edges against
/// the flips and the rays against the hull elements. Throws
/// Error(skeleton_mismatch) when a flip is not an edge of the polyhedron.
SkeletonReport skeleton(const ConstraintSystem& cs, const FlipGraph& g, const PolytopeOptions& opt = {});

/// Independent oracle: every feasible nonsingular basic solution, deduplicated
/// and sorted by coordinates. Throws Error(too_large) above five points.
std::vector<PolytopeVertex> brute_force_vertex_enumeration(const ConstraintSystem& cs,
                                                           const PolytopeOptions& opt = {});

struct Extension {
    PointSet extended;
    /// Indices in `extended` of the added points; the original points keep their indices.
    std::vector<int> added;
    /// For each added point, the points of the original set on its hull edge.
    std::vector<std::vector<int>> carried;
    /// Marks on the added points and edges from each to the points it carries.
    MarkedGraph forced;
};

/// Adds one point outside each hull edge that carries semi-interior points.
/// Throws Error(no_boundary_collinearity).
Extension extend_for_boundary_collinearities(const PointSet& ps);

/// g together with the forced elements, as a graph on the extended set.
MarkedGraph extend_graph(const Extension& ext, const MarkedGraph& g);

struct FaceReport {
    int ambient_dimension = 0;
    int forced_rank = 0;
    /// ambient_dimension - forced_rank.
    int dimension = 0;
    /// Rank of the edge directions inside the face at a solved vertex.
    int dimension_at_vertex = 0;
    PolytopeVertex vertex;
};

/// Realizes the face of the extended polyhedron on which the forced rows are
/// tight, starting from a fully-marked pseudo-triangulation containing them.
FaceReport forced_face(const Extension& ext, const OffsetVector& f, const PolytopeOptions& opt = {});

}  // namespace ptpoly
