#pragma once

#include "ptpoly/geometry.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ptpoly {

/// An edge or a mark: the unit a flip removes or inserts, and the label of one
/// inequality of the constraint system. Edges order before marks.
struct Element {
    enum class Kind : std::uint8_t { edge, mark };

    Kind kind = Kind::edge;
    int a = 0;
    int b = -1;  // -1 for marks

    static Element edge(Edge e) { return {Kind::edge, e.a, e.b}; }
    static Element edge(int i, int j) { return edge(Edge(i, j)); }
    static Element mark(int v) { return {Kind::mark, v, -1}; }

    bool is_edge() const { return kind == Kind::edge; }
    bool is_mark() const { return kind == Kind::mark; }
    Edge as_edge() const { return Edge(a, b); }
    int vertex() const { return a; }

    friend auto operator<=>(const Element&, const Element&) = default;
    friend bool operator==(const Element&, const Element&) = default;
};

std::string to_string(const Element& e);

/// Geometric graph plus marked vertices, in canonical (sorted, unique) form.
/// The point set is passed alongside rather than stored, so graphs are plain
/// hashable values.
class MarkedGraph {
public:
    MarkedGraph() = default;
    MarkedGraph(std::vector<Edge> edges, std::vector<int> marks);

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& marks() const { return marks_; }

    bool has_edge(Edge e) const;
    bool has_mark(int v) const;
    bool contains(const Element& el) const;
    bool contains(const MarkedGraph& other) const;

    MarkedGraph with(const Element& el) const;
    MarkedGraph without(const Element& el) const;

    /// Edges (sorted) followed by marks (sorted).
    std::vector<Element> elements() const;
    std::size_t element_count() const { return edges_.size() + marks_.size(); }

    friend auto operator<=>(const MarkedGraph&, const MarkedGraph&) = default;
    friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<int> marks_;
};

std::string to_string(const MarkedGraph& g);

struct MarkedGraphHash {
    std::size_t operator()(const MarkedGraph& g) const noexcept;
};

/// Classification of one angular sector at a vertex. Straight sectors (exactly
/// 180 degrees) count as reflex everywhere a corner is being counted.
enum class AngleKind : std::uint8_t { convex, straight, reflex };

struct Corner {
    int vertex = 0;
    AngleKind angle = AngleKind::convex;
};

struct Face {
    /// Boundary cycle, counterclockwise for interior faces. A vertex may appear
    /// more than once in a degenerate face.
    std::vector<Corner> cycle;
    bool outer = false;

    int corner_count() const;
    bool is_simple() const;
};

struct FaceDecomposition {
    std::vector<Face> faces;
    int outer_face = -1;
};

/// Edges and marks not shared by every pseudo-triangulation of the set.
bool is_interior_element(const PointSet& ps, const Element& el);

/// No two edges cross, no edge passes through a point, and every mark sits on
/// a pointed vertex.
bool is_noncrossing(const PointSet& ps, const MarkedGraph& g);
bool edges_noncrossing(const PointSet& ps, const std::vector<Edge>& edges);

/// Extremal: always. Semi-interior: no incident edge enters the interior of the
/// hull. Interior: incident edges span at most 180 degrees.
bool is_pointed(const PointSet& ps, const MarkedGraph& g, int v);
std::vector<int> pointed_vertices(const PointSet& ps, const std::vector<Edge>& edges);

/// Throws Error(crossing_input) if the edges cross and Error(missing_hull) if a
/// hull edge is absent.
FaceDecomposition face_decomposition(const PointSet& ps, const MarkedGraph& g);

/// Interior face that is a simple polygon with exactly three convex corners.
bool is_pseudo_triangle(const Face& face);

/// Marks are ignored.
bool is_pseudo_triangulation(const PointSet& ps, const MarkedGraph& g);

/// Pseudo-triangulation marked at exactly its pointed vertices.
bool is_fmpt(const PointSet& ps, const MarkedGraph& g);

/// The edge set with marks at all pointed vertices.
MarkedGraph fully_marked(const PointSet& ps, std::vector<Edge> edges);

/// All hull edges with marks at the extremal points.
MarkedGraph hull_graph(const PointSet& ps);

/// Extends a non-crossing marked graph to a fully-marked pseudo-triangulation
/// without making any pointed vertex non-pointed. Hull edges are added first.
/// Candidate edges are tried once each in lexicographic order; an edge is kept
/// when it crosses nothing and leaves every originally pointed vertex pointed.
/// Throws Error(crossing_input).
MarkedGraph complete_to_fmpt(const PointSet& ps, const MarkedGraph& g);

struct ElementCounts {
    int edges = 0;
    int marks = 0;
    int interior_edges = 0;
    int interior_marks = 0;
};

ElementCounts count_elements(const PointSet& ps, const MarkedGraph& g);

/// Number of straight (exactly 180 degree) sectors at v between consecutive edges.
int straight_angle_count(const PointSet& ps, const MarkedGraph& g, int v);

/// Number of vertices that are not pointed.
int non_pointed_count(const PointSet& ps, const MarkedGraph& g);

}  // namespace ptpoly

template <>
struct std::hash<ptpoly::MarkedGraph> : ptpoly::MarkedGraphHash {};
