#pragma once

#include "ptpoly/marked_graph.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace ptpoly {

enum class FlipKind : std::uint8_t { diagonal, deletion, insertion, mirror };

std::string_view to_string(FlipKind kind);

struct Flip {
    Element removed;
    Element inserted;
    FlipKind kind = FlipKind::diagonal;
};

struct FlipResult {
    Flip flip;
    MarkedGraph result;
};

/// Removes an interior edge or mark of a fully-marked pseudo-triangulation and
/// inserts the unique other element that restores one. The reference
/// implementation scans every candidate insertion.
/// Throws Error(boundary_element) or Error(not_fmpt).
FlipResult flip(const PointSet& ps, const MarkedGraph& t, const Element& removed);

/// One flip per interior element, in element order.
std::vector<FlipResult> all_flips(const PointSet& ps, const MarkedGraph& t);

struct FlipEdge {
    Flip flip;
    int target = -1;
};

struct FlipGraph {
    std::vector<MarkedGraph> nodes;
    std::vector<std::vector<FlipEdge>> adjacency;

    std::size_t size() const { return nodes.size(); }
    std::size_t edge_count() const;
    /// -1 when absent.
    int find(const MarkedGraph& g) const;
    bool adjacent(int u, int w) const;
};

/// Worker count from PTPOLY_THREADS, defaulting to 1.
unsigned default_thread_count();

/// Breadth-first closure under flips, seeded with the completion of the hull.
/// Node numbering is the order of first discovery with neighbors expanded in
/// element order, whatever the thread count.
FlipGraph enumerate_flip_graph(const PointSet& ps, unsigned threads = 0);

/// Independent oracle: every non-crossing edge set containing the hull that is
/// a pseudo-triangulation, fully marked. Sorted. Throws Error(too_large) when
/// the set has more than `bound` points.
std::vector<MarkedGraph> brute_force_fmpts(const PointSet& ps, int bound = 7);

}  // namespace ptpoly
