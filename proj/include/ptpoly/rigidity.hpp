#pragma once

#include "ptpoly/marked_graph.hpp"

#include <vector>

namespace ptpoly {

/// Rank of the rigidity matrix of the edges with the three trivial motions
/// pinned, in exact rational arithmetic. At most 2n - 3.
int rigidity_rank(const PointSet& ps, const std::vector<Edge>& edges);

/// Dimension of the space of self-stresses: edges minus rank.
int self_stress_dim(const PointSet& ps, const std::vector<Edge>& edges);

struct RigidityCertificate {
    bool rigid = false;
    int rank = 0;
    /// 2n - 3 - rank.
    int deficit = 0;
    /// Numeric rank of the edge and mark rows of the fully-marked graph in
    /// (v, t) space; 3n - 3 when they form a basis.
    int marked_rank = 0;
};

RigidityCertificate is_inf_rigid_pt(const PointSet& ps, const MarkedGraph& t);

/// Edges incident to pointed vertices `pointed` and non-pointed vertices
/// `non_pointed` number at least 2 |pointed| + 3 |non_pointed|. Throws
/// Error(bad_subset) unless the sets are disjoint, correctly classified in t,
/// and together hold at most n - 2 vertices.
bool incidence_check(const PointSet& ps, const MarkedGraph& t, const std::vector<int>& pointed,
                     const std::vector<int>& non_pointed);

struct IncidenceFailure {
    std::vector<int> pointed;
    std::vector<int> non_pointed;
    int incident = 0;
};

struct IncidenceReport {
    long long subsets = 0;
    bool exhaustive = true;
    std::vector<IncidenceFailure> failures;
};

/// Every subset S of at most n - 2 vertices is incident to at least
/// 2 |S \ heavy| + 3 |S & heavy| edges. Above ten points a fixed-seed random
/// sample of 100000 subsets is checked instead.
IncidenceReport weighted_incidence_check(const PointSet& ps, const std::vector<Edge>& edges,
                                         const std::vector<int>& heavy);

/// The weighted check with the non-pointed vertices of t as the heavy ones.
IncidenceReport incidence_check_all(const PointSet& ps, const MarkedGraph& t);

/// Starts from the edge rows of the (v, t) system and adds mark rows in
/// ascending vertex order whenever they raise the rank. Returns the vertices
/// whose mark was not added. Throws Error(not_rigid) if full rank 3n - 3 is
/// not reached.
std::vector<int> mark_basis(const PointSet& ps, const std::vector<Edge>& edges);

struct RigidityRow {
    MarkedGraph graph;
    int rank = 0;
    bool rigid = false;
    int self_stresses = 0;
    int non_pointed = 0;
    IncidenceReport incidence;
};

/// One row per pseudo-triangulation, in the order given.
std::vector<RigidityRow> rigidity_table(const PointSet& ps, const std::vector<MarkedGraph>& pts);

}  // namespace ptpoly
