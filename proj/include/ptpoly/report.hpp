#pragma once

#include "ptpoly/flips.hpp"
#include "ptpoly/polytope.hpp"
#include "ptpoly/rigidity.hpp"
#include "ptpoly/stress.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ptpoly {

using Json = nlohmann::ordered_json;

/// {"edges": [[i, j], ...], "marks": [i, ...]}
Json to_json(const MarkedGraph& g);
/// Throws Error(parse_error).
MarkedGraph graph_from_json(const Json& j);

/// {"edges": {"i,j": "a/b"}, "marks": {"j": "a/b"}}; absent entries are 0.
Json to_json(const OffsetVector& f);
/// Throws Error(parse_error).
OffsetVector parse_offsets(std::string_view text);

/// {"nodes": [graph, ...], "adjacency": [[{"target", "kind", "removed", "inserted"}, ...], ...]}
Json to_json(const FlipGraph& g);
FlipGraph flip_graph_from_json(const Json& j);

/// Node labels are node ids, edge labels the flip kind.
std::string to_dot(const FlipGraph& g);

/// Hull edges thick, interior edges thin, marks as filled dots.
std::string to_svg(const PointSet& ps, const MarkedGraph& g);

Json to_json(const ValidityReport& r);

/// Coordinates as decimal strings with `digits` significant digits.
Json to_json(const SkeletonReport& r, int digits = 17);

Json to_json(const std::vector<RigidityRow>& rows);

}  // namespace ptpoly
