#pragma once

#include <optional>
#include <string_view>

#include "mgt/graph.hpp"

namespace mgt {

/// Fixed catalog of small induced-subgraph patterns.
enum class Pattern { C4, C5, House, W4Minus, Diamond };

std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);

/// Reference copy of the pattern.  House is a 5-cycle with one chord closing
/// a triangle; W4Minus is the 4-wheel with one rim edge removed; Diamond is
/// K4 minus an edge.
const Graph& pattern_graph(Pattern p);

/// True when the subgraph of g induced by s is isomorphic to the pattern.
bool induced_matches(const Graph& g, VertexSet s, Pattern p);

/// First vertex set (in subset order) inducing the pattern, scanning all
/// |pattern|-element subsets exhaustively.
std::optional<VertexSet> has_induced(const Graph& g, Pattern p);

/// Every induced C5, house, and W4Minus occurrence has a dominating vertex:
/// some z with all occurrence vertices other than z itself adjacent to z.
/// (The hub of a W4Minus occurrence qualifies for its own occurrence.)
bool dominated_five_cycle_check(const Graph& g);

} // namespace mgt
