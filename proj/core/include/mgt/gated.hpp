#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgt/graph.hpp"

namespace mgt {

/// The unique x in s lying in interval(y,w) for every w in s, or nullopt.
/// For y in s the gate is y itself.  A second distinct gate would contradict
/// the definition and raises std::logic_error.  s must be non-empty and g
/// connected.
std::optional<int> gate(const Graph& g, int y, VertexSet s);
/// Variant reusing precomputed distances (caller guarantees connectivity).
std::optional<int> gate(const DistanceMatrix& dm, int y, VertexSet s);

/// Every vertex outside s has a gate in s.
bool is_gated(const Graph& g, VertexSet s);
bool is_gated(const DistanceMatrix& dm, VertexSet s);

/// Glue recipe for two graphs: iso maps a vertex subset of g1 onto a vertex
/// subset of g2 and must be an isomorphism of the induced subgraphs; both
/// sides must be gated in their hosts.
struct AmalgamSpec {
    Graph g1, g2;
    std::vector<std::pair<int, int>> iso; // (vertex of g1, vertex of g2)
};

/// Structural complaints only (index ranges, bijectivity, induced
/// isomorphism, non-empty overlap); nullopt when well-formed.
std::optional<std::string> validate_amalgam_structure(const AmalgamSpec& spec);

/// Full validation per the AmalgamSpec invariants, including gatedness of
/// both shared sets; nullopt when the spec is a valid gated amalgam.
std::optional<std::string> validate_amalgam(const AmalgamSpec& spec);

/// Pure identification: g1 keeps its vertex indices, the unidentified
/// vertices of g2 are appended in ascending order, no cross edges are added.
/// Only structural validation is applied.
Graph amalgam_graph(const AmalgamSpec& spec);

/// amalgam_graph with gatedness enforced; throws std::invalid_argument
/// naming the failed invariant otherwise.
Graph gated_amalgam(const AmalgamSpec& spec);

} // namespace mgt
