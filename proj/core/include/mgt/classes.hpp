#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mgt/metric.hpp"
#include "mgt/patterns.hpp"

namespace mgt {

/// Witness that a graph is not bridged: an isometric cycle of length >= 4,
/// listed in cyclic order starting at its smallest vertex.  Searches induced
/// cycles by increasing length up to min(n, 2*diam+1); isometric cycles are
/// induced, so the search is complete.  Returns nullopt iff g is bridged.
std::optional<std::vector<int>> is_bridged_by_cycles(const Graph& g);

/// Bridged via the (C4,C5)-free weakly modular characterization.
bool is_bridged_by_characterization(const Graph& g);

/// Weakly modular with no induced 4-cycle.
bool is_weakly_bridged(const Graph& g);

/// True iff every vertex of the cycle either has its two cycle neighbors
/// adjacent, or admits a strict graph shortcut to some antipode (a cycle
/// vertex at maximum cycle distance).  `cycle` must list a cycle of g.
bool is_well_bridged_cycle(const Graph& g, std::span<const int> cycle);
bool is_well_bridged_cycle(const Graph& g, const DistanceMatrix& dm, std::span<const int> cycle);

/// Visits every cycle of g exactly once (canonical orientation: smallest
/// vertex first, smaller second neighbor first).
void for_each_cycle(const Graph& g, const std::function<void(const std::vector<int>&)>& visit);

/// Membership verdicts with attached evidence for every false flag.
struct ClassificationReport {
    bool modular = false;          // satisfies QC and is bipartite
    bool weakly_modular = false;   // TC and QC
    bool diamond_weakly_modular = false; // QC and TDC
    bool bridged = false;          // no isometric cycle of length >= 4
    bool weakly_bridged = false;   // weakly modular and C4-free

    std::optional<ConditionWitness> tc_witness;
    std::optional<ConditionWitness> qc_witness;
    std::optional<ConditionWitness> tdc_witness;
    std::optional<std::vector<int>> isometric_cycle; // bridged evidence
    std::optional<VertexSet> induced_c4;             // weakly-bridged evidence
    std::optional<std::vector<int>> odd_cycle;       // modular (bipartite) evidence
};

/// Classifies a connected graph; throws std::domain_error otherwise.
ClassificationReport classify(const Graph& g);

} // namespace mgt
