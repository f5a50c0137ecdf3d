#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mgt/graph.hpp"

namespace mgt {

enum class Condition { TC, QC, TDC };

std::string_view condition_name(Condition c);

/// Failure evidence for one of the metric conditions.  The recorded vertices
/// satisfy the condition's hypothesis; `missing` describes the completion
/// vertex that does not exist.
struct ConditionWitness {
    Condition kind = Condition::TC;
    int u = -1;        // apex
    int v = -1, w = -1; // base edge (TC/TDC) or equidistant pair (QC)
    int y = -1;        // QC only: common neighbor of v,w one step beyond
    int x = -1, y2 = -1; // TDC only: the uncovered geodesic-neighbor pair
    std::string missing;
};

/// Triangle condition: every apex u and edge vw with
/// 1 = d(v,w) < d(u,v) = d(u,w) has a common neighbor z of v,w with
/// d(u,z) = d(u,v) - 1.  Returns the first failure in scan order, if any.
std::optional<ConditionWitness> check_tc(const Graph& g);
std::optional<ConditionWitness> check_tc(const Graph& g, const DistanceMatrix& dm);

/// Quadrangle condition: for u,v,w,y with d(v,y) = d(w,y) = 1 and
/// 2 = d(v,w) <= d(u,v) = d(u,w) = d(u,y) - 1 there is a common neighbor z
/// of v,w with d(u,z) = d(u,v) - 1.
std::optional<ConditionWitness> check_qc(const Graph& g);
std::optional<ConditionWitness> check_qc(const Graph& g, const DistanceMatrix& dm);

/// Triangle diamond condition.  On top of the TC hypothesis, for EVERY pair
/// (x,y) with x adjacent to v, y adjacent to w and d(u,x) = d(u,y) = d(u,v)-1,
/// some common neighbor z of v,w with d(u,z) = d(u,v)-1 must close both
/// diamonds: z equal or adjacent to x, and equal or adjacent to y; z may
/// depend on the pair.
std::optional<ConditionWitness> check_tdc(const Graph& g);
std::optional<ConditionWitness> check_tdc(const Graph& g, const DistanceMatrix& dm);

bool satisfies_tc(const Graph& g);
bool satisfies_qc(const Graph& g);
bool satisfies_tdc(const Graph& g);

/// Re-checks that the witness hypothesis really holds in g (used to validate
/// reports; the "missing" part is re-established by the check itself).
bool witness_hypothesis_holds(const Graph& g, const ConditionWitness& cw);

} // namespace mgt
