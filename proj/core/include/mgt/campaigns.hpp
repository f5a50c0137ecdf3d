#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mgt/enumerate.hpp"
#include "mgt/json_io.hpp"

namespace mgt {

/// Resource limits and universes for one verification campaign.
struct Budget {
    int graph_max_n = 6;              // exhaustive labeled graphs 1..graph_max_n
    int transit_exhaustive_n = 4;     // exhaustive symmetric t1/t3 functions
    std::vector<int> sample_ns = {5, 6};
    std::uint64_t samples_per_n = 20000;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;                  // 0 = hardware concurrency
    std::size_t max_recorded_violations = 200;
    /// When non-empty, replaces the exhaustive graph universe (e.g. a
    /// canonical graph6 stream); no vertex-count cap beyond 64.
    std::vector<Graph> external_graphs;
};

struct CampaignReport {
    std::string theorem;
    json universe;
    std::vector<json> violations;       // first max_recorded_violations, in universe order
    std::uint64_t violation_count = 0;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// Campaign ids, in catalog order.
const std::vector<std::string>& theorem_catalog();
bool is_known_theorem(std::string_view id);
std::string_view theorem_description(std::string_view id);

/// Runs one campaign.  Throws std::invalid_argument for unknown ids.
/// Reports are deterministic for identical budgets and seeds, except for
/// elapsed_ms.
CampaignReport verify_theorem(std::string_view id, const Budget& budget = {});

/// Re-checks one serialized violation in isolation.
bool replay_violation(std::string_view id, const json& violation);

/// Replaces every graph-kind violation with one on a vertex-deletion-minimal
/// connected induced subgraph that still violates; other kinds unchanged.
CampaignReport minimize_counterexample(const CampaignReport& report);

json to_json(const CampaignReport& report);

} // namespace mgt
