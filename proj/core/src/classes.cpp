#include "mgt/classes.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mgt {

namespace {

bool cycle_is_isometric(const DistanceMatrix& dm, const std::vector<int>& cyc) {
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int dc = std::min(j - i, k - (j - i));
            if (dm(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>(j)]) != dc) return false;
        }
    return true;
}

// DFS over induced paths: start is the smallest cycle vertex, second vertex
// smaller than the closing vertex to fix orientation.
bool find_isometric_cycle_of_length(const Graph& g, const DistanceMatrix& dm, int target,
                                    std::vector<int>& path, VertexSet used, VertexSet blocked,
                                    std::vector<int>& out) {
    const int depth = static_cast<int>(path.size());
    const int start = path[0];
    const int tail = path.back();
    if (depth == target - 1) {
        for (int w : g.neighbors(tail)) {
            if (w <= start || used.contains(w)) continue;
            if (!g.edge(w, start)) continue;
            if (!(g.neighbors(w) & (blocked - VertexSet::singleton(start))).empty()) continue;
            if (w < path[1]) continue; // orientation dedup
            path.push_back(w);
            if (cycle_is_isometric(dm, path)) {
                out = path;
                return true;
            }
            path.pop_back();
        }
        return false;
    }
    for (int w : g.neighbors(tail)) {
        if (w <= start || used.contains(w)) continue;
        if (!(g.neighbors(w) & blocked).empty()) continue; // chord to a non-tail path vertex
        path.push_back(w);
        if (find_isometric_cycle_of_length(g, dm, target, path, used | VertexSet::singleton(w),
                                           blocked | VertexSet::singleton(tail), out))
            return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> is_bridged_by_cycles(const Graph& g) {
    const int n = g.size();
    if (n < 4) return std::nullopt;
    const DistanceMatrix dm = all_pairs_distances(g);
    const int bound = std::min(n, 2 * diameter(dm) + 1);
    for (int len = 4; len <= bound; ++len) {
        for (int s = 0; s + len <= n; ++s) {
            std::vector<int> path = {s};
            std::vector<int> out;
            if (find_isometric_cycle_of_length(g, dm, len, path, VertexSet::singleton(s),
                                               VertexSet{}, out))
                return out;
        }
    }
    return std::nullopt;
}

bool is_bridged_by_characterization(const Graph& g) {
    if (has_induced(g, Pattern::C4) || has_induced(g, Pattern::C5)) return false;
    const DistanceMatrix dm = all_pairs_distances(g);
    return !check_tc(g, dm).has_value() && !check_qc(g, dm).has_value();
}

bool is_weakly_bridged(const Graph& g) {
    if (has_induced(g, Pattern::C4)) return false;
    const DistanceMatrix dm = all_pairs_distances(g);
    return !check_tc(g, dm).has_value() && !check_qc(g, dm).has_value();
}

bool is_well_bridged_cycle(const Graph& g, std::span<const int> cycle) {
    return is_well_bridged_cycle(g, all_pairs_distances(g), cycle);
}

bool is_well_bridged_cycle(const Graph& g, const DistanceMatrix& dm, std::span<const int> cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3) throw std::invalid_argument("cycle must have at least 3 vertices");
    VertexSet seen;
    for (int i = 0; i < k; ++i) {
        const int a = cycle[static_cast<std::size_t>(i)];
        const int b = cycle[static_cast<std::size_t>((i + 1) % k)];
        if (a < 0 || a >= g.size() || seen.contains(a))
            throw std::invalid_argument("input is not a cycle: bad or repeated vertex");
        seen.add(a);
        if (!g.edge(a, b)) throw std::invalid_argument("input is not a cycle: missing edge");
    }
    const int maxdc = k / 2;
    for (int i = 0; i < k; ++i) {
        const int v = cycle[static_cast<std::size_t>(i)];
        const int prev = cycle[static_cast<std::size_t>((i + k - 1) % k)];
        const int next = cycle[static_cast<std::size_t>((i + 1) % k)];
        if (g.edge(prev, next)) continue;
        bool shortcut = false;
        for (int j = 0; j < k && !shortcut; ++j) {
            const int dc = std::min(std::abs(j - i), k - std::abs(j - i));
            if (dc != maxdc) continue; // antipodes only
            if (dm(v, cycle[static_cast<std::size_t>(j)]) < dc) shortcut = true;
        }
        if (!shortcut) return false;
    }
    return true;
}

namespace {

void cycle_dfs(const Graph& g, std::vector<int>& path, VertexSet used,
               const std::function<void(const std::vector<int>&)>& visit) {
    const int start = path[0];
    const int tail = path.back();
    for (int w : g.neighbors(tail)) {
        if (w == start && path.size() >= 3) {
            if (path[1] < tail) visit(path); // orientation dedup
            continue;
        }
        if (w <= start || used.contains(w)) continue;
        path.push_back(w);
        cycle_dfs(g, path, used | VertexSet::singleton(w), visit);
        path.pop_back();
    }
}

} // namespace

void for_each_cycle(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path = {s};
        cycle_dfs(g, path, VertexSet::singleton(s), visit);
    }
}

ClassificationReport classify(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("classify: graph is disconnected");
    const DistanceMatrix dm = all_pairs_distances(g);

    ClassificationReport r;
    r.tc_witness = check_tc(g, dm);
    r.qc_witness = check_qc(g, dm);
    r.tdc_witness = check_tdc(g, dm);
    r.odd_cycle = find_odd_cycle(g);
    r.isometric_cycle = is_bridged_by_cycles(g);
    r.induced_c4 = has_induced(g, Pattern::C4);

    const bool qc = !r.qc_witness.has_value();
    const bool tc = !r.tc_witness.has_value();
    const bool tdc = !r.tdc_witness.has_value();
    r.modular = qc && !r.odd_cycle.has_value();
    r.weakly_modular = tc && qc;
    r.diamond_weakly_modular = qc && tdc;
    r.bridged = !r.isometric_cycle.has_value();
    r.weakly_bridged = r.weakly_modular && !r.induced_c4.has_value();

    assert(!r.modular || r.weakly_modular);
    assert(!r.bridged || r.weakly_bridged);
    assert(!r.weakly_bridged || r.diamond_weakly_modular);
    assert(!r.diamond_weakly_modular || r.weakly_modular);
    return r;
}

} // namespace mgt
