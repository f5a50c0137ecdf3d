#include "mgt/metric.hpp"

namespace mgt {

std::string_view condition_name(Condition c) {
    switch (c) {
        case Condition::TC: return "TC";
        case Condition::QC: return "QC";
        case Condition::TDC: return "TDC";
    }
    return "?";
}

namespace {

// vertices at the given distance from u
VertexSet sphere(const DistanceMatrix& dm, int u, int r) {
    VertexSet s;
    for (int v = 0; v < dm.n; ++v)
        if (dm(u, v) == r) s.add(v);
    return s;
}

} // namespace

std::optional<ConditionWitness> check_tc(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int k = dm(u, v);
            if (k < 2) continue;
            for (int w : g.neighbors(v)) {
                if (w < v || dm(u, w) != k) continue;
                const VertexSet z = g.neighbors(v) & g.neighbors(w) & sphere(dm, u, k - 1);
                if (z.empty()) {
                    ConditionWitness cw;
                    cw.kind = Condition::TC;
                    cw.u = u;
                    cw.v = v;
                    cw.w = w;
                    cw.missing = "no common neighbor z of " + std::to_string(v) + "," +
                                 std::to_string(w) + " with d(" + std::to_string(u) +
                                 ",z)=" + std::to_string(k - 1);
                    return cw;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ConditionWitness> check_qc(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int y = 0; y < n; ++y) {
            const int duy = dm(u, y);
            if (duy < 3) continue;
            for (int v : g.neighbors(y)) {
                if (dm(u, v) != duy - 1) continue;
                for (int w : g.neighbors(y)) {
                    if (w <= v || dm(u, w) != duy - 1 || dm(v, w) != 2) continue;
                    const VertexSet z = g.neighbors(v) & g.neighbors(w) & sphere(dm, u, duy - 2);
                    if (z.empty()) {
                        ConditionWitness cw;
                        cw.kind = Condition::QC;
                        cw.u = u;
                        cw.v = v;
                        cw.w = w;
                        cw.y = y;
                        cw.missing = "no common neighbor z of " + std::to_string(v) + "," +
                                     std::to_string(w) + " with d(" + std::to_string(u) +
                                     ",z)=" + std::to_string(duy - 2);
                        return cw;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ConditionWitness> check_tdc(const Graph& g, const DistanceMatrix& dm) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int k = dm(u, v);
            if (k < 2) continue;
            for (int w : g.neighbors(v)) {
                if (w < v || dm(u, w) != k) continue;
                const VertexSet down = sphere(dm, u, k - 1);
                const VertexSet zs = g.neighbors(v) & g.neighbors(w) & down;
                const VertexSet xs = g.neighbors(v) & down;
                const VertexSet ys = g.neighbors(w) & down;
                for (int x : xs) {
                    for (int y : ys) {
                        bool covered = false;
                        for (int z : zs) {
                            if ((z == x || g.edge(z, x)) && (z == y || g.edge(z, y))) {
                                covered = true;
                                break;
                            }
                        }
                        if (!covered) {
                            ConditionWitness cw;
                            cw.kind = Condition::TDC;
                            cw.u = u;
                            cw.v = v;
                            cw.w = w;
                            cw.x = x;
                            cw.y2 = y;
                            cw.missing = "no common neighbor z of " + std::to_string(v) + "," +
                                         std::to_string(w) + " at d(" + std::to_string(u) +
                                         ",z)=" + std::to_string(k - 1) + " closing diamonds with " +
                                         std::to_string(x) + " and " + std::to_string(y);
                            return cw;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ConditionWitness> check_tc(const Graph& g) { return check_tc(g, all_pairs_distances(g)); }
std::optional<ConditionWitness> check_qc(const Graph& g) { return check_qc(g, all_pairs_distances(g)); }
std::optional<ConditionWitness> check_tdc(const Graph& g) { return check_tdc(g, all_pairs_distances(g)); }

bool satisfies_tc(const Graph& g) { return !check_tc(g).has_value(); }
bool satisfies_qc(const Graph& g) { return !check_qc(g).has_value(); }
bool satisfies_tdc(const Graph& g) { return !check_tdc(g).has_value(); }

bool witness_hypothesis_holds(const Graph& g, const ConditionWitness& cw) {
    const DistanceMatrix dm = all_pairs_distances(g);
    switch (cw.kind) {
        case Condition::TC:
            return g.edge(cw.v, cw.w) && dm(cw.u, cw.v) == dm(cw.u, cw.w) && dm(cw.u, cw.v) >= 2;
        case Condition::QC:
            return g.edge(cw.v, cw.y) && g.edge(cw.w, cw.y) && dm(cw.v, cw.w) == 2 &&
                   dm(cw.u, cw.v) == dm(cw.u, cw.w) && dm(cw.u, cw.v) >= 2 &&
                   dm(cw.u, cw.y) == dm(cw.u, cw.v) + 1;
        case Condition::TDC: {
            const int k = dm(cw.u, cw.v);
            return g.edge(cw.v, cw.w) && k >= 2 && dm(cw.u, cw.w) == k && g.edge(cw.x, cw.v) &&
                   g.edge(cw.y2, cw.w) && dm(cw.u, cw.x) == k - 1 && dm(cw.u, cw.y2) == k - 1;
        }
    }
    return false;
}

} // namespace mgt
