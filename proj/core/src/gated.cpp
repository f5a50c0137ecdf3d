#include "mgt/gated.hpp"

#include <stdexcept>

namespace mgt {

std::optional<int> gate(const DistanceMatrix& dm, int y, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("gate: empty set");
    if (y < 0 || y >= dm.n) throw std::invalid_argument("gate: vertex out of range");
    if (s.contains(y)) return y;
    std::optional<int> found;
    for (int x : s) {
        bool ok = true;
        for (int w : s) {
            if (dm(y, x) + dm(x, w) != dm(y, w)) { ok = false; break; }
        }
        if (!ok) continue;
        if (found) throw std::logic_error("gate: two distinct gates found");
        found = x;
    }
    return found;
}

std::optional<int> gate(const Graph& g, int y, VertexSet s) {
    if (!is_connected(g)) throw std::domain_error("gate: graph is disconnected");
    return gate(all_pairs_distances(g), y, s);
}

bool is_gated(const DistanceMatrix& dm, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("is_gated: empty set");
    for (int y = 0; y < dm.n; ++y) {
        if (s.contains(y)) continue;
        if (!gate(dm, y, s)) return false;
    }
    return true;
}

bool is_gated(const Graph& g, VertexSet s) {
    if (!is_connected(g)) throw std::domain_error("is_gated: graph is disconnected");
    return is_gated(all_pairs_distances(g), s);
}

std::optional<std::string> validate_amalgam_structure(const AmalgamSpec& spec) {
    if (spec.iso.empty()) return "shared subgraph is empty";
    VertexSet s1, s2;
    for (auto [a, b] : spec.iso) {
        if (a < 0 || a >= spec.g1.size()) return "iso maps from a vertex outside g1";
        if (b < 0 || b >= spec.g2.size()) return "iso maps to a vertex outside g2";
        if (s1.contains(a)) return "iso is not injective on g1 side";
        if (s2.contains(b)) return "iso is not injective on g2 side";
        s1.add(a);
        s2.add(b);
    }
    for (auto [a, b] : spec.iso)
        for (auto [a2, b2] : spec.iso)
            if (spec.g1.edge(a, a2) != spec.g2.edge(b, b2))
                return "iso is not an isomorphism of the induced subgraphs";
    return std::nullopt;
}

std::optional<std::string> validate_amalgam(const AmalgamSpec& spec) {
    if (auto err = validate_amalgam_structure(spec)) return err;
    VertexSet s1, s2;
    for (auto [a, b] : spec.iso) {
        s1.add(a);
        s2.add(b);
    }
    if (!is_connected(spec.g1) || !is_connected(spec.g2)) return "factor graph is disconnected";
    if (!is_gated(spec.g1, s1)) return "shared set is not gated in g1";
    if (!is_gated(spec.g2, s2)) return "shared set is not gated in g2";
    return std::nullopt;
}

Graph amalgam_graph(const AmalgamSpec& spec) {
    if (auto err = validate_amalgam_structure(spec))
        throw std::invalid_argument("amalgam: " + *err);
    VertexSet s2;
    std::vector<int> map2(static_cast<std::size_t>(spec.g2.size()), -1);
    for (auto [a, b] : spec.iso) {
        map2[static_cast<std::size_t>(b)] = a;
        s2.add(b);
    }
    int next = spec.g1.size();
    for (int b = 0; b < spec.g2.size(); ++b)
        if (!s2.contains(b)) map2[static_cast<std::size_t>(b)] = next++;
    if (next > Graph::kMaxVertices)
        throw std::invalid_argument("amalgam: result exceeds 64 vertices");

    Graph g(next);
    for (auto [u, v] : spec.g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : spec.g2.edges()) {
        const int a = map2[static_cast<std::size_t>(u)], b = map2[static_cast<std::size_t>(v)];
        if (!g.edge(a, b)) g.add_edge(a, b);
    }
    return g;
}

Graph gated_amalgam(const AmalgamSpec& spec) {
    if (auto err = validate_amalgam(spec)) throw std::invalid_argument("gated amalgam: " + *err);
    return amalgam_graph(spec);
}

} // namespace mgt
