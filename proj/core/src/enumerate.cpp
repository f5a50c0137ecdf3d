#include "mgt/enumerate.hpp"

namespace mgt {

std::uint64_t graph_mask_count(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("exhaustive graph enumeration needs 1 <= n <= 7");
    return 1ULL << (n * (n - 1) / 2);
}

std::uint64_t connected_graph_count(int n) {
    std::uint64_t count = 0;
    for_each_connected_graph(n, [&](const Graph&) { ++count; });
    return count;
}

std::uint64_t transit_function_count(int n, TransitConstraints c) {
    std::uint64_t count = 0;
    for_each_transit_function(n, c, [&](const TransitFunction&) { ++count; });
    return count;
}

TransitFunction sampled_transit_function(int n, std::uint64_t seed, std::uint64_t index) {
    TransitFunction r(n);
    std::uint64_t state = mix64(seed ^ mix64(index + 1));
    auto next = [&state] { return state = mix64(state); };
    // per-function density level: 0 keeps most pairs geodesically trivial,
    // higher levels fill in more
    const int level = static_cast<int>(next() % 4);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet val = VertexSet::pair(u, v);
            const std::uint64_t bits = next();
            int at = 0;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                // include w with probability level/8
                if (((bits >> (at * 3)) & 7ULL) < static_cast<std::uint64_t>(level)) val.add(w);
                at++;
            }
            r.set_sym(u, v, val);
        }
    }
    return r;
}

} // namespace mgt
