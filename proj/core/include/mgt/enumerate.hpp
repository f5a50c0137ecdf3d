#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "mgt/graph.hpp"
#include "mgt/transit.hpp"

namespace mgt {

/// splitmix64; used to derive independent per-item seeds so that sampled
/// streams are identical regardless of how work is partitioned.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t kDefaultSeed = 0x6d67743031ULL;

/// Every connected labeled graph on n vertices exactly once, in increasing
/// order of the upper-triangle edge mask.  Exhaustive enumeration is capped
/// at n = 7 (2^21 candidate masks).
template <class F>
void for_each_connected_graph(int n, F&& visit) {
    if (n < 1 || n > 7) throw std::invalid_argument("exhaustive graph enumeration needs 1 <= n <= 7");
    const int nbits = n * (n - 1) / 2;
    const std::uint64_t total = 1ULL << nbits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        if (is_connected(g)) visit(g);
    }
}

/// Subrange variant used by parallel campaign drivers; visits connected
/// graphs whose mask lies in [mask_begin, mask_end).
template <class F>
void for_each_connected_graph_in(int n, std::uint64_t mask_begin, std::uint64_t mask_end, F&& visit) {
    for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
        Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        if (is_connected(g)) visit(g);
    }
}

std::uint64_t graph_mask_count(int n); // 2^(n(n-1)/2), n <= 7
std::uint64_t connected_graph_count(int n);

/// Which of the defining axioms the enumerated universe must satisfy.
/// Symmetry (t2) is always enforced: the ordered-pair universe is not
/// enumerable even at n = 4.
struct TransitConstraints {
    bool t1 = true; // pair values contain their endpoints
    bool t3 = true; // diagonal values are singletons
};

/// Exhaustive symmetric enumeration, capped at n = 4 (4^6 = 4096 functions
/// under t1 and t3).  Streams each function exactly once; the object passed
/// to the callback is reused between calls.
template <class F>
void for_each_transit_function(int n, TransitConstraints c, F&& visit) {
    if (n < 1 || n > 4) throw std::invalid_argument("exhaustive transit enumeration needs 1 <= n <= 4");
    struct Slot { int u, v; std::vector<VertexSet> choices; };
    std::vector<Slot> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            Slot s{u, v, {}};
            if (u == v) {
                if (c.t3) continue; // pinned to {u}
                const VertexSet must = c.t1 ? VertexSet::singleton(u) : VertexSet{};
                const VertexSet free = VertexSet::universe(n) - must;
                for (std::uint64_t m = 0;; ++m) {
                    VertexSet val = must;
                    std::uint64_t rest = m;
                    for (int w : free) {
                        if (rest & 1) val.add(w);
                        rest >>= 1;
                    }
                    s.choices.push_back(val);
                    if (m + 1 == (1ULL << free.size())) break;
                }
            } else {
                const VertexSet must = c.t1 ? VertexSet::pair(u, v) : VertexSet{};
                const VertexSet free = VertexSet::universe(n) - must;
                for (std::uint64_t m = 0; m < (1ULL << free.size()); ++m) {
                    VertexSet val = must;
                    std::uint64_t rest = m;
                    for (int w : free) {
                        if (rest & 1) val.add(w);
                        rest >>= 1;
                    }
                    s.choices.push_back(val);
                }
            }
            slots.push_back(std::move(s));
        }

    TransitFunction r(n);
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < slots.size(); ++i)
            r.set_sym(slots[i].u, slots[i].v, slots[i].choices[pick[i]]);
        visit(const_cast<const TransitFunction&>(r));
        std::size_t pos = slots.size();
        while (pos > 0 && pick[pos - 1] + 1 == slots[pos - 1].choices.size()) pick[--pos] = 0;
        if (pos == 0) break;
        ++pick[pos - 1];
    }
}

std::uint64_t transit_function_count(int n, TransitConstraints c);

/// Builds the index-th sampled symmetric t1/t2/t3 function on n points.
/// Deterministic in (seed, index); pair densities are mixed so both sparse,
/// near-geodesic tables and dense ones appear.
TransitFunction sampled_transit_function(int n, std::uint64_t seed, std::uint64_t index);

/// count seeded samples; n capped at 6 per the verification scope.
template <class F>
void sample_transit_functions(int n, std::uint64_t count, std::uint64_t seed, F&& visit) {
    if (n < 2 || n > 6) throw std::invalid_argument("transit sampling needs 2 <= n <= 6");
    for (std::uint64_t i = 0; i < count; ++i) visit(sampled_transit_function(n, seed, i));
}

} // namespace mgt
