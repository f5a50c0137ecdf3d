#include "mgt/patterns.hpp"

#include <algorithm>
#include <array>

namespace mgt {

std::string_view pattern_name(Pattern p) {
    switch (p) {
        case Pattern::C4: return "C4";
        case Pattern::C5: return "C5";
        case Pattern::House: return "house";
        case Pattern::W4Minus: return "W4-";
        case Pattern::Diamond: return "diamond";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    if (name == "C4" || name == "c4") return Pattern::C4;
    if (name == "C5" || name == "c5") return Pattern::C5;
    if (name == "house" || name == "HOUSE") return Pattern::House;
    if (name == "W4-" || name == "w4-" || name == "W4_MINUS" || name == "w4minus") return Pattern::W4Minus;
    if (name == "diamond" || name == "DIAMOND") return Pattern::Diamond;
    return std::nullopt;
}

const Graph& pattern_graph(Pattern p) {
    static const Graph c4 = make_cycle(4);
    static const Graph c5 = make_cycle(5);
    static const Graph house = [] {
        Graph g = make_cycle(5);
        g.add_edge(1, 3); // chord closing the triangle 1-2-3
        return g;
    }();
    static const Graph w4minus = [] {
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        for (int i = 0; i < 4; ++i) g.add_edge(i, 4); // hub
        return g;
    }();
    static const Graph diamond = [] {
        Graph g = make_complete(4);
        Graph h(4);
        for (auto [u, v] : g.edges())
            if (!(u == 2 && v == 3)) h.add_edge(u, v);
        return h;
    }();
    switch (p) {
        case Pattern::C4: return c4;
        case Pattern::C5: return c5;
        case Pattern::House: return house;
        case Pattern::W4Minus: return w4minus;
        case Pattern::Diamond: return diamond;
    }
    return c4;
}

namespace {

bool isomorphic_small(const Graph& a, const Graph& b) {
    const int n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return false;
    std::array<int, 8> da{}, db{};
    for (int v = 0; v < n; ++v) {
        da[static_cast<std::size_t>(v)] = a.degree(v);
        db[static_cast<std::size_t>(v)] = b.degree(v);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.begin() + n);
    std::sort(sb.begin(), sb.begin() + n);
    if (sa != sb) return false;

    std::array<int, 8> perm{};
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (da[static_cast<std::size_t>(u)] != db[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]) { ok = false; break; }
            for (int v = u + 1; v < n && ok; ++v)
                if (a.edge(u, v) != b.edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return false;
}

// visit k-subsets of 0..n-1 in lexicographic order of their sorted members
template <class F>
bool for_each_subset(int n, int k, F&& visit) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

bool induced_matches(const Graph& g, VertexSet s, Pattern p) {
    const Graph& pat = pattern_graph(p);
    if (s.size() != pat.size()) return false;
    return isomorphic_small(g.induced(s), pat);
}

std::optional<VertexSet> has_induced(const Graph& g, Pattern p) {
    const Graph& pat = pattern_graph(p);
    const int k = pat.size();
    std::optional<VertexSet> found;
    for_each_subset(g.size(), k, [&](const std::vector<int>& idx) {
        VertexSet s;
        for (int v : idx) s.add(v);
        if (induced_matches(g, s, p)) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

bool dominated_five_cycle_check(const Graph& g) {
    const int n = g.size();
    bool ok = true;
    for_each_subset(n, 5, [&](const std::vector<int>& idx) {
        VertexSet s;
        for (int v : idx) s.add(v);
        if (!induced_matches(g, s, Pattern::C5) && !induced_matches(g, s, Pattern::House) &&
            !induced_matches(g, s, Pattern::W4Minus))
            return false;
        for (int z = 0; z < n; ++z) {
            if ((s - VertexSet::singleton(z)).subset_of(g.neighbors(z))) return false; // dominated
        }
        ok = false;
        return true; // undominated occurrence: stop
    });
    return ok;
}

} // namespace mgt
