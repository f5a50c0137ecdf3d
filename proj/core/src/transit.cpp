#include "mgt/transit.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace mgt {

TransitFunction::TransitFunction(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("transit function ground set must have 0..64 elements");
    n_ = n;
    table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), VertexSet{});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
                VertexSet::pair(u, v);
}

void TransitFunction::set(int u, int v, VertexSet s) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("transit function index out of range");
    if (!s.subset_of(VertexSet::universe(n_)))
        throw std::invalid_argument("transit function value leaves the ground set");
    table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = s;
}

void TransitFunction::set_sym(int u, int v, VertexSet s) {
    set(u, v, s);
    set(v, u, s);
}

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::t1: return "t1";
        case Axiom::t2: return "t2";
        case Axiom::t3: return "t3";
        case Axiom::b1: return "b1";
        case Axiom::b2: return "b2";
        case Axiom::b3: return "b3";
        case Axiom::b4: return "b4";
        case Axiom::J0: return "J0";
        case Axiom::J0p: return "J0p";
        case Axiom::ta: return "ta";
        case Axiom::s1: return "s1";
        case Axiom::s2: return "s2";
        case Axiom::br: return "br";
        case Axiom::brp: return "brp";
        case Axiom::IB1: return "IB1";
        case Axiom::IB2: return "IB2";
        case Axiom::IB3: return "IB3";
        case Axiom::IB4: return "IB4";
        case Axiom::IB5: return "IB5";
        case Axiom::IB6: return "IB6";
        case Axiom::IB7: return "IB7";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view s) {
    for (Axiom a : kAllAxioms)
        if (s == axiom_name(a)) return a;
    if (s == "J0'" || s == "j0p" || s == "j0'") return Axiom::J0p;
    if (s == "br'") return Axiom::brp;
    if (s == "j0") return Axiom::J0;
    for (Axiom a : {Axiom::IB1, Axiom::IB2, Axiom::IB3, Axiom::IB4, Axiom::IB5, Axiom::IB6, Axiom::IB7}) {
        std::string lower = "ib";
        lower += axiom_name(a).substr(2);
        if (s == lower) return a;
    }
    return std::nullopt;
}

std::vector<std::string_view> axiom_witness_roles(Axiom a) {
    switch (a) {
        case Axiom::t1: case Axiom::t2: case Axiom::IB1: return {"u", "v"};
        case Axiom::t3: return {"u"};
        case Axiom::IB3: return {"u", "x"};
        case Axiom::b1: case Axiom::b4: return {"u", "v", "x"};
        case Axiom::IB2: return {"u", "v", "x"};
        case Axiom::ta: return {"u", "v", "w"};
        case Axiom::b2: case Axiom::b3: return {"u", "v", "x", "y"};
        case Axiom::J0: case Axiom::J0p: return {"u", "x", "y", "v"};
        case Axiom::s1: case Axiom::s2: case Axiom::IB6: case Axiom::IB7: return {"u", "u'", "v", "v'"};
        case Axiom::IB4: case Axiom::IB5: return {"u", "v", "w", "x"};
        case Axiom::br: return {"u", "v", "x", "y", "z"};
        case Axiom::brp: return {"u", "v", "x", "z"};
    }
    return {};
}

namespace {

inline bool is_pair(const TransitFunction& r, int a, int b) {
    return r.at(a, b) == VertexSet::pair(a, b);
}

// the edge atoms of s1/s2 (and their relation forms): u,ubar is an edge of
// the underlying graph, so the endpoints are distinct
inline bool is_edge_pair(const TransitFunction& r, int a, int b) {
    return a != b && r.at(a, b) == VertexSet::pair(a, b);
}

// One axiom body at one instantiation; shared by the scanners and by
// axiom_violated_at so every reported witness replays through the same code.
inline bool violated(const TransitFunction& r, Axiom a, const int* t) {
    switch (a) {
        case Axiom::t1:
            return !r.at(t[0], t[1]).contains(t[0]);
        case Axiom::t2:
            return !(r.at(t[0], t[1]) == r.at(t[1], t[0]));
        case Axiom::t3:
            return !(r.at(t[0], t[0]) == VertexSet::singleton(t[0]));
        case Axiom::b1:
            return r.at(t[0], t[1]).contains(t[2]) && t[2] != t[1] && r.at(t[0], t[2]).contains(t[1]);
        case Axiom::b2:
            return r.at(t[0], t[1]).contains(t[2]) && r.at(t[0], t[2]).contains(t[3]) &&
                   !r.at(t[0], t[1]).contains(t[3]);
        case Axiom::b3:
            return r.at(t[0], t[1]).contains(t[2]) && r.at(t[0], t[2]).contains(t[3]) &&
                   !r.at(t[3], t[1]).contains(t[2]);
        case Axiom::b4:
            return r.at(t[0], t[1]).contains(t[2]) &&
                   !((r.at(t[0], t[2]) & r.at(t[2], t[1])) == VertexSet::singleton(t[2]));
        case Axiom::J0: {
            const int u = t[0], x = t[1], y = t[2], v = t[3];
            return r.at(u, y).contains(x) && r.at(x, v).contains(y) && !r.at(u, v).contains(x);
        }
        case Axiom::J0p: {
            const int u = t[0], x = t[1], y = t[2], v = t[3];
            if (!r.at(u, y).contains(x) || !r.at(x, v).contains(y)) return false;
            const VertexSet inter = r.at(u, y) & r.at(x, v);
            VertexSet four = VertexSet::pair(u, x) | VertexSet::pair(y, v);
            if (!inter.strict_subset_of(four)) return false;
            return !r.at(u, v).contains(x);
        }
        case Axiom::ta: {
            const int u = t[0], v = t[1], w = t[2];
            return (r.at(u, v) & r.at(u, w)) == VertexSet::singleton(u) &&
                   (r.at(u, v) & r.at(v, w)) == VertexSet::singleton(v) &&
                   (r.at(u, w) & r.at(v, w)) == VertexSet::singleton(w) && is_pair(r, u, v) &&
                   !(is_pair(r, u, w) && is_pair(r, v, w));
        }
        case Axiom::s1: case Axiom::IB6: {
            const int u = t[0], ub = t[1], v = t[2], vb = t[3];
            return is_edge_pair(r, u, ub) && is_edge_pair(r, v, vb) && r.at(ub, vb).contains(u) &&
                   r.at(u, v).contains(ub) && r.at(u, v).contains(vb) && !r.at(ub, vb).contains(v);
        }
        case Axiom::s2: case Axiom::IB7: {
            const int u = t[0], ub = t[1], v = t[2], vb = t[3];
            return is_edge_pair(r, u, ub) && is_edge_pair(r, v, vb) && r.at(u, v).contains(ub) &&
                   !r.at(ub, vb).contains(v) && !r.at(u, v).contains(vb) && !r.at(u, vb).contains(ub);
        }
        case Axiom::br: {
            const int u = t[0], v = t[1], x = t[2], y = t[3], z = t[4];
            return is_pair(r, x, y) && is_pair(r, x, u) && is_pair(r, v, y) &&
                   r.at(u, v).contains(z) && !is_pair(r, x, z) && !is_pair(r, y, z);
        }
        case Axiom::brp: {
            const int u = t[0], v = t[1], x = t[2], z = t[3];
            return is_pair(r, u, x) && is_pair(r, x, v) && r.at(u, v).contains(z) && !is_pair(r, x, z);
        }
        case Axiom::IB1:
            return !r.at(t[0], t[1]).contains(t[0]);
        case Axiom::IB2:
            return r.at(t[0], t[1]).contains(t[2]) && !r.at(t[1], t[0]).contains(t[2]);
        case Axiom::IB3:
            return r.at(t[0], t[0]).contains(t[1]) && t[1] != t[0];
        case Axiom::IB4:
            return r.at(t[0], t[1]).contains(t[2]) && r.at(t[0], t[2]).contains(t[3]) &&
                   !r.at(t[0], t[1]).contains(t[3]);
        case Axiom::IB5: {
            const int u = t[0], v = t[1], w = t[2], x = t[3];
            return r.at(u, x).contains(v) && r.at(u, x).contains(w) && r.at(u, w).contains(v) &&
                   !r.at(v, x).contains(w);
        }
    }
    return false;
}

constexpr bool axiom_is_distinct4(Axiom a) { return a == Axiom::J0 || a == Axiom::J0p; }

int axiom_arity(Axiom a) { return static_cast<int>(axiom_witness_roles(a).size()); }

} // namespace

bool axiom_violated_at(const TransitFunction& r, Axiom a, std::span<const int> tuple) {
    if (static_cast<int>(tuple.size()) != axiom_arity(a)) return false;
    if (axiom_is_distinct4(a)) {
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j)
                if (tuple[i] == tuple[j]) return false;
    }
    return violated(r, a, tuple.data());
}

AxiomReport check_axiom(const TransitFunction& r, Axiom a) {
    AxiomReport rep;
    rep.axiom = a;
    const int n = r.size();
    if (n == 0) return rep;
    const int arity = axiom_arity(a);
    int t[5] = {0, 0, 0, 0, 0};

    // odometer over n^arity tuples in lexicographic order
    const bool distinct = axiom_is_distinct4(a);
    while (true) {
        bool skip = false;
        if (distinct) {
            for (int i = 0; i < arity && !skip; ++i)
                for (int j = i + 1; j < arity && !skip; ++j)
                    if (t[i] == t[j]) skip = true;
        }
        if (!skip && violated(r, a, t)) {
            rep.holds = false;
            rep.witness.assign(t, t + arity);
            return rep;
        }
        int pos = arity - 1;
        while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    rep.holds = true;
    return rep;
}

bool axiom_holds(const TransitFunction& r, Axiom a) { return check_axiom(r, a).holds; }

Graph underlying_graph(const TransitFunction& r) {
    Graph g(r.size());
    for (int u = 0; u < r.size(); ++u)
        for (int v = u + 1; v < r.size(); ++v)
            if (is_pair(r, u, v) && is_pair(r, v, u)) g.add_edge(u, v);
    return g;
}

TransitFunction interval_function(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("interval_function: graph is disconnected");
    const DistanceMatrix dm = all_pairs_distances(g);
    TransitFunction r(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u; v < g.size(); ++v) r.set_sym(u, v, interval(dm, u, v));
    assert(axiom_holds(r, Axiom::t1) && axiom_holds(r, Axiom::t2) && axiom_holds(r, Axiom::t3));
    return r;
}

bool equals_interval_function(const TransitFunction& r) {
    const Graph g = underlying_graph(r);
    if (!is_connected(g)) {
        int comps = 0;
        VertexSet left = VertexSet::universe(g.size());
        while (!left.empty()) {
            VertexSet visited = VertexSet::singleton(left.first());
            VertexSet frontier = visited;
            while (!frontier.empty()) {
                VertexSet next;
                for (int v : frontier) next = next | g.neighbors(v);
                frontier = next - visited;
                visited = visited | next;
            }
            left = left - visited;
            ++comps;
        }
        throw std::domain_error("equals_interval_function: underlying graph has " +
                                std::to_string(comps) + " components");
    }
    return r == interval_function(g);
}

// -- text format --------------------------------------------------------------

TransitFunction parse_transit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    TransitFunction r;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            if (first != "n")
                throw ParseError("transit: expected header 'n <k>' on first line", lineno, ParseError::AtLine{});
            if (!(ls >> n) || n < 0 || n > Graph::kMaxVertices)
                throw ParseError("transit: bad ground-set size", lineno, ParseError::AtLine{});
            r = TransitFunction(n);
            std::string extra;
            if (ls >> extra) throw ParseError("transit: trailing token after header", lineno, ParseError::AtLine{});
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw ParseError("transit: expected vertex, got '" + first + "'", lineno, ParseError::AtLine{});
        }
        std::string sep;
        if (!(ls >> v >> sep) || (sep != ":" && sep != "->"))
            throw ParseError("transit: expected 'u v :' or 'u v ->'", lineno, ParseError::AtLine{});
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("transit: vertex out of range", lineno, ParseError::AtLine{});
        VertexSet s;
        int w;
        while (ls >> w) {
            if (w < 0 || w >= n) throw ParseError("transit: member out of range", lineno, ParseError::AtLine{});
            s.add(w);
        }
        if (!ls.eof()) throw ParseError("transit: non-integer member", lineno, ParseError::AtLine{});
        if (sep == ":")
            r.set_sym(u, v, s);
        else
            r.set(u, v, s);
    }
    if (n < 0) throw ParseError("transit: empty input", 0);
    return r;
}

std::string emit_transit(const TransitFunction& r) {
    std::ostringstream out;
    const int n = r.size();
    out << "n " << n << "\n";
    auto members = [&](VertexSet s) {
        std::string m;
        for (int w : s) m += " " + std::to_string(w);
        return m;
    };
    for (int u = 0; u < n; ++u) {
        if (!(r.at(u, u) == VertexSet::singleton(u)))
            out << u << " " << u << " :" << members(r.at(u, u)) << "\n";
        for (int v = u + 1; v < n; ++v) {
            if (r.at(u, v) == r.at(v, u)) {
                if (!(r.at(u, v) == VertexSet::pair(u, v)))
                    out << u << " " << v << " :" << members(r.at(u, v)) << "\n";
            } else {
                out << u << " " << v << " ->" << members(r.at(u, v)) << "\n";
                out << v << " " << u << " ->" << members(r.at(v, u)) << "\n";
            }
        }
    }
    return out.str();
}

} // namespace mgt
