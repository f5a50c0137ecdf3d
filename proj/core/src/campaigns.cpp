#include "mgt/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "mgt/fixtures.hpp"
#include "mgt/gated.hpp"

namespace mgt {

namespace {

struct TheoremInfo {
    std::string id;
    std::string_view description;
};

const std::vector<TheoremInfo>& catalog_info() {
    static const std::vector<TheoremInfo> info = {
        {"T-4.1", "J0p on the interval function is equivalent to diamond-weak modularity"},
        {"T-4.2", "the axiom set {t1,t2,t3,b3,J0p,ta} characterizes interval functions of diamond-weakly modular graphs"},
        {"T-5.1", "both bridged recognizers agree with J0p+br on the interval function"},
        {"T-5.2", "the axiom set {t1,t2,t3,J0p,b3,ta,br} characterizes interval functions of bridged graphs"},
        {"T-5.3", "J0p+brp on the interval function is equivalent to weakly bridged"},
        {"T-5.4", "the axiom set {t1,t2,t3,J0p,b3,ta,brp} characterizes interval functions of weakly bridged graphs"},
        {"T-3.3", "{t1,t2,b2,b3,b4,s1,s2} holds exactly for tables equal to the interval function"},
        {"T-2.4", "diamond-weakly modular graphs are closed under gated amalgamation"},
        {"L-2.2", "bridged graphs satisfy QC and TDC"},
        {"L-2.3", "weakly bridged graphs satisfy QC and TDC"},
        {"P-3.2", "b2+b3+ta imply s1 and s2"},
        {"T-3.5", "J0p+b3 imply b2 and a connected underlying graph"},
        {"L-3.4", "b1+b2 imply a connected underlying graph"},
        {"L-s1s2", "b2+b3 give every triple a point x with R(x,v) and R(x,w) meeting only in x"},
        {"T-IMPL", "the seven-part implication suite over transit functions"},
        {"P-GDWM", "diamond-weakly modular graphs dominate their C5/house/W4- occurrences"},
        {"X-CHAIN", "bridged implies weakly bridged implies diamond-weakly modular implies weakly modular"},
        {"T-WB", "every cycle of a bridged graph is well-bridged"},
        {"X-GATE", "gates are unique and intersections of gated sets are gated"},
        {"X-PRISM", "the prism is weakly modular but fails TDC"},
        {"X-INDEP", "the twelve bundled fixtures reproduce their documented axiom profiles"},
    };
    return info;
}

// ---- parallel chunk runner ---------------------------------------------------

int effective_threads(int requested, std::uint64_t nchunks) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    return static_cast<int>(std::min<std::uint64_t>(t, nchunks));
}

template <class Fn>
void parallel_chunks(std::uint64_t nchunks, int threads, Fn&& fn) {
    const int t = effective_threads(threads, nchunks);
    if (t <= 1) {
        for (std::uint64_t i = 0; i < nchunks; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t i; (i = next.fetch_add(1)) < nchunks;) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct ChunkOut {
    std::uint64_t items = 0;
    std::uint64_t violations = 0;
    std::vector<json> recorded;
};

void merge_chunks(std::vector<ChunkOut>& chunks, std::size_t cap, std::uint64_t& items,
                  std::uint64_t& viol, std::vector<json>& recorded) {
    for (auto& c : chunks) {
        items += c.items;
        viol += c.violations;
        for (auto& v : c.recorded) {
            if (recorded.size() < cap) recorded.push_back(std::move(v));
        }
    }
}

// ---- per-graph facts and predicates ------------------------------------------

struct GraphFacts {
    const Graph& g;
    DistanceMatrix dm;
    explicit GraphFacts(const Graph& graph) : g(graph), dm(all_pairs_distances(graph)) {}

    bool qc() const { return !check_qc(g, dm).has_value(); }
    bool tc() const { return !check_tc(g, dm).has_value(); }
    bool tdc() const { return !check_tdc(g, dm).has_value(); }
    bool dwm() const { return qc() && tdc(); }
    bool wm() const { return tc() && qc(); }
    bool bridged() const { return !is_bridged_by_cycles(g).has_value(); }
    bool wb() const { return is_weakly_bridged(g); }
};

bool holds_all(const TransitFunction& r, std::initializer_list<Axiom> axioms) {
    for (Axiom a : axioms)
        if (!axiom_holds(r, a)) return false;
    return true;
}

// The lemma conclusion: every triple u,v,w has x in R(u,v) & R(u,w) with
// R(x,v) & R(x,w) = {x}.
bool s1s2_conclusion(const TransitFunction& r) {
    const int n = r.size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                bool found = false;
                for (int x : r.at(u, v) & r.at(u, w)) {
                    if ((r.at(x, v) & r.at(x, w)) == VertexSet::singleton(x)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

bool equals_interval_or_false(const TransitFunction& r) {
    const Graph gr = underlying_graph(r);
    if (!is_connected(gr)) return false;
    return r == interval_function(gr);
}

std::optional<std::string> graph_violation(std::string_view id, const Graph& g) {
    GraphFacts f(g);
    auto detail = [&](const std::string& s) { return std::optional<std::string>(s); };

    if (id == "T-4.1") {
        const bool lhs = axiom_holds(interval_function(g), Axiom::J0p);
        const bool rhs = f.dwm();
        if (lhs != rhs)
            return detail(lhs ? "J0p holds but graph is not diamond-weakly modular"
                               : "graph is diamond-weakly modular but J0p fails");
        return std::nullopt;
    }
    if (id == "T-4.2") {
        const TransitFunction ig = interval_function(g);
        const bool lhs = holds_all(ig, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::b3, Axiom::J0p, Axiom::ta});
        const bool rhs = f.dwm();
        if (lhs != rhs) return detail("axiom set and diamond-weak modularity disagree on I_G");
        return std::nullopt;
    }
    if (id == "T-5.1") {
        const bool by_cycles = f.bridged();
        const bool by_char = is_bridged_by_characterization(g);
        const TransitFunction ig = interval_function(g);
        const bool by_axioms = holds_all(ig, {Axiom::J0p, Axiom::br});
        if (by_cycles != by_char || by_char != by_axioms)
            return detail("cycles=" + std::to_string(by_cycles) + " characterization=" +
                          std::to_string(by_char) + " axioms=" + std::to_string(by_axioms));
        return std::nullopt;
    }
    if (id == "T-5.2") {
        const TransitFunction ig = interval_function(g);
        const bool lhs =
            holds_all(ig, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::J0p, Axiom::b3, Axiom::ta, Axiom::br});
        const bool rhs = f.bridged();
        if (lhs != rhs) return detail("axiom set and bridgedness disagree on I_G");
        return std::nullopt;
    }
    if (id == "T-5.3") {
        const TransitFunction ig = interval_function(g);
        const bool lhs = holds_all(ig, {Axiom::J0p, Axiom::brp});
        const bool rhs = f.wb();
        if (lhs != rhs)
            return detail(lhs ? "J0p+brp hold but graph is not weakly bridged"
                               : "graph is weakly bridged but J0p+brp fail");
        return std::nullopt;
    }
    if (id == "T-5.4") {
        const TransitFunction ig = interval_function(g);
        const bool lhs =
            holds_all(ig, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::J0p, Axiom::b3, Axiom::ta, Axiom::brp});
        const bool rhs = f.wb();
        if (lhs != rhs) return detail("axiom set and weak bridgedness disagree on I_G");
        return std::nullopt;
    }
    if (id == "T-3.3") {
        const TransitFunction ig = interval_function(g);
        if (!holds_all(ig, {Axiom::t1, Axiom::t2, Axiom::b2, Axiom::b3, Axiom::b4, Axiom::s1, Axiom::s2}))
            return detail("an interval function fails the characterizing axiom set");
        if (!equals_interval_or_false(ig)) return detail("interval function does not round-trip");
        return std::nullopt;
    }
    if (id == "L-2.2") {
        if (f.bridged() && !f.dwm()) return detail("bridged graph fails QC or TDC");
        return std::nullopt;
    }
    if (id == "L-2.3") {
        if (f.wb() && !f.dwm()) return detail("weakly bridged graph fails QC or TDC");
        return std::nullopt;
    }
    if (id == "P-GDWM") {
        if (f.dwm() && !(f.wm() && dominated_five_cycle_check(g)))
            return detail("diamond-weakly modular graph with undominated occurrence or failing TC");
        return std::nullopt;
    }
    if (id == "X-CHAIN") {
        const bool dwm = f.dwm();
        if (f.bridged() && !f.wb()) return detail("bridged but not weakly bridged");
        if (f.wb() && !dwm) return detail("weakly bridged but not diamond-weakly modular");
        if (dwm && !f.wm()) return detail("diamond-weakly modular but not weakly modular");
        if (dwm && !dominated_five_cycle_check(g))
            return detail("diamond-weakly modular with undominated 5-vertex occurrence");
        return std::nullopt;
    }
    if (id == "T-WB") {
        if (!f.bridged()) return std::nullopt;
        std::optional<std::vector<int>> bad;
        for_each_cycle(g, [&](const std::vector<int>& cyc) {
            if (!bad && !is_well_bridged_cycle(g, f.dm, cyc)) bad = cyc;
        });
        if (bad) {
            std::string s = "cycle not well-bridged:";
            for (int v : *bad) s += " " + std::to_string(v);
            return detail(s);
        }
        return std::nullopt;
    }
    if (id == "X-GATE") {
        std::vector<VertexSet> gated;
        const VertexSet all = VertexSet::universe(g.size());
        for (std::uint64_t bits = 1; bits <= all.bits; ++bits) {
            const VertexSet s{bits};
            if (!s.subset_of(all)) continue;
            try {
                if (is_gated(f.dm, s)) gated.push_back(s);
            } catch (const std::logic_error&) {
                return detail("two distinct gates for set " + s.to_string());
            }
        }
        for (std::size_t i = 0; i < gated.size(); ++i)
            for (std::size_t j = i + 1; j < gated.size(); ++j) {
                const VertexSet inter = gated[i] & gated[j];
                if (inter.empty()) continue;
                if (!is_gated(f.dm, inter))
                    return detail("intersection " + inter.to_string() + " of gated sets is not gated");
            }
        return std::nullopt;
    }
    if (id == "X-PRISM") {
        const ClassificationReport rep = classify(g);
        if (!rep.weakly_modular) return detail("expected weakly modular");
        if (rep.diamond_weakly_modular) return detail("expected TDC to fail");
        if (!rep.tdc_witness) return detail("expected a TDC witness");
        if (!witness_hypothesis_holds(g, *rep.tdc_witness)) return detail("TDC witness does not replay");
        return std::nullopt;
    }
    throw std::invalid_argument("no graph predicate for theorem '" + std::string(id) + "'");
}

std::optional<std::string> transit_violation(std::string_view id, const TransitFunction& r) {
    auto detail = [&](const std::string& s) { return std::optional<std::string>(s); };
    auto H = [&](Axiom a) { return axiom_holds(r, a); };

    if (id == "T-3.3") {
        const bool lhs = holds_all(r, {Axiom::t1, Axiom::t2, Axiom::b2, Axiom::b3, Axiom::b4, Axiom::s1, Axiom::s2});
        const bool rhs = equals_interval_or_false(r);
        if (lhs != rhs)
            return detail(lhs ? "axiom set holds but table is not the interval function"
                               : "table equals the interval function but fails the axiom set");
        return std::nullopt;
    }
    if (id == "T-4.2") {
        const bool lhs = holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::b3, Axiom::J0p, Axiom::ta});
        const Graph gr = underlying_graph(r);
        const bool rhs = is_connected(gr) && GraphFacts(gr).dwm() && equals_interval_or_false(r);
        if (lhs != rhs) return detail("axiom set and diamond-weakly-modular interval characterization disagree");
        return std::nullopt;
    }
    if (id == "T-5.2") {
        const bool lhs =
            holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::J0p, Axiom::b3, Axiom::ta, Axiom::br});
        const Graph gr = underlying_graph(r);
        const bool rhs =
            is_connected(gr) && !is_bridged_by_cycles(gr).has_value() && equals_interval_or_false(r);
        if (lhs != rhs) return detail("axiom set and bridged interval characterization disagree");
        return std::nullopt;
    }
    if (id == "T-5.4") {
        const bool lhs =
            holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::J0p, Axiom::b3, Axiom::ta, Axiom::brp});
        const Graph gr = underlying_graph(r);
        const bool rhs = is_connected(gr) && is_weakly_bridged(gr) && equals_interval_or_false(r);
        if (lhs != rhs) return detail("axiom set and weakly bridged interval characterization disagree");
        return std::nullopt;
    }
    if (id == "P-3.2") {
        if (holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::b2, Axiom::b3, Axiom::ta}) &&
            !(H(Axiom::s1) && H(Axiom::s2)))
            return detail("b2+b3+ta hold but s1 or s2 fails");
        return std::nullopt;
    }
    if (id == "T-3.5") {
        if (holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::J0p, Axiom::b3}) &&
            !(H(Axiom::b2) && is_connected(underlying_graph(r))))
            return detail("J0p+b3 hold but b2 fails or underlying graph is disconnected");
        return std::nullopt;
    }
    if (id == "L-3.4") {
        if (H(Axiom::b1) && H(Axiom::b2) && !is_connected(underlying_graph(r)))
            return detail("b1+b2 hold but underlying graph is disconnected");
        return std::nullopt;
    }
    if (id == "L-s1s2") {
        if (holds_all(r, {Axiom::t1, Axiom::t2, Axiom::t3, Axiom::b2, Axiom::b3}) && !s1s2_conclusion(r))
            return detail("b2+b3 hold but some triple has no meeting point");
        return std::nullopt;
    }
    if (id == "T-IMPL") {
        // (a)..(g); cheap antecedents first, everything else lazily
        const bool b3h = H(Axiom::b3);
        if (H(Axiom::J0) && !H(Axiom::J0p)) return detail("(a) J0 holds but J0p fails");
        if (b3h && !H(Axiom::b1)) return detail("(f) b3 holds but b1 fails");
        if (H(Axiom::t3) && H(Axiom::br) && !H(Axiom::brp)) return detail("(e) t3+br hold but brp fails");
        const bool t123 = H(Axiom::t1) && H(Axiom::t2) && H(Axiom::t3);
        if (t123 && b3h) {
            if (H(Axiom::J0p) && !(H(Axiom::b2) && is_connected(underlying_graph(r))))
                return detail("(b) J0p+b3 hold but b2 fails or underlying graph is disconnected");
            if (H(Axiom::b2)) {
                if (!s1s2_conclusion(r)) return detail("(d) b2+b3 hold but some triple has no meeting point");
                if (H(Axiom::ta) && !(H(Axiom::s1) && H(Axiom::s2)))
                    return detail("(c) b2+b3+ta hold but s1 or s2 fails");
            }
        }
        if (H(Axiom::t1) && H(Axiom::t2) && H(Axiom::b2) && b3h && H(Axiom::b4) && H(Axiom::s1) &&
            H(Axiom::s2) && !equals_interval_or_false(r))
            return detail("(g) the Mulder-Nebesky axiom set holds but the table is not the interval function");
        return std::nullopt;
    }
    throw std::invalid_argument("no transit predicate for theorem '" + std::string(id) + "'");
}

bool wants_graph_universe(std::string_view id) {
    return id == "T-4.1" || id == "T-4.2" || id == "T-5.1" || id == "T-5.2" || id == "T-5.3" ||
           id == "T-5.4" || id == "T-3.3" || id == "L-2.2" || id == "L-2.3" || id == "P-GDWM" ||
           id == "X-CHAIN" || id == "T-WB" || id == "X-GATE";
}

bool wants_transit_universe(std::string_view id) {
    return id == "T-4.2" || id == "T-5.2" || id == "T-5.4" || id == "T-3.3" || id == "P-3.2" ||
           id == "T-3.5" || id == "L-3.4" || id == "L-s1s2" || id == "T-IMPL";
}

json graph_violation_json(const Graph& g, const std::string& detailmsg) {
    json v;
    v["kind"] = "graph";
    v["graph6"] = emit_graph6(g);
    v["n"] = g.size();
    v["detail"] = detailmsg;
    return v;
}

json transit_violation_json(const TransitFunction& r, const std::string& detailmsg) {
    json v;
    v["kind"] = "transit";
    v["n"] = r.size();
    v["transit"] = emit_transit(r);
    v["detail"] = detailmsg;
    return v;
}

void run_graph_universe(std::string_view id, const Budget& b, std::uint64_t& items,
                        std::uint64_t& violations, std::vector<json>& recorded, json& universe) {
    if (!b.external_graphs.empty()) {
        for (const Graph& g : b.external_graphs) {
            if (!is_connected(g)) continue;
            ++items;
            if (auto d = graph_violation(id, g)) {
                ++violations;
                if (recorded.size() < b.max_recorded_violations)
                    recorded.push_back(graph_violation_json(g, *d));
            }
        }
        universe["graphs"] = {{"external", true}, {"count", items}};
        return;
    }
    for (int n = 1; n <= b.graph_max_n; ++n) {
        const std::uint64_t total = graph_mask_count(n);
        const std::uint64_t nchunks =
            std::min<std::uint64_t>(total, static_cast<std::uint64_t>(effective_threads(b.threads, total)) * 8);
        const std::uint64_t per = (total + nchunks - 1) / nchunks;
        std::vector<ChunkOut> chunks(static_cast<std::size_t>(nchunks));
        parallel_chunks(nchunks, b.threads, [&](std::uint64_t ci) {
            ChunkOut& out = chunks[static_cast<std::size_t>(ci)];
            const std::uint64_t lo = ci * per, hi = std::min(total, lo + per);
            for_each_connected_graph_in(n, lo, hi, [&](const Graph& g) {
                ++out.items;
                if (auto d = graph_violation(id, g)) {
                    ++out.violations;
                    if (out.recorded.size() < b.max_recorded_violations)
                        out.recorded.push_back(graph_violation_json(g, *d));
                }
            });
        });
        merge_chunks(chunks, b.max_recorded_violations, items, violations, recorded);
    }
    universe["graphs"] = {{"max_n", b.graph_max_n}, {"count", items}};
}

void run_transit_universe(std::string_view id, const Budget& b, std::uint64_t& items,
                          std::uint64_t& violations, std::vector<json>& recorded, json& universe) {
    std::uint64_t exhaustive_count = 0;
    if (b.transit_exhaustive_n >= 1) {
        for_each_transit_function(b.transit_exhaustive_n, TransitConstraints{}, [&](const TransitFunction& r) {
            ++exhaustive_count;
            ++items;
            if (auto d = transit_violation(id, r)) {
                ++violations;
                if (recorded.size() < b.max_recorded_violations)
                    recorded.push_back(transit_violation_json(r, *d));
            }
        });
    }
    json sampled = json::array();
    for (int n : b.sample_ns) {
        const std::uint64_t total = b.samples_per_n;
        if (total == 0) continue;
        const std::uint64_t nchunks =
            std::min<std::uint64_t>(total, static_cast<std::uint64_t>(effective_threads(b.threads, total)) * 8);
        const std::uint64_t per = (total + nchunks - 1) / nchunks;
        std::vector<ChunkOut> chunks(static_cast<std::size_t>(nchunks));
        parallel_chunks(nchunks, b.threads, [&](std::uint64_t ci) {
            ChunkOut& out = chunks[static_cast<std::size_t>(ci)];
            const std::uint64_t lo = ci * per, hi = std::min(total, lo + per);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const TransitFunction r = sampled_transit_function(n, b.seed, i);
                ++out.items;
                if (auto d = transit_violation(id, r)) {
                    ++out.violations;
                    if (out.recorded.size() < b.max_recorded_violations)
                        out.recorded.push_back(transit_violation_json(r, *d));
                }
            }
        });
        merge_chunks(chunks, b.max_recorded_violations, items, violations, recorded);
        sampled.push_back({{"n", n}, {"samples", total}});
    }
    universe["transit"] = {{"exhaustive_n", b.transit_exhaustive_n},
                           {"exhaustive_count", exhaustive_count},
                           {"sampled", sampled},
                           {"seed", b.seed}};
}

// ---- gated amalgamation corpus ------------------------------------------------

struct CorpusEntry {
    std::string name;
    Graph g;
};

std::vector<CorpusEntry> amalgam_corpus() {
    auto paw = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto diamond = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto butterfly =
        Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto star3 = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    return {
        {"K2", make_complete(2)}, {"K3", make_complete(3)}, {"K4", make_complete(4)},
        {"K5", make_complete(5)}, {"C4", make_cycle(4)},    {"W4", make_wheel(4)},
        {"W5", make_wheel(5)},    {"P3", make_path(3)},     {"P4", make_path(4)},
        {"K1,3", star3},          {"paw", paw},             {"diamond", diamond},
        {"butterfly", butterfly},
    };
}

void subsets_up_to(int n, int maxk, const std::function<void(VertexSet)>& visit) {
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t bits = 1; bits < total; ++bits) {
        VertexSet s{bits};
        if (s.size() <= maxk) visit(s);
    }
}

void run_amalgam_corpus(const Budget& b, std::uint64_t& items, std::uint64_t& violations,
                        std::vector<json>& recorded, json& universe) {
    const auto corpus = amalgam_corpus();
    for (const auto& e : corpus) {
        GraphFacts f(e.g);
        if (!f.dwm())
            throw std::logic_error("amalgam corpus entry " + e.name + " is not diamond-weakly modular");
    }
    // gated subsets of size <= 3 per corpus graph, precomputed
    std::vector<std::vector<VertexSet>> gated_sets(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const DistanceMatrix dm = all_pairs_distances(corpus[i].g);
        subsets_up_to(corpus[i].g.size(), 3, [&](VertexSet s) {
            if (is_gated(dm, s)) gated_sets[i].push_back(s);
        });
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            for (VertexSet s1 : gated_sets[i]) {
                for (VertexSet s2 : gated_sets[j]) {
                    if (s1.size() != s2.size()) continue;
                    std::vector<int> v1 = s1.to_vector(), v2 = s2.to_vector();
                    std::sort(v2.begin(), v2.end());
                    do {
                        AmalgamSpec spec;
                        spec.g1 = corpus[i].g;
                        spec.g2 = corpus[j].g;
                        for (std::size_t k = 0; k < v1.size(); ++k) spec.iso.emplace_back(v1[k], v2[k]);
                        if (validate_amalgam_structure(spec)) continue; // not an induced isomorphism
                        ++items;
                        Graph am;
                        try {
                            am = gated_amalgam(spec);
                        } catch (const std::invalid_argument& ex) {
                            ++violations;
                            if (recorded.size() < b.max_recorded_violations) {
                                json v = to_json(spec);
                                v["kind"] = "amalgam";
                                v["detail"] = std::string("rejected: ") + ex.what();
                                recorded.push_back(std::move(v));
                            }
                            continue;
                        }
                        if (!is_connected(am) || !GraphFacts(am).dwm()) {
                            ++violations;
                            if (recorded.size() < b.max_recorded_violations) {
                                json v = to_json(spec);
                                v["kind"] = "amalgam";
                                v["amalgam"] = emit_graph6(am);
                                v["detail"] = "amalgam is not diamond-weakly modular";
                                recorded.push_back(std::move(v));
                            }
                        }
                    } while (std::next_permutation(v2.begin(), v2.end()));
                }
            }
        }
    }
    universe["amalgams"] = {{"corpus_size", corpus.size()}, {"count", items}};
}

void run_fixture_campaign(const Budget& b, std::uint64_t& items, std::uint64_t& violations,
                          std::vector<json>& recorded, json& universe) {
    for (const Fixture& f : fixture_catalog()) {
        ++items;
        auto record = [&](Axiom a, bool expected, bool actual) {
            ++violations;
            if (recorded.size() < b.max_recorded_violations) {
                json v;
                v["kind"] = "fixture";
                v["fixture"] = f.name;
                v["axiom"] = std::string(axiom_name(a));
                v["expected_holds"] = expected;
                v["actual_holds"] = actual;
                recorded.push_back(std::move(v));
            }
        };
        for (Axiom a : f.holds) {
            if (!axiom_holds(f.fn, a)) record(a, true, false);
        }
        for (Axiom a : f.fails) {
            if (axiom_holds(f.fn, a)) record(a, false, true);
        }
        if (!f.known_violation.empty() && !f.fails.empty()) {
            if (!axiom_violated_at(f.fn, f.fails.front(), f.known_violation)) record(f.fails.front(), false, true);
        }
    }
    universe["fixtures"] = items;
}

} // namespace

const std::vector<std::string>& theorem_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& t : catalog_info()) v.push_back(t.id);
        return v;
    }();
    return ids;
}

bool is_known_theorem(std::string_view id) {
    for (const auto& t : catalog_info())
        if (t.id == id) return true;
    return false;
}

std::string_view theorem_description(std::string_view id) {
    for (const auto& t : catalog_info())
        if (t.id == id) return t.description;
    throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
}

CampaignReport verify_theorem(std::string_view id, const Budget& budget) {
    if (!is_known_theorem(id)) throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
    const auto start = std::chrono::steady_clock::now();

    CampaignReport rep;
    rep.theorem = std::string(id);
    std::uint64_t items = 0;

    if (id == "T-2.4") {
        run_amalgam_corpus(budget, items, rep.violation_count, rep.violations, rep.universe);
    } else if (id == "X-INDEP") {
        run_fixture_campaign(budget, items, rep.violation_count, rep.violations, rep.universe);
    } else if (id == "X-PRISM") {
        const Graph prism = cartesian_product(make_complete(3), make_complete(2));
        items = 1;
        if (auto d = graph_violation(id, prism)) {
            ++rep.violation_count;
            rep.violations.push_back(graph_violation_json(prism, *d));
        }
        rep.universe["graphs"] = {{"instance", "prism"}, {"count", 1}};
    } else {
        if (wants_graph_universe(id)) {
            std::uint64_t gitems = 0;
            run_graph_universe(id, budget, gitems, rep.violation_count, rep.violations, rep.universe);
            items += gitems;
        }
        if (wants_transit_universe(id)) {
            std::uint64_t titems = 0;
            run_transit_universe(id, budget, titems, rep.violation_count, rep.violations, rep.universe);
            items += titems;
        }
    }

    rep.universe["items"] = items;
    rep.pass = rep.violation_count == 0;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool replay_violation(std::string_view id, const json& violation) {
    const std::string kind = violation.value("kind", "");
    if (kind == "graph") {
        const Graph g = parse_graph6(violation.at("graph6").get<std::string>());
        return graph_violation(id, g).has_value();
    }
    if (kind == "transit") {
        const TransitFunction r = parse_transit(violation.at("transit").get<std::string>());
        return transit_violation(id, r).has_value();
    }
    if (kind == "amalgam") {
        AmalgamSpec spec = amalgam_spec_from_json(violation);
        try {
            const Graph am = gated_amalgam(spec);
            return !is_connected(am) || !GraphFacts(am).dwm();
        } catch (const std::invalid_argument&) {
            return true;
        }
    }
    if (kind == "fixture") {
        const Fixture& f = load_fixture(violation.at("fixture").get<std::string>());
        const auto a = axiom_from_name(violation.at("axiom").get<std::string>());
        if (!a) return false;
        return axiom_holds(f.fn, *a) != violation.at("expected_holds").get<bool>();
    }
    return false;
}

CampaignReport minimize_counterexample(const CampaignReport& report) {
    if (report.violations.empty())
        throw std::invalid_argument("minimize_counterexample: report has no violations");
    CampaignReport out = report;
    for (json& v : out.violations) {
        if (v.value("kind", "") != "graph") continue;
        Graph g = parse_graph6(v.at("graph6").get<std::string>());
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (int del = 0; del < g.size(); ++del) {
                const Graph h = g.induced(VertexSet::universe(g.size()) - VertexSet::singleton(del));
                if (h.size() == 0 || !is_connected(h)) continue;
                if (graph_violation(report.theorem, h)) {
                    g = h;
                    shrunk = true;
                    break;
                }
            }
        }
        v["graph6"] = emit_graph6(g);
        v["n"] = g.size();
        v["minimized"] = true;
    }
    return out;
}

json to_json(const CampaignReport& report) {
    json j;
    j["theorem"] = report.theorem;
    j["universe"] = report.universe;
    j["violations"] = report.violations;
    j["violation_count"] = report.violation_count;
    j["pass"] = report.pass;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

} // namespace mgt
