#include "mgt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace mgt {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0..64, got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& s : adj_) total += s.size();
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet s) const {
    std::vector<int> verts = s.to_vector();
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.size();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                static_cast<std::int8_t>(DistanceMatrix::kUnreachable));
    for (int s = 0; s < n; ++s) {
        // level-synchronous BFS over bitset frontiers
        VertexSet visited = VertexSet::singleton(s);
        VertexSet frontier = visited;
        int level = 0;
        while (!frontier.empty()) {
            for (int v : frontier)
                dm.d[static_cast<std::size_t>(s) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
                    static_cast<std::int8_t>(level);
            VertexSet next;
            for (int v : frontier) next = next | g.neighbors(v);
            frontier = next - visited;
            visited = visited | next;
            ++level;
        }
    }
    return dm;
}

bool is_connected(const Graph& g) {
    const int n = g.size();
    if (n == 0) return true;
    VertexSet visited = VertexSet::singleton(0);
    VertexSet frontier = visited;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        frontier = next - visited;
        visited = visited | next;
    }
    return visited == VertexSet::universe(n);
}

bool is_bipartite(const Graph& g) {
    return !find_odd_cycle(g).has_value();
}

std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue = {s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    // walk both endpoints up to a common ancestor
                    std::vector<int> pu = {u}, pv = {v};
                    for (int w = u; w != -1; w = parent[static_cast<std::size_t>(w)]) pu.push_back(w);
                    for (int w = v; w != -1; w = parent[static_cast<std::size_t>(w)]) pv.push_back(w);
                    std::vector<int> cyc;
                    int common = -1;
                    for (int a : pu) {
                        if (std::find(pv.begin(), pv.end(), a) != pv.end()) { common = a; break; }
                    }
                    for (int w = u; w != common; w = parent[static_cast<std::size_t>(w)]) cyc.push_back(w);
                    cyc.push_back(common);
                    std::vector<int> tail;
                    for (int w = v; w != common; w = parent[static_cast<std::size_t>(w)]) tail.push_back(w);
                    std::reverse(tail.begin(), tail.end());
                    cyc.insert(cyc.end(), tail.begin(), tail.end());
                    return cyc;
                }
            }
        }
    }
    return std::nullopt;
}

int diameter(const DistanceMatrix& dm) {
    int best = 0;
    for (int u = 0; u < dm.n; ++u)
        for (int v = 0; v < dm.n; ++v)
            best = std::max(best, dm(u, v));
    return best;
}

VertexSet interval(const DistanceMatrix& dm, int u, int v) {
    const int duv = dm(u, v);
    if (duv == DistanceMatrix::kUnreachable)
        throw std::domain_error("interval: vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " are in different components");
    VertexSet out;
    for (int w = 0; w < dm.n; ++w) {
        const int a = dm(u, w), b = dm(w, v);
        if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable && a + b == duv)
            out.add(w);
    }
    return out;
}

VertexSet interval(const Graph& g, int u, int v) {
    return interval(all_pairs_distances(g), u, v);
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("path needs k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_wheel(int k) {
    if (k < 4) throw std::invalid_argument("wheel needs k >= 4");
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(i, k);
    }
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const long long total = static_cast<long long>(g.size()) * h.size();
    if (total > Graph::kMaxVertices)
        throw std::invalid_argument("cartesian product exceeds 64 vertices");
    Graph p(static_cast<int>(total));
    auto id = [&](int a, int b) { return a * h.size() + b; };
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < h.size(); ++b) {
            for (int b2 : h.neighbors(b))
                if (b2 > b) p.add_edge(id(a, b), id(a, b2));
            for (int a2 : g.neighbors(a))
                if (a2 > a) p.add_edge(id(a, b), id(a2, b));
        }
    return p;
}

// -- graph6 -------------------------------------------------------------------

namespace {

constexpr int kG6Bias = 63;

int g6_byte(std::string_view text, std::size_t i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte out of printable range", i);
    return c - kG6Bias;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.rfind(">>", 0) == 0) {
        if (text.substr(0, kHeader.size()) != kHeader)
            throw ParseError("graph6: malformed header", 0);
        pos = kHeader.size();
    }
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    long long n;
    if (text[pos] == '~') {
        // long form: '~' then three sextets (supports 63 and 64 here)
        if (pos + 3 >= text.size()) throw ParseError("graph6: truncated order field", pos);
        if (text[pos + 1] == '~')
            throw ParseError("graph6: order beyond 64 vertices is unsupported", pos);
        n = 0;
        for (int k = 1; k <= 3; ++k) n = n * 64 + g6_byte(text, pos + static_cast<std::size_t>(k));
        pos += 4;
    } else {
        n = g6_byte(text, pos);
        ++pos;
    }
    if (n > Graph::kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw ParseError("graph6: truncated adjacency bits", text.size());
    if (text.size() - pos > nbytes)
        throw ParseError("graph6: trailing garbage", pos + nbytes);

    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
            const int shift = 5 - static_cast<int>(bit % 6);
            if ((g6_byte(text, byte) >> shift) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
        const std::size_t byte = pos + static_cast<std::size_t>(b / 6);
        const int shift = 5 - static_cast<int>(b % 6);
        if ((g6_byte(text, byte) >> shift) & 1)
            throw ParseError("graph6: nonzero padding bit", byte);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
        out.push_back(static_cast<char>((n & 63) + kG6Bias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
    return out;
}

// -- edge list ----------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    struct Tok { long long value; std::size_t offset; };
    std::vector<std::vector<Tok>> lines;
    std::vector<std::size_t> line_offsets;
    bool has_header = false;
    long long header_n = -1;

    std::size_t pos = 0;
    bool first_content_line = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        std::size_t i = 0;
        std::vector<Tok> toks;
        bool header_line = false;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
            if (line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::string_view tok = line.substr(start, i - start);
            if (tok == "n" && first_content_line && toks.empty()) {
                header_line = true;
                continue;
            }
            long long value = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("edge list: non-integer token '" + std::string(tok) + "'",
                                     pos + start);
                value = value * 10 + (c - '0');
                if (value > 1'000'000) throw ParseError("edge list: token too large", pos + start);
            }
            toks.push_back({value, pos + start});
        }
        if (!toks.empty() || header_line) {
            if (header_line) {
                if (toks.size() != 1)
                    throw ParseError("edge list: header must be 'n <count>'", pos);
                has_header = true;
                header_n = toks[0].value;
            } else {
                lines.push_back(toks);
                line_offsets.push_back(pos);
            }
            first_content_line = false;
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }

    long long n = header_n;
    if (!has_header) {
        n = 0;
        for (const auto& toks : lines)
            for (const auto& t : toks) n = std::max(n, t.value + 1);
    }
    if (n > Graph::kMaxVertices)
        throw ParseError("edge list: vertex count exceeds 64", 0);
    Graph g(static_cast<int>(n));
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.size() != 2)
            throw ParseError("edge list: expected 'u v'", line_offsets[li]);
        const long long u = toks[0].value, v = toks[1].value;
        if (u >= n || v >= n)
            throw ParseError("edge list: vertex " + std::to_string(std::max(u, v)) +
                                 " out of range for n=" + std::to_string(n),
                             toks[0].offset);
        if (u == v)
            throw ParseError("edge list: self-loop " + std::to_string(u), toks[0].offset);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace mgt
