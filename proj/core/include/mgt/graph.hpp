#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgt/vertex_set.hpp"

namespace mgt {

/// Error raised by the text parsers. `offset` is the byte position of the
/// offending input when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    struct AtLine {};
    ParseError(const std::string& what, std::size_t line, AtLine)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), offset(line) {}
    std::size_t offset;
};

/// Finite simple graph on vertices 0..n-1, at most 64 vertices.
/// No self-loops; adjacency is kept symmetric by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int size() const { return n_; }
    bool edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);

    /// Subgraph induced by `s`, vertices relabelled 0.. in ascending order.
    Graph induced(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Hop distances between all pairs; kUnreachable marks separated pairs.
struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<std::int8_t> d;

    int operator()(int u, int v) const {
        return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
};

DistanceMatrix all_pairs_distances(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Some odd cycle (as a closed vertex walk without repetition), or nullopt
/// when the graph is bipartite.
std::optional<std::vector<int>> find_odd_cycle(const Graph& g);
int diameter(const DistanceMatrix& dm);

/// {w : d(u,w) + d(w,v) = d(u,v)}.  Throws std::domain_error when u,v are
/// in different components.
VertexSet interval(const Graph& g, int u, int v);
VertexSet interval(const DistanceMatrix& dm, int u, int v);

// -- constructors -----------------------------------------------------------

Graph make_cycle(int k);    // k >= 3
Graph make_complete(int k); // k >= 1
Graph make_path(int k);     // k >= 1
/// Rim 0..k-1 in cyclic order plus hub k adjacent to every rim vertex.
Graph make_wheel(int k);    // k >= 4

/// Vertex (a,b) -> a*h.size()+b; edges per the Cartesian product rule.
Graph cartesian_product(const Graph& g, const Graph& h);

// -- text formats ------------------------------------------------------------

/// Standard graph6 encoding, n <= 64. An optional ">>graph6<<" header is
/// accepted. Trailing bytes after the encoded graph are rejected.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Lines "u v" of 0-based endpoints, optional first line "n <count>".
/// Without a header the vertex count is 1 + the largest endpoint.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// One graph6 value per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace mgt
