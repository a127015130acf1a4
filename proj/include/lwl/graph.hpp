#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lwl {

/// Simple undirected graph on vertex ids 0..n-1.
///
/// Adjacency is kept as sorted neighbor arrays so that every iteration
/// order downstream (path enumeration, refinement signatures) is
/// deterministic. No self-loops, no parallel edges. Instances are cheap
/// value types and safe to share read-only across threads once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    /// Inserts {u,v} keeping neighbor lists sorted. Re-adding an existing
    /// edge is a no-op; self-loops are rejected.
    void add_edge(int u, int v);

    /// Appends an isolated vertex and returns its id.
    int add_vertex();

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// Bijection on 0..n-1 stored as an image array: v maps to sigma[v].
struct VertexPermutation {
    std::vector<int> sigma;

    int size() const { return static_cast<int>(sigma.size()); }
    bool is_valid() const;
    VertexPermutation inverse() const;
    static VertexPermutation identity(int n);
};

/// Parse/format errors carry a human-readable position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph6 (McKay's format): upper-triangle bits x(0,1),x(0,2),x(1,2),...
// packed 6 per character, each character value = bits + 63. Sizes below 63
// use one byte; otherwise the 4-byte form 126,b,b,b (up to 258047).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Plain text edge list: "n m" header then m lines "u v", 0-indexed,
// '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Loads a dataset: one graph6 record per whitespace-separated token,
/// optionally preceded by a ">>graph6<<" header.
std::vector<Graph> parse_graph6_file(std::string_view text);

/// Reads a graph file; ".g6" suffix (or a leading graph6 header) selects
/// graph6, anything else is parsed as an edge list.
std::vector<Graph> load_graph_file(const std::string& path);

Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced on `keep`; vertices are relabeled 0..|keep|-1 in the
/// sorted order of `keep`.
Graph induced_subgraph(const Graph& g, std::vector<int> keep);

Graph permute(const Graph& g, const VertexPermutation& p);

/// Partitions E(g) into biconnected blocks (Hopcroft/Tarjan articulation
/// DFS). Bridges come out as singleton blocks.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g);

int num_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace lwl
