#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

namespace spor {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;
    double w;
};

// Half-edge as seen from one endpoint.
struct Arc {
    VertexId to;
    double w;
    std::uint32_t edge; // index into edges()
};

// Undirected weighted simple graph, vertices 0..n-1. Self-loops and
// parallel edges are rejected at insertion; weights must be positive and
// finite. An unweighted graph is one whose edges all carry weight 1.
class Graph {
public:
    explicit Graph(std::uint32_t n, bool weighted = false);

    void add_edge(VertexId u, VertexId v, double w = 1.0);

    std::uint32_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    bool weighted() const { return weighted_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arc>& arcs(VertexId v) const { return adj_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

private:
    std::uint32_t n_;
    bool weighted_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> adj_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

// Text format: first line "n m flag" with flag in {unweighted, weighted},
// then m lines "u v" or "u v w". '#' starts a comment. Ids are 0-based.
Graph parse_graph(std::istream& in, const std::string& name);
Graph load_graph(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

} // namespace spor
