#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace twowalk {

/// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge set is stored sorted and deduplicated, so two Graph values are
/// equal exactly when they have the same vertex count and edge set. All
/// operations on Graph are pure; instances are safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary pair list. Pairs are normalized,
    /// duplicates (in either orientation) collapse to one edge.
    /// Throws std::invalid_argument on self-loops or endpoints >= n.
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Degree sequence indexed by vertex.
    std::vector<int> degrees() const;

    /// Row bitmasks of the adjacency matrix. Requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

bool is_connected(const Graph& g);

/// Connected and |E| = |V| + 2.
bool is_tricyclic(const Graph& g);

/// Vertices of degree one, ascending.
std::vector<int> pendant_vertices(const Graph& g);

/// Induced subgraph on the vertices of degree >= 2, in one pass. The result
/// may again contain degree-one vertices (e.g. the middle of a long path).
Graph strip_pendants_once(const Graph& g);

/// Deletes pendant vertices until none remain. For a tricyclic input this is
/// its unique minimal tricyclic subgraph (min degree >= 2, |E| = |V| + 2).
/// Throws std::invalid_argument if g is not tricyclic.
Graph base(const Graph& g);

/// Induced subgraph on `keep`, relabeled to 0..keep.size()-1 in keep order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

/// Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Star K_{1,leaves}; vertex 0 is the center.
Graph star_graph(int leaves);

}  // namespace twowalk
