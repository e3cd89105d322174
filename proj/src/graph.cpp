#include "twowalk/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twowalk {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::vector<Edge> norm;
    norm.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(norm);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw std::invalid_argument("adjacency masks need n <= 64");
    std::vector<std::uint64_t> m(n_, 0);
    for (auto [u, v] : edges_) {
        m[u] |= std::uint64_t{1} << v;
        m[v] |= std::uint64_t{1} << u;
    }
    return m;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

bool is_tricyclic(const Graph& g) {
    return g.edge_count() == g.vertex_count() + 2 && is_connected(g);
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

Graph strip_pendants_once(const Graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph base(const Graph& g) {
    if (!is_tricyclic(g)) throw std::invalid_argument("base() needs a tricyclic graph");
    Graph cur = g;
    while (true) {
        std::vector<int> keep;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) >= 2) keep.push_back(v);
        if (keep.size() == static_cast<size_t>(cur.vertex_count())) return cur;
        cur = induced_subgraph(cur, keep);
    }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("keep vertex out of range");
        if (index[v] != -1) throw std::invalid_argument("duplicate vertex in keep list");
        index[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1) edges.emplace_back(index[u], index[v]);
    return Graph::from_edge_list(static_cast<int>(keep.size()), edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<char> hit(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, e);
}

}  // namespace twowalk
