#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk::testing {

// Exhaustive-permutation isomorphism oracle, independent of canonical_form.
// Only for n <= 8.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[u], perm[v])) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_graph(std::mt19937& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    size_t m = pairs.empty() ? 0 : rng() % (pairs.size() + 1);
    return Graph::from_edge_list(n, {pairs.begin(), pairs.begin() + m});
}

inline Graph random_connected_graph(std::mt19937& rng, int max_n) {
    while (true) {
        Graph g = random_graph(rng, max_n);
        if (is_connected(g)) return g;
    }
}

inline Graph random_relabel(std::mt19937& rng, const Graph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

// Two disjoint triangles (disconnected, 2-regular).
inline Graph two_triangles() {
    return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

}  // namespace twowalk::testing
