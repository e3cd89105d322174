#include "twowalk/reduced.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace twowalk {

std::string to_string(BaseType t) { return "T" + std::to_string(static_cast<int>(t)); }

int ReducedMultigraph::total_length() const {
    int s = 0;
    for (const auto& a : arcs) s += a[2];
    return s;
}

namespace {

struct Walk {
    int end;
    int length;
};

// Follows a degree-2 chain starting with the edge (from, to); marks every
// traversed edge. Ends at the first vertex of degree != 2.
Walk follow_chain(const Graph& g, int from, int to, std::set<Edge>& used) {
    auto mark = [&](int a, int b) { used.insert({std::min(a, b), std::max(a, b)}); };
    mark(from, to);
    int prev = from, cur = to, len = 1;
    while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        mark(cur, next);
        prev = cur;
        cur = next;
        ++len;
    }
    return {cur, len};
}

}  // namespace

ReducedMultigraph reduce_base(const Graph& g) {
    if (!is_tricyclic(g)) throw std::invalid_argument("reduce_base: graph is not tricyclic");
    std::vector<int> branch;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) throw std::invalid_argument("reduce_base: graph has a pendant vertex");
        if (g.degree(v) >= 3) branch.push_back(v);
    }
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < branch.size(); ++i) index[branch[i]] = static_cast<int>(i);

    ReducedMultigraph r;
    r.branch_count = static_cast<int>(branch.size());
    std::set<Edge> used;
    for (int v : branch) {
        for (int u : g.neighbors(v)) {
            Edge e{std::min(u, v), std::max(u, v)};
            if (used.count(e)) continue;
            Walk w = follow_chain(g, v, u, used);
            if (g.degree(w.end) < 3)
                throw std::logic_error("reduce_base: chain ended below a branch vertex");
            int a = index[v], b = index[w.end];
            r.arcs.push_back({std::min(a, b), std::max(a, b), w.length});
        }
    }
    if (static_cast<int>(used.size()) != g.edge_count())
        throw std::logic_error("reduce_base: did not consume every edge");
    std::sort(r.arcs.begin(), r.arcs.end());
    if (static_cast<int>(r.arcs.size()) != r.branch_count + 2)
        throw std::logic_error("reduce_base: cyclomatic number is not 3");
    return r;
}

std::string reduced_shape(const ReducedMultigraph& r) {
    int b = r.branch_count;
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(r.arcs.size());
        for (const auto& a : r.arcs) {
            int u = perm[a[0]], v = perm[a[1]];
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(pairs.begin(), pairs.end());
        std::string s(1, static_cast<char>('0' + b));
        for (auto [u, v] : pairs) {
            s.push_back(static_cast<char>('a' + u));
            s.push_back(static_cast<char>('a' + v));
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

const std::vector<BaseShape>& base_shape_catalog() {
    static const std::vector<BaseShape> entries = {
        // three cycles hanging off one spider
        {BaseType::T1, 1, {{0, 0}, {0, 0}, {0, 0}}},
        {BaseType::T1, 2, {{0, 0}, {0, 0}, {0, 1}, {1, 1}}},
        {BaseType::T1, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}}},
        {BaseType::T1, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}}},
        // central cycle with two cycle-tipped arms
        {BaseType::T2, 2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}},
        {BaseType::T2, 3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 2}}},
        {BaseType::T2, 4, {{0, 1}, {0, 1}, {0, 2}, {2, 2}, {1, 3}, {3, 3}}},
        // theta with a cycle-tipped arm
        {BaseType::T3, 2, {{0, 1}, {0, 1}, {0, 1}, {1, 1}}},
        {BaseType::T3, 3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 2}}},
        // cycle joined to a cycle-tipped arm through two paths
        {BaseType::T4, 3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}},
        {BaseType::T4, 4, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 3}}},
        // two double-path cycles sharing a vertex, plus a chord path
        {BaseType::T5, 3, {{0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}}},
        // four internally disjoint paths between two vertices
        {BaseType::T6, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}},
        // two double-path cycles joined by two disjoint paths
        {BaseType::T7, 4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}},
        // subdivided K4
        {BaseType::T8, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
    };
    return entries;
}

namespace {

const std::map<std::string, BaseType>& shape_catalog() {
    static const std::map<std::string, BaseType> catalog = [] {
        std::map<std::string, BaseType> m;
        for (const auto& e : base_shape_catalog()) {
            ReducedMultigraph r;
            r.branch_count = e.branch_count;
            for (auto [u, v] : e.arcs) r.arcs.push_back({u, v, 1});
            std::string shape = reduced_shape(r);
            if (m.count(shape)) throw std::logic_error("duplicate base shape in catalog");
            m.emplace(std::move(shape), e.type);
        }
        if (m.size() != 15) throw std::logic_error("base shape catalog must have 15 entries");
        return m;
    }();
    return catalog;
}

}  // namespace

BaseType base_type(const Graph& g) {
    ReducedMultigraph r = reduce_base(base(g));
    const auto& catalog = shape_catalog();
    auto it = catalog.find(reduced_shape(r));
    if (it == catalog.end())
        throw std::logic_error("base shape not in catalog (transcription bug)");
    return it->second;
}

std::vector<InternalPath> internal_paths(const Graph& g) {
    std::vector<InternalPath> out;
    std::set<Edge> used;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) <= 2) continue;
        for (int u : g.neighbors(v)) {
            Edge e{std::min(u, v), std::max(u, v)};
            if (used.count(e)) continue;
            Walk w = follow_chain(g, v, u, used);
            if (g.degree(w.end) <= 2) continue;  // ends in a pendant chain
            out.push_back({v, w.end, w.length, v == w.end});
        }
    }
    return out;
}

int max_internal_path_length(const Graph& g) {
    int best = 0;
    for (const auto& p : internal_paths(g)) best = std::max(best, p.length);
    return best;
}

}  // namespace twowalk
