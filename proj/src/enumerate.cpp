#include "twowalk/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "twowalk/canonical.hpp"
#include "twowalk/families.hpp"
#include "twowalk/graph6.hpp"
#include "twowalk/linearity.hpp"
#include "twowalk/reduced.hpp"
#include "twowalk/spectral.hpp"

namespace twowalk {

namespace {

int clamp_threads(int threads) {
    return std::max(1, std::min(threads, 64));
}

// Runs fn(shard) for shard = 0..count-1 on the requested number of threads.
void for_each_shard(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::min(clamp_threads(threads), count);
    if (threads <= 1) {
        for (int s = 0; s < count; ++s) fn(s);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int s = next.fetch_add(1);
                if (s >= count) return;
                fn(s);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

void enumerate_tricyclic_naive(int n, const std::function<void(const Graph&)>& emit,
                               int threads) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (n > 8) throw std::invalid_argument("naive enumerator is guarded to n <= 8");
    const int m = n + 2;
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int total = static_cast<int>(pairs.size());
    if (m > total) return;

    struct Found {
        std::uint64_t key;
        std::array<std::uint8_t, 12> idx;
    };
    // shard by the two smallest chosen pair indices (balances the work far
    // better than the first index alone); shards in lexicographic order keep
    // the merged stream deterministic
    std::vector<std::pair<int, int>> shard_heads;
    for (int i0 = 0; i0 + m <= total; ++i0)
        for (int i1 = i0 + 1; i1 + m - 1 <= total; ++i1) shard_heads.emplace_back(i0, i1);
    const int shards = static_cast<int>(shard_heads.size());

    auto scan_shard = [&](int shard, std::vector<Found>& out) {
        std::unordered_set<std::uint64_t> local;
        std::array<int, 12> idx{};
        idx[0] = shard_heads[shard].first;
        idx[1] = shard_heads[shard].second;
        for (int i = 2; i < m; ++i) idx[i] = idx[1] + i - 1;
        while (true) {
            std::array<std::uint64_t, 8> adj{};
            for (int i = 0; i < m; ++i) {
                auto [u, v] = pairs[idx[i]];
                adj[u] |= std::uint64_t{1} << v;
                adj[v] |= std::uint64_t{1} << u;
            }
            std::uint64_t seen = 1, frontier = 1;
            while (frontier) {
                std::uint64_t nxt = 0, f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    nxt |= adj[v];
                }
                frontier = nxt & ~seen;
                seen |= frontier;
            }
            if (std::popcount(seen) == n) {
                std::uint64_t key = canonical_key_small(n, adj.data());
                if (local.insert(key).second) {
                    Found f{key, {}};
                    for (int i = 0; i < m; ++i) f.idx[i] = static_cast<std::uint8_t>(idx[i]);
                    out.push_back(f);
                }
            }
            int i = m - 1;
            while (i >= 2 && idx[i] == total - m + i) --i;
            if (i < 2) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    };

    std::unordered_set<std::uint64_t> global;
    auto drain = [&](std::vector<Found>& found) {
        for (const auto& f : found) {
            if (!global.insert(f.key).second) continue;
            std::vector<Edge> edges;
            edges.reserve(m);
            for (int i = 0; i < m; ++i) edges.push_back(pairs[f.idx[i]]);
            emit(Graph::from_edge_list(n, edges));
        }
        found.clear();
        found.shrink_to_fit();
    };

    if (clamp_threads(threads) <= 1) {
        // streaming path: one shard in memory at a time
        std::vector<Found> found;
        for (int s = 0; s < shards; ++s) {
            scan_shard(s, found);
            drain(found);
        }
        return;
    }
    std::vector<std::vector<Found>> results(shards);
    for_each_shard(shards, threads, [&](int s) { scan_shard(s, results[s]); });
    for (auto& shard : results) drain(shard);
}

namespace {

// Rooted trees and forests up to root-preserving isomorphism, used as the
// pendant-tree decorations of the structured enumerator. A forest with k
// nodes stands for k extra vertices hanging below one attachment point.
struct TreePool {
    using Ref = std::pair<int, int>;  // (size, index into trees of that size)
    // trees[size][index] = the tree's child subtrees
    std::vector<std::vector<std::vector<Ref>>> trees;
    // forests[k] = multisets of tree refs totaling k nodes, as non-increasing
    // ref sequences so each multiset appears once
    std::vector<std::vector<std::vector<Ref>>> forests;

    explicit TreePool(int max_nodes) {
        trees.assign(max_nodes + 1, {});
        forests.assign(max_nodes + 1, {});
        forests[0] = {{}};
        for (int size = 1; size <= max_nodes; ++size) {
            trees[size] = forests[size - 1];  // a tree is a root over a forest
            std::vector<Ref> cur;
            std::function<void(int, Ref)> rec = [&](int left, Ref cap) {
                if (left == 0) {
                    forests[size].push_back(cur);
                    return;
                }
                for (int s = std::min(left, cap.first); s >= 1; --s) {
                    int hi = (s == cap.first) ? cap.second
                                              : static_cast<int>(trees[s].size()) - 1;
                    for (int i = hi; i >= 0; --i) {
                        cur.emplace_back(s, i);
                        rec(left - s, {s, i});
                        cur.pop_back();
                    }
                }
            };
            rec(size, {size, static_cast<int>(trees[size].size()) - 1});
        }
    }

    void attach(std::vector<Edge>& edges, int& next, int parent, const Ref& ref) const {
        int root = next++;
        edges.emplace_back(parent, root);
        for (const auto& child : trees[ref.first][ref.second]) attach(edges, next, root, child);
    }
};

std::vector<Graph> structured_bases(int n) {
    std::vector<Graph> bases;
    std::unordered_set<std::string> seen;
    for (const auto& shape : base_shape_catalog()) {
        const int arc_count = static_cast<int>(shape.arcs.size());
        const int budget = n - shape.branch_count;  // interior vertices available
        if (budget < 0) continue;
        std::vector<int> len(arc_count);
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == arc_count) {
                // parallel arcs may share at most one direct edge
                std::map<std::pair<int, int>, int> direct;
                for (int i = 0; i < arc_count; ++i)
                    if (len[i] == 1) ++direct[shape.arcs[i]];
                for (const auto& [pair, cnt] : direct)
                    if (cnt > 1) return;
                std::vector<Edge> edges;
                int next = shape.branch_count;
                for (int i = 0; i < arc_count; ++i) {
                    auto [u, v] = shape.arcs[i];
                    int prev = u;
                    for (int step = 1; step < len[i]; ++step) {
                        edges.emplace_back(prev, next);
                        prev = next++;
                    }
                    edges.emplace_back(prev, v);
                }
                Graph g = Graph::from_edge_list(next, edges);
                if (seen.insert(canonical_form(g)).second) bases.push_back(std::move(g));
                return;
            }
            auto [u, v] = shape.arcs[pos];
            int lo = (u == v) ? 3 : 1;
            for (int L = lo; used + (L - 1) <= budget; ++L) {
                len[pos] = L;
                rec(pos + 1, used + (L - 1));
            }
        };
        rec(0, 0);
    }
    return bases;
}

}  // namespace

void enumerate_tricyclic_structured(int n, const std::function<void(const Graph&)>& emit,
                                    int threads) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (n > 12) throw std::invalid_argument("structured enumerator is guarded to n <= 12");
    if (n < 4) return;

    const std::vector<Graph> bases = structured_bases(n);
    const TreePool pool(n - 4);  // smallest base has 4 vertices

    auto decorate = [&](int shard, std::vector<std::pair<std::string, Graph>>& out) {
        const Graph& base_graph = bases[shard];
        const int b = base_graph.vertex_count();
        const int extra = n - b;
        if (extra < 0) return;
        std::unordered_set<std::string> local;

        std::vector<const std::vector<TreePool::Ref>*> chosen(b);
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v == b) {
                if (left != 0) return;
                std::vector<Edge> edges = base_graph.edges();
                int next = b;
                for (int x = 0; x < b; ++x)
                    for (const auto& ref : *chosen[x]) pool.attach(edges, next, x, ref);
                Graph g = Graph::from_edge_list(n, edges);
                std::string canon = canonical_form(g);
                if (local.insert(canon).second) out.emplace_back(std::move(canon), std::move(g));
                return;
            }
            int lo = (v == b - 1) ? left : 0;  // the last vertex takes the remainder
            for (int k = lo; k <= left; ++k) {
                for (const auto& forest : pool.forests[k]) {
                    chosen[v] = &forest;
                    rec(v + 1, left - k);
                }
            }
        };
        rec(0, extra);
    };

    std::unordered_set<std::string> global;
    auto drain = [&](std::vector<std::pair<std::string, Graph>>& found) {
        for (auto& [canon, g] : found)
            if (global.insert(canon).second) emit(g);
        found.clear();
        found.shrink_to_fit();
    };

    if (clamp_threads(threads) <= 1) {
        // streaming path: decorations of one base in memory at a time
        std::vector<std::pair<std::string, Graph>> found;
        for (int shard = 0; shard < static_cast<int>(bases.size()); ++shard) {
            decorate(shard, found);
            drain(found);
        }
        return;
    }
    std::vector<std::vector<std::pair<std::string, Graph>>> results(bases.size());
    for_each_shard(static_cast<int>(bases.size()), threads,
                   [&](int shard) { decorate(shard, results[shard]); });
    for (auto& shard : results) drain(shard);
}

std::vector<Graph> enumerate_tricyclic(int n, EnumStrategy strategy, int threads) {
    std::vector<Graph> out;
    auto take = [&](const Graph& g) { out.push_back(g); };
    if (strategy == EnumStrategy::Naive)
        enumerate_tricyclic_naive(n, take, threads);
    else
        enumerate_tricyclic_structured(n, take, threads);
    return out;
}

std::vector<EnumerationReport> verify_catalog(int n_max, EnumStrategy strategy, int threads,
                                              bool record_positives) {
    if (n_max < 1) throw std::invalid_argument("verify_catalog: n_max must be >= 1");
    std::vector<EnumerationReport> reports;
    for (int n = 1; n <= n_max; ++n) {
        EnumerationReport rep;
        rep.order = n;
        auto analyze = [&](const Graph& g) {
            ++rep.total;
            bool positive = main_eigenvalue_count_exact(g) == 2;
            bool linear = is_linear(check_two_walk_linear(g));
            bool found = classify(g).has_value();
            if (positive != linear) rep.equivalence_failures.push_back(to_graph6(g));
            if (positive) {
                ++rep.positives;
                if (record_positives) rep.positives_g6.push_back(to_graph6(g));
            }
            if (found) ++rep.classified;
            if (positive != found) rep.counterexamples.push_back(to_graph6(g));
        };
        if (strategy == EnumStrategy::Naive)
            enumerate_tricyclic_naive(n, analyze, threads);
        else
            enumerate_tricyclic_structured(n, analyze, threads);
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string report_table(const std::vector<EnumerationReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(7) << "order" << std::setw(10) << "total" << std::setw(11)
       << "positives" << std::setw(12) << "classified" << std::setw(17) << "counterexamples"
       << "equivalence_failures\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(7) << r.order << std::setw(10) << r.total << std::setw(11)
           << r.positives << std::setw(12) << r.classified << std::setw(17)
           << r.counterexamples.size() << r.equivalence_failures.size() << '\n';
    }
    return os.str();
}

std::string report_json(const std::vector<EnumerationReport>& reports, EnumStrategy strategy) {
    nlohmann::json j;
    j["strategy"] = strategy == EnumStrategy::Naive ? "naive" : "structured";
    j["reports"] = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : reports) {
        nlohmann::json e;
        e["order"] = r.order;
        e["total"] = r.total;
        e["positives"] = r.positives;
        e["classified"] = r.classified;
        e["counterexamples"] = r.counterexamples;
        e["equivalence_failures"] = r.equivalence_failures;
        if (!r.positives_g6.empty()) e["positives_graph6"] = r.positives_g6;
        ok = ok && r.counterexamples.empty() && r.equivalence_failures.empty();
        j["reports"].push_back(std::move(e));
    }
    j["ok"] = ok;
    return j.dump(2);
}

}  // namespace twowalk
