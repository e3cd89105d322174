#include "twowalk/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace twowalk {

namespace {

// Canonical labeling by iterated neighborhood refinement plus backtracking
// over the remaining cells. At each node the first non-singleton color class
// is split by individualizing each of its members in turn; vertices whose
// swap is visibly an automorphism (equal neighborhoods outside the pair) are
// tried only once. The minimum relabeled adjacency bit string over all
// discrete leaves is the canonical form.
class CanonSearch {
public:
    CanonSearch(int n, const std::uint64_t* adj) : n_(n), adj_(adj) {
        words_ = static_cast<size_t>((static_cast<long>(n) * (n - 1) / 2 + 63) / 64);
        for (int v = 0; v < n_; ++v) twin_rep_[v] = static_cast<std::int8_t>(v);
        for (int u = 0; u < n_; ++u) {
            if (twin_rep_[u] != u) continue;
            for (int v = u + 1; v < n_; ++v) {
                std::uint64_t strip = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((adj_[u] & strip) == (adj_[v] & strip))
                    twin_rep_[v] = static_cast<std::int8_t>(u);
            }
        }
    }

    std::vector<std::uint64_t> run() {
        if (n_ == 0) return {};
        Colors color{};
        search(color);
        return best_;
    }

private:
    using Colors = std::array<std::int8_t, 64>;

    void refine(Colors& color) const {
        while (true) {
            // signature: own color, then the sorted colors of the neighborhood
            for (int v = 0; v < n_; ++v) {
                auto& s = sig_[v];
                int len = 0;
                s[len++] = color[v];
                std::uint64_t m = adj_[v];
                while (m) {
                    int u = std::countr_zero(m);
                    m &= m - 1;
                    s[len++] = color[u];
                }
                std::sort(s.begin() + 1, s.begin() + len);
                sig_len_[v] = static_cast<std::int8_t>(len);
            }
            auto less = [this](int a, int b) {
                return std::lexicographical_compare(sig_[a].begin(), sig_[a].begin() + sig_len_[a],
                                                    sig_[b].begin(), sig_[b].begin() + sig_len_[b]);
            };
            auto equal = [this](int a, int b) {
                return sig_len_[a] == sig_len_[b] &&
                       std::equal(sig_[a].begin(), sig_[a].begin() + sig_len_[a], sig_[b].begin());
            };
            std::array<std::int8_t, 64> order;
            for (int v = 0; v < n_; ++v) order[v] = static_cast<std::int8_t>(v);
            std::sort(order.begin(), order.begin() + n_, less);
            Colors fresh{};
            int next = 0;
            fresh[order[0]] = 0;
            for (int i = 1; i < n_; ++i) {
                if (!equal(order[i], order[i - 1])) ++next;
                fresh[order[i]] = static_cast<std::int8_t>(next);
            }
            if (fresh == color) return;
            color = fresh;
        }
    }

    void search(Colors color) {
        if (++nodes_ > kNodeBudget)
            throw std::runtime_error("canonical labeling search budget exceeded");
        refine(color);

        std::array<std::int8_t, 64> count{};
        for (int v = 0; v < n_; ++v) ++count[color[v]];
        int cell = -1;
        for (int c = 0; c < n_ && cell < 0; ++c)
            if (count[c] > 1) cell = c;
        if (cell < 0) {
            encode(color);
            return;
        }
        std::array<std::int8_t, 64> tried{};
        int tried_n = 0;
        for (int v = 0; v < n_; ++v) {
            if (color[v] != cell) continue;
            int rep = twin_rep_[v];
            bool seen = false;
            for (int i = 0; i < tried_n; ++i) seen = seen || tried[i] == rep;
            if (seen) continue;
            tried[tried_n++] = static_cast<std::int8_t>(rep);

            Colors next = color;
            for (int u = 0; u < n_; ++u)
                if (next[u] > cell) ++next[u];
            for (int u = 0; u < n_; ++u)
                if (color[u] == cell && u != v) next[u] = static_cast<std::int8_t>(cell + 1);
            search(next);
        }
    }

    void encode(const Colors& color) {
        std::array<std::int8_t, 64> inv{};
        for (int v = 0; v < n_; ++v) inv[color[v]] = static_cast<std::int8_t>(v);
        cand_.assign(words_, 0);
        long bit = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = adj_[inv[i]];
            for (int j = i + 1; j < n_; ++j, ++bit) {
                if ((row >> inv[j]) & 1)
                    cand_[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
            }
        }
        if (best_.empty() || cand_ < best_) best_ = cand_;
    }

    static constexpr long kNodeBudget = 20'000'000;

    int n_;
    const std::uint64_t* adj_;
    size_t words_ = 0;
    std::array<std::int8_t, 64> twin_rep_{};
    std::vector<std::uint64_t> best_;
    std::vector<std::uint64_t> cand_;
    long nodes_ = 0;
    mutable std::array<std::array<std::int8_t, 65>, 64> sig_;
    mutable std::array<std::int8_t, 64> sig_len_;
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    auto masks = g.adjacency_masks();
    CanonSearch search(n, masks.data());
    auto words = search.run();
    std::string out;
    out.reserve(4 + words.size() * 8);
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((n >> shift) & 0xff));
    for (std::uint64_t w : words)
        for (int shift = 56; shift >= 0; shift -= 8)
            out.push_back(static_cast<char>((w >> shift) & 0xff));
    return out;
}

std::uint64_t canonical_key_small(int n, const std::uint64_t* adjacency_masks) {
    if (n > 10) throw std::invalid_argument("canonical_key_small needs n <= 10");
    CanonSearch search(n, adjacency_masks);
    auto words = search.run();
    // at most 45 adjacency bits, left-aligned in word 0; the low bits are free
    std::uint64_t key = words.empty() ? 0 : words[0];
    return key | static_cast<std::uint64_t>(n);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace twowalk
