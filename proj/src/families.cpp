#include "twowalk/families.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "twowalk/canonical.hpp"

namespace twowalk {

namespace {

struct PartsBuilder {
    std::vector<Edge> edges;
    int next = 0;

    int make() { return next++; }
    void link(int a, int b) { edges.emplace_back(a, b); }

    // Path of `count` vertices. Endpoints may be pre-existing vertices
    // (pass -1 to create); count == 1 collapses to a single shared vertex.
    std::vector<int> path(int count, int first, int last) {
        std::vector<int> p(count);
        for (int i = 0; i < count; ++i) {
            if (i == 0 && first >= 0)
                p[i] = first;
            else if (i == count - 1 && last >= 0)
                p[i] = last;
            else
                p[i] = make();
            if (i > 0) link(p[i - 1], p[i]);
        }
        return p;
    }

    std::array<int, 2> triangle(int at) {
        int x = make(), y = make();
        link(at, x);
        link(x, y);
        link(y, at);
        return {x, y};
    }
};

// A built base together with the path/triangle vertices, so the catalog
// constructors can hang pendants off named positions.
struct TParts {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> u, v, w, s, t, r;
    std::vector<std::array<int, 2>> triangles;

    void pendants(const std::vector<int>& at, int count) {
        for (int vert : at)
            for (int c = 0; c < count; ++c) edges.emplace_back(vert, n++);
    }
    std::vector<int> interior(const std::vector<int>& p) const {
        if (p.size() <= 2) return {};
        return std::vector<int>(p.begin() + 1, p.end() - 1);
    }
    Graph graph() const { return Graph::from_edge_list(n, edges); }
};

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

TParts build_t1(int n, int m, int k) {
    require(n >= 1 && m >= 1 && k >= 1, "T1 needs n,m,k >= 1");
    PartsBuilder b;
    int hub = b.make();
    TParts p;
    p.u = b.path(n, -1, hub);
    p.v = b.path(m, -1, hub);
    p.w = b.path(k, -1, hub);
    p.triangles = {b.triangle(p.u[0]), b.triangle(p.v[0]), b.triangle(p.w[0])};
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t2(int k, int l, int n, int m) {
    require(k >= 1 && l >= 1, "T2 needs k,l >= 1");
    require(n >= 2 && m >= 2, "T2 needs n,m >= 2");
    require(!(n == 2 && m == 2), "T2 with n = m = 2 is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.v = b.path(m, A, B);
    p.w = b.path(k, -1, A);
    p.r = b.path(l, -1, B);
    p.triangles = {b.triangle(p.w[0]), b.triangle(p.r[0])};
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t3(int n, int m, int k, int l) {
    require(n >= 2 && m >= 2 && k >= 2, "T3 needs n,m,k >= 2");
    require(l >= 1, "T3 needs l >= 1");
    require((n == 2) + (m == 2) + (k == 2) <= 1, "T3 with two direct paths is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.v = b.path(m, A, B);
    p.w = b.path(k, A, B);
    p.r = b.path(l, -1, B);
    p.triangles = {b.triangle(p.r[0])};
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t4(int k, int p_, int q, int n, int m) {
    require(k >= 1, "T4 needs k >= 1");
    require(p_ >= 2 && q >= 2 && n >= 2 && m >= 2, "T4 needs p,q,n,m >= 2");
    require(!(n == 2 && m == 2), "T4 with n = m = 2 is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make(), C = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.v = b.path(m, A, B);
    p.s = b.path(p_, A, C);
    p.t = b.path(q, B, C);
    p.w = b.path(k, -1, C);
    p.triangles = {b.triangle(p.w[0])};
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t5(int n, int m, int k, int p_, int q) {
    require(n >= 2 && m >= 2 && k >= 2 && p_ >= 2 && q >= 2, "T5 needs all parameters >= 2");
    require(!(m == 2 && p_ == 2), "T5 with m = p = 2 is a multigraph");
    require(!(k == 2 && q == 2), "T5 with k = q = 2 is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make(), C = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.v = b.path(m, A, C);
    p.s = b.path(p_, A, C);
    p.w = b.path(k, C, B);
    p.t = b.path(q, C, B);
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t6(int d1, int d2, int d3, int d4) {
    require(d1 >= 2 && d2 >= 2 && d3 >= 2 && d4 >= 2, "T6 needs all parameters >= 2");
    require((d1 == 2) + (d2 == 2) + (d3 == 2) + (d4 == 2) <= 1,
            "T6 with two direct paths is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make();
    TParts p;
    p.u = b.path(d1, A, B);
    p.v = b.path(d2, A, B);
    p.w = b.path(d3, A, B);
    p.s = b.path(d4, A, B);
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t7(int n, int m, int k, int l, int p_, int q) {
    require(n >= 2 && m >= 2 && k >= 2 && l >= 2 && p_ >= 2 && q >= 2,
            "T7 needs all parameters >= 2");
    require(!(n == 2 && k == 2), "T7 with n = k = 2 is a multigraph");
    require(!(m == 2 && l == 2), "T7 with m = l = 2 is a multigraph");
    PartsBuilder b;
    int A = b.make(), B = b.make(), C = b.make(), D = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.w = b.path(k, A, B);
    p.v = b.path(m, C, D);
    p.r = b.path(l, C, D);
    p.s = b.path(p_, A, C);
    p.t = b.path(q, B, D);
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t8(int n, int m, int k, int l, int p_, int q) {
    require(n >= 2 && m >= 2 && k >= 2 && l >= 2 && p_ >= 2 && q >= 2,
            "T8 needs all parameters >= 2");
    PartsBuilder b;
    int A = b.make(), B = b.make(), C = b.make(), D = b.make();
    TParts p;
    p.u = b.path(n, A, B);
    p.v = b.path(m, A, C);
    p.w = b.path(k, A, D);
    p.s = b.path(p_, D, B);
    p.t = b.path(q, B, C);
    p.r = b.path(l, C, D);
    p.n = b.next;
    p.edges = std::move(b.edges);
    return p;
}

TParts build_t_parts(BaseType t, const std::vector<int>& d) {
    auto want = [&](size_t count) {
        if (d.size() != count)
            throw std::invalid_argument(to_string(t) + " takes " + std::to_string(count) +
                                        " length parameters");
    };
    switch (t) {
        case BaseType::T1: want(3); return build_t1(d[0], d[1], d[2]);
        case BaseType::T2: want(4); return build_t2(d[0], d[1], d[2], d[3]);
        case BaseType::T3: want(4); return build_t3(d[0], d[1], d[2], d[3]);
        case BaseType::T4: want(5); return build_t4(d[0], d[1], d[2], d[3], d[4]);
        case BaseType::T5: want(5); return build_t5(d[0], d[1], d[2], d[3], d[4]);
        case BaseType::T6: want(4); return build_t6(d[0], d[1], d[2], d[3]);
        case BaseType::T7: want(6); return build_t7(d[0], d[1], d[2], d[3], d[4], d[5]);
        case BaseType::T8: want(6); return build_t8(d[0], d[1], d[2], d[3], d[4], d[5]);
    }
    throw std::invalid_argument("unknown base type");
}

}  // namespace

std::string FamilyId::str() const {
    std::ostringstream os;
    os << (kind == Kind::H ? 'H' : 'G') << index;
    if (!params.empty()) {
        os << '(';
        for (size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
        os << ')';
    }
    return os.str();
}

Graph build_base(BaseType t, const std::vector<int>& lengths) {
    return build_t_parts(t, lengths).graph();
}

Graph build_h(int i) {
    switch (i) {
        case 1: return build_t1(1, 1, 1).graph();
        case 2: return build_t1(4, 4, 4).graph();
        case 3: return build_t2(1, 1, 2, 4).graph();
        case 4: return build_t2(1, 1, 4, 4).graph();
        case 5: return build_t2(2, 2, 4, 4).graph();
        case 6: return build_t2(4, 4, 4, 4).graph();
        case 7: {
            // theta with a triangle at the junction; one pendant on each
            // path interior and each triangle companion
            TParts p = build_t3(3, 3, 3, 1);
            p.pendants({p.u[1], p.v[1], p.w[1], p.triangles[0][0], p.triangles[0][1]}, 1);
            return p.graph();
        }
        case 8: return build_t4(1, 2, 2, 3, 3).graph();
        case 9: return build_t4(2, 4, 4, 4, 2).graph();
        case 10: return build_t4(4, 4, 4, 4, 4).graph();
        case 11: {
            TParts p = build_t6(3, 3, 3, 3);
            p.pendants({p.u[1], p.v[1], p.w[1], p.s[1]}, 1);
            return p.graph();
        }
        case 12: return build_t6(2, 3, 3, 3).graph();
        case 13: return build_t6(3, 3, 3, 3).graph();
        case 14: return build_t6(2, 4, 4, 4).graph();
        case 15: return build_t6(4, 4, 4, 4).graph();
        case 16: return build_t7(3, 3, 2, 2, 2, 2).graph();
        case 17: return build_t7(3, 3, 3, 3, 2, 2).graph();
        case 18: return build_t7(3, 3, 2, 2, 3, 3).graph();
        case 19: return build_t7(3, 3, 3, 3, 3, 3).graph();
        case 20: return build_t7(4, 4, 2, 2, 2, 2).graph();
        case 21: return build_t7(4, 4, 4, 4, 2, 2).graph();
        case 22: return build_t7(4, 4, 2, 2, 4, 4).graph();
        case 23: return build_t7(4, 4, 4, 4, 4, 4).graph();
        case 24: return build_t8(3, 2, 2, 3, 2, 2).graph();
        case 25: return build_t8(3, 2, 3, 3, 2, 3).graph();
        case 26: return build_t8(3, 3, 3, 3, 3, 3).graph();
        case 27: return build_t8(4, 2, 2, 4, 2, 2).graph();
        case 28: return build_t8(4, 2, 4, 4, 2, 4).graph();
        case 29: return build_t8(4, 4, 4, 4, 4, 4).graph();
        case 30: {
            TParts p = build_t8(2, 2, 2, 3, 3, 3);
            p.pendants({p.u[0]}, 1);  // u[0] is the all-direct-edges corner
            return p.graph();
        }
        default: throw std::invalid_argument("build_h: index must be 1..30");
    }
}

int h_order(int i) {
    static const std::vector<int> orders = [] {
        std::vector<int> o(31, 0);
        for (int j = 1; j <= 30; ++j) o[j] = build_h(j).vertex_count();
        return o;
    }();
    if (i < 1 || i > 30) throw std::invalid_argument("h_order: index must be 1..30");
    return orders[i];
}

Graph build_g(int j, const std::vector<long>& params) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("G" + std::to_string(j) + " takes " +
                                        std::to_string(count) + " parameter(s)");
    };
    auto as_int = [](long x) {
        if (x < 0 || x > 1'000'000) throw std::invalid_argument("family parameter out of range");
        return static_cast<int>(x);
    };
    switch (j) {
        case 1: {
            want(1);
            int l1 = as_int(params[0]);
            require(l1 >= 1, "G1 needs l1 >= 1");
            TParts p = build_t2(1, 1, 4, l1 + 2);
            p.pendants(p.interior(p.v), 2);
            return p.graph();
        }
        case 2: {
            want(2);
            int k1 = as_int(params[0]), k2 = as_int(params[1]);
            require(k1 >= 1 || k2 >= 1, "G2 needs max(k1,k2) >= 1");
            TParts p = build_t2(k1 + 2, k2 + 2, 4, 4);
            p.pendants(p.interior(p.w), 1);
            p.pendants(p.interior(p.r), 1);
            return p.graph();
        }
        case 3: {
            want(2);
            int k1 = as_int(params[0]), k2 = as_int(params[1]);
            require(k1 >= 1 || k2 >= 1, "G3 needs max(k1,k2) >= 1");
            TParts p = build_t4(k1 + 2, 4, 4, k2 + 2, 4);
            p.pendants(p.interior(p.w), 1);
            p.pendants(p.interior(p.u), 1);
            return p.graph();
        }
        case 4: {
            want(1);
            int l1 = as_int(params[0]);
            require(l1 >= 1, "G4 needs l1 >= 1");
            TParts p = build_t6(l1 + 2, 4, 4, 4);
            p.pendants(p.interior(p.u), 2);
            return p.graph();
        }
        case 5: {
            want(2);
            int k1 = as_int(params[0]), k2 = as_int(params[1]);
            require(k1 >= 1 || k2 >= 1, "G5 needs max(k1,k2) >= 1");
            TParts p = build_t7(4, 4, 4, 4, k1 + 2, k2 + 2);
            p.pendants(p.interior(p.s), 1);
            p.pendants(p.interior(p.t), 1);
            return p.graph();
        }
        case 6: {
            want(2);
            int k1 = as_int(params[0]), k2 = as_int(params[1]);
            require(k1 >= 1 || k2 >= 1, "G6 needs max(k1,k2) >= 1");
            TParts p = build_t7(4, 4, k2 + 2, k1 + 2, 4, 4);
            p.pendants(p.interior(p.r), 1);
            p.pendants(p.interior(p.w), 1);
            return p.graph();
        }
        case 7: {
            want(1);
            int b = as_int(params[0]);
            require(b >= 1, "G7 needs b >= 1");
            std::vector<Edge> edges;
            int next = 4;
            for (int x = 0; x < 4; ++x) {
                for (int y = x + 1; y < 4; ++y) edges.emplace_back(x, y);
                for (int c = 0; c < b; ++c) edges.emplace_back(x, next++);
            }
            return Graph::from_edge_list(next, edges);
        }
        case 8: {
            want(2);
            int k1 = as_int(params[0]), k2 = as_int(params[1]);
            require(k1 >= 1 || k2 >= 1, "G8 needs max(k1,k2) >= 1");
            TParts p = build_t8(4, 4, k1 + 2, 4, 4, k2 + 2);
            p.pendants(p.interior(p.w), 1);
            p.pendants(p.interior(p.t), 1);
            return p.graph();
        }
        default: throw std::invalid_argument("build_g: family must be 1..8");
    }
}

std::pair<long, long> expected_linearity(const FamilyId& id) {
    if (id.kind == FamilyId::Kind::H) {
        static constexpr std::array<std::pair<long, long>, 31> table = {{
            {0, 0},  {1, 6},  {1, 3}, {2, 2}, {1, 4},  {2, 1}, {1, 3}, {3, 0},
            {2, 2},  {2, 1},  {1, 3}, {3, 0}, {1, 6},  {0, 8}, {2, 2}, {1, 4},
            {2, 2},  {1, 4},  {1, 4}, {0, 6}, {3, -1}, {2, 1}, {2, 1}, {1, 3},
            {2, 2},  {1, 4},  {0, 6}, {3, -1}, {2, 1}, {1, 3}, {2, 2},
        }};
        if (id.index < 1 || id.index > 30)
            throw std::invalid_argument("expected_linearity: bad H index");
        return table[id.index];
    }
    switch (id.index) {
        case 1: return {2, 2};
        case 2: return {2, 1};
        case 3: return {2, 1};
        case 4: return {2, 2};
        case 5: return {2, 1};
        case 6: return {2, 1};
        case 7:
            if (id.params.empty()) throw std::invalid_argument("G7 id needs its parameter");
            return {3, id.params[0]};
        case 8: return {2, 1};
        default: throw std::invalid_argument("expected_linearity: bad G index");
    }
}

BaseType expected_base_type(const FamilyId& id) {
    if (id.kind == FamilyId::Kind::H) {
        int i = id.index;
        if (i <= 2) return BaseType::T1;
        if (i <= 6) return BaseType::T2;
        if (i == 7) return BaseType::T3;
        if (i <= 10) return BaseType::T4;
        if (i <= 15) return BaseType::T6;
        if (i <= 23) return BaseType::T7;
        return BaseType::T8;
    }
    switch (id.index) {
        case 1:
        case 2: return BaseType::T2;
        case 3: return BaseType::T4;
        case 4: return BaseType::T6;
        case 5:
        case 6: return BaseType::T7;
        default: return BaseType::T8;
    }
}

std::vector<std::pair<FamilyId, Graph>> family_members_of_order(int n) {
    if (n < 1) throw std::invalid_argument("family_members_of_order: n >= 1");
    std::vector<std::pair<FamilyId, Graph>> raw;
    for (int i = 1; i <= 30; ++i)
        if (h_order(i) == n) raw.emplace_back(FamilyId{FamilyId::Kind::H, i, {}}, build_h(i));

    auto add_g = [&](int j, std::vector<long> params) {
        Graph g = build_g(j, params);
        raw.emplace_back(FamilyId{FamilyId::Kind::G, j, std::move(params)}, std::move(g));
    };
    // orders: G1/G4 = 8 + 3*l1, G7 = 4 + 4*b, the rest = 12 + 2*(k1 + k2);
    // ascending family index, parameters in lexicographic order
    for (int j = 1; j <= 8; ++j) {
        if (j == 1 || j == 4) {
            if (n >= 11 && (n - 8) % 3 == 0) add_g(j, {(n - 8) / 3});
        } else if (j == 7) {
            if (n >= 8 && (n - 4) % 4 == 0) add_g(j, {(n - 4) / 4});
        } else if (n >= 14 && (n - 12) % 2 == 0) {
            long total = (n - 12) / 2;
            for (long k1 = 0; k1 <= total; ++k1) add_g(j, {k1, total - k1});
        }
    }

    // isomorphic parameterizations collapse to the first id in catalog order
    std::vector<std::pair<FamilyId, Graph>> out;
    std::vector<std::string> seen;
    for (auto& [id, g] : raw) {
        std::string canon = canonical_form(g);
        bool fresh = true;
        for (const auto& c : seen) fresh = fresh && c != canon;
        if (fresh) {
            seen.push_back(std::move(canon));
            out.emplace_back(std::move(id), std::move(g));
        }
    }
    return out;
}

namespace {

const std::vector<std::pair<FamilyId, std::string>>& members_canon(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<FamilyId, std::string>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::pair<FamilyId, std::string>> entry;
        for (const auto& [id, g] : family_members_of_order(n))
            entry.emplace_back(id, canonical_form(g));
        it = cache.emplace(n, std::move(entry)).first;
    }
    return it->second;
}

}  // namespace

std::optional<FamilyId> classify(const Graph& g) {
    if (!is_tricyclic(g)) return std::nullopt;
    std::string canon = canonical_form(g);
    for (const auto& [id, c] : members_canon(g.vertex_count()))
        if (c == canon) return id;
    return std::nullopt;
}

}  // namespace twowalk
