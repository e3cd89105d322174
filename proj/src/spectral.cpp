#include "twowalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "twowalk/linearity.hpp"

namespace twowalk {

namespace {

std::vector<mpz_class> apply_adjacency(const Graph& g, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> y(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        y[u] += x[v];
        y[v] += x[u];
    }
    return y;
}

void strip_content(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

WalkMatrix walk_matrix(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("walk_matrix: empty graph");
    WalkMatrix wm;
    wm.n = n;
    wm.columns.reserve(n);
    wm.columns.emplace_back(n, 1);
    for (int k = 1; k < n; ++k) wm.columns.push_back(apply_adjacency(g, wm.columns.back()));
    return wm;
}

int main_eigenvalue_count_exact(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("main_eigenvalue_count_exact: empty graph");

    // Incremental fraction-free elimination: keep an integer echelon basis of
    // the walk columns seen so far; each new column is reduced against it by
    // cross-multiplication (contents stripped to bound growth). The first
    // dependent column closes the Krylov space, so the rank is final then.
    std::vector<std::vector<mpz_class>> basis;
    std::vector<int> pivot;
    std::vector<mpz_class> col(n, 1);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        std::vector<mpz_class> v = col;
        for (size_t i = 0; i < basis.size(); ++i) {
            int p = pivot[i];
            if (v[p] == 0) continue;
            mpz_class lead = basis[i][p], factor = v[p];
            for (int j = 0; j < n; ++j) v[j] = lead * v[j] - factor * basis[i][j];
        }
        int p = -1;
        for (int j = 0; j < n && p < 0; ++j)
            if (v[j] != 0) p = j;
        if (p < 0) break;
        strip_content(v);
        basis.push_back(std::move(v));
        pivot.push_back(p);
        ++rank;
        if (rank == n) break;
        col = apply_adjacency(g, col);
    }
    return rank;
}

EigenDecomposition eigen_float(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("eigen_float: empty graph");
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
    std::vector<double> q(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

    double norm = std::sqrt(2.0 * g.edge_count());  // Frobenius norm of A
    const double target = 1e-12 * std::max(norm, 1e-300);
    const int max_sweeps = 100;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int r = p + 1; r < n; ++r) off += 2.0 * a[p * n + r] * a[p * n + r];
        if (std::sqrt(off) <= target || n == 1) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                double apr = a[p * n + r];
                if (std::fabs(apr) < 1e-300) continue;
                double theta = (a[r * n + r] - a[p * n + p]) / (2.0 * apr);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a[p * n + p], arr = a[r * n + r];
                a[p * n + p] = app - t * apr;
                a[r * n + r] = arr + t * apr;
                a[p * n + r] = a[r * n + p] = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j != p && j != r) {
                        double ajp = a[j * n + p], ajr = a[j * n + r];
                        a[j * n + p] = a[p * n + j] = ajp - s * (ajr + tau * ajp);
                        a[j * n + r] = a[r * n + j] = ajr + s * (ajp - tau * ajr);
                    }
                    double qjp = q[j * n + p], qjr = q[j * n + r];
                    q[j * n + p] = qjp - s * (qjr + tau * qjp);
                    q[j * n + r] = qjr + s * (qjp - tau * qjr);
                }
            }
        }
    }
    if (sweep == max_sweeps) throw std::runtime_error("eigen_float: no convergence");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });
    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        int src = order[i];
        out.values.push_back(a[src * n + src]);
        for (int j = 0; j < n; ++j) out.vectors[i][j] = q[j * n + src];
    }
    return out;
}

namespace {

// Clusters the sorted spectrum by relative gap, then keeps the clusters whose
// eigenspace carries a non-negligible share of the all-ones vector.
std::vector<double> float_main_values(const Graph& g, double cluster_tol, double main_tol) {
    auto eig = eigen_float(g);
    int n = g.vertex_count();
    double scale = std::max(1.0, std::fabs(eig.values.front()));
    std::vector<double> mains;
    size_t i = 0;
    while (i < eig.values.size()) {
        size_t j = i + 1;
        while (j < eig.values.size() && eig.values[j - 1] - eig.values[j] <= cluster_tol * scale)
            ++j;
        double proj = 0.0;
        for (size_t k = i; k < j; ++k) {
            double dot = 0.0;
            for (double x : eig.vectors[k]) dot += x;
            proj += dot * dot;
        }
        if (proj > main_tol * n) mains.push_back(eig.values[i]);
        i = j;
    }
    return mains;
}

}  // namespace

int main_eigenvalue_count_float(const Graph& g, double cluster_tol, double main_tol) {
    return static_cast<int>(float_main_values(g, cluster_tol, main_tol).size());
}

MainEigenReport analyze_main_eigenvalues(const Graph& g) {
    MainEigenReport rep;
    rep.exact_count = main_eigenvalue_count_exact(g);
    rep.main_values_float = float_main_values(g, 1e-8, 1e-16);
    rep.float_count = static_cast<int>(rep.main_values_float.size());
    return rep;
}

bool main_count_matches_linearity(const Graph& g) {
    bool two_main = main_eigenvalue_count_exact(g) == 2;
    bool linear = is_linear(check_two_walk_linear(g));
    return two_main == linear;
}

}  // namespace twowalk
