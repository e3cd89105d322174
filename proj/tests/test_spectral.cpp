#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "twowalk/families.hpp"
#include "twowalk/linearity.hpp"
#include "twowalk/spectral.hpp"

using namespace twowalk;
using namespace twowalk::testing;

TEST_CASE("walk matrix columns by hand") {
    WalkMatrix c4 = walk_matrix(cycle_graph(4));
    for (int k = 0; k < 4; ++k)
        for (int v = 0; v < 4; ++v) CHECK(c4.columns[k][v] == mpz_class(1) << k);

    WalkMatrix star = walk_matrix(star_graph(3));  // vertex 0 is the center
    CHECK(star.columns[1][0] == 3);
    CHECK(star.columns[1][1] == 1);
    CHECK(star.columns[2] == std::vector<mpz_class>{3, 3, 3, 3});

    WalkMatrix p3 = walk_matrix(path_graph(3));
    CHECK(p3.columns[0] == std::vector<mpz_class>{1, 1, 1});
    CHECK(p3.columns[1] == std::vector<mpz_class>{1, 2, 1});
    CHECK(p3.columns[2] == std::vector<mpz_class>{2, 2, 2});
}

TEST_CASE("walk matrix recurrence: column k+1 is A applied to column k") {
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected_graph(rng, 9);
        WalkMatrix wm = walk_matrix(g);
        CHECK(wm.columns[0] == std::vector<mpz_class>(g.vertex_count(), 1));
        for (int k = 0; k + 1 < wm.n; ++k) {
            for (int v = 0; v < wm.n; ++v) {
                mpz_class s = 0;
                for (int u : g.neighbors(v)) s += wm.columns[k][u];
                CHECK(wm.columns[k + 1][v] == s);
            }
        }
        // ties the degree and neighbor-degree sums to walk counts
        for (int v = 0; v < wm.n && wm.n >= 2; ++v) {
            CHECK(wm.columns[1][v] == g.degree(v));
            if (wm.n >= 3) CHECK(wm.columns[2][v] == vertex_sum(g, v));
        }
    }
}

TEST_CASE("exact main-eigenvalue counts") {
    for (int n : {3, 4, 5, 6, 10, 20}) CHECK(main_eigenvalue_count_exact(cycle_graph(n)) == 1);
    CHECK(main_eigenvalue_count_exact(complete_graph(4)) == 1);
    CHECK(main_eigenvalue_count_exact(star_graph(3)) == 2);  // rank of the 4x4 walk matrix
    CHECK(main_eigenvalue_count_exact(path_graph(5)) == 3);  // brute-force rank by hand
    CHECK(main_eigenvalue_count_exact(Graph::from_edge_list(1, {})) == 1);
}

namespace {

// Independent oracle: plain Gaussian elimination over exact rationals on the
// first k walk columns. No sharing with the fraction-free production path.
int rank_of_prefix_mpq(const WalkMatrix& wm, int k) {
    int n = wm.n;
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(k));
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < k; ++c) rows[v][c] = mpq_class(wm.columns[c][v]);
    int rank = 0;
    for (int c = 0; c < k && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n && piv < 0; ++r)
            if (rows[r][c] != 0) piv = r;
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < n; ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            mpq_class f = rows[r][c] / rows[rank][c];
            for (int j = c; j < k; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("count equals the full walk-matrix rank; prefix ranks are monotone") {
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected_graph(rng, 8);
        int n = g.vertex_count();
        WalkMatrix wm = walk_matrix(g);
        int count = main_eigenvalue_count_exact(g);
        CHECK(count >= 1);  // the all-ones column is never zero
        CHECK(count <= n);
        CHECK(rank_of_prefix_mpq(wm, n) == count);
        int prev = 0;
        for (int k = 1; k <= n; ++k) {
            int rk = rank_of_prefix_mpq(wm, k);
            CHECK(rk >= prev);
            CHECK(rk <= std::min(k, count));
            prev = rk;
        }
        CHECK(prev == count);  // the prefix ranks stabilize at the count
    }
}

TEST_CASE("float spectra of known graphs") {
    auto k4 = eigen_float(complete_graph(4));
    CHECK(k4.values[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(k4.values[i] == doctest::Approx(-1.0).epsilon(1e-9));

    auto c4 = eigen_float(cycle_graph(4));
    CHECK(c4.values[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(c4.values[1] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(c4.values[3] == doctest::Approx(-2.0).epsilon(1e-9));

    auto star = eigen_float(star_graph(3));
    CHECK(star.values[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK(star.values[3] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-9));

    // eigenvectors: A v = lambda v
    for (size_t i = 0; i < star.values.size(); ++i) {
        Graph g = star_graph(3);
        for (int v = 0; v < 4; ++v) {
            double av = 0;
            for (int u : g.neighbors(v)) av += star.vectors[i][u];
            CHECK(av == doctest::Approx(star.values[i] * star.vectors[i][v]).epsilon(1e-8));
        }
    }
}

TEST_CASE("float main-eigenvalue counts") {
    CHECK(main_eigenvalue_count_float(cycle_graph(6)) == 1);
    CHECK(main_eigenvalue_count_float(star_graph(3)) == 2);
    CHECK(main_eigenvalue_count_float(build_h(1)) == 2);
}

TEST_CASE("exact and float counts agree on random connected graphs") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_connected_graph(rng, 9);
        MainEigenReport rep = analyze_main_eigenvalues(g);
        CHECK(rep.exact_count == rep.float_count);
        CHECK(static_cast<int>(rep.main_values_float.size()) == rep.float_count);
    }
}

TEST_CASE("connected regular iff one main eigenvalue") {
    std::mt19937 rng(43);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph(rng, 9);
        auto d = g.degrees();
        bool regular = std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
        CHECK((main_eigenvalue_count_exact(g) == 1) == regular);
    }
}

TEST_CASE("count/linearity cross-check on hand-verified graphs") {
    CHECK(main_count_matches_linearity(path_graph(4)));  // count 2, linear (1,1)
    CHECK(main_count_matches_linearity(cycle_graph(5)));  // count 1, regular
    CHECK(main_count_matches_linearity(path_graph(5)));  // count 3, not linear
    CHECK(main_eigenvalue_count_exact(path_graph(4)) == 2);
    std::mt19937 rng(47);
    for (int i = 0; i < 300; ++i) CHECK(main_count_matches_linearity(random_connected_graph(rng, 9)));
}
