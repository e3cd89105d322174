#pragma once

#include <gmpxx.h>

#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

/// Columns A^k * 1 for k = 0..n-1, exact. Column k+1 at vertex v equals the
/// sum of column k over v's neighbors; no power of A is ever materialized.
struct WalkMatrix {
    int n = 0;
    std::vector<std::vector<mpz_class>> columns;  // columns[k][v]
};

WalkMatrix walk_matrix(const Graph& g);

/// Number of main eigenvalues (eigenvalues owning an eigenvector with nonzero
/// entry sum), computed exactly as the rank of the walk matrix over the
/// rationals. Fraction-free integer elimination; stops as soon as a column is
/// dependent on its predecessors, since the Krylov sequence then stays closed.
int main_eigenvalue_count_exact(const Graph& g);

/// Full spectral decomposition of the adjacency matrix by cyclic Jacobi
/// rotations, run until the off-diagonal norm falls below 1e-12 * ||A||.
/// Eigenvalues sorted descending; vectors[i] belongs to values[i], all
/// orthonormal. Throws std::runtime_error if the sweep budget is exhausted.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

EigenDecomposition eigen_float(const Graph& g);

struct MainEigenReport {
    int exact_count = 0;
    int float_count = 0;
    std::vector<double> main_values_float;  // one representative per main cluster
};

/// Floating-point cross-check: clusters the spectrum (gap > cluster_tol,
/// relative), then counts clusters whose eigenspace holds a non-negligible
/// projection of the all-ones vector (squared norm > main_tol * n).
/// The tolerances are validated by agreement with the exact count.
int main_eigenvalue_count_float(const Graph& g, double cluster_tol = 1e-8,
                                double main_tol = 1e-16);

/// Both counting routes plus the main eigenvalue approximations.
MainEigenReport analyze_main_eigenvalues(const Graph& g);

/// Cross-check of the two-main-eigenvalue criterion: true iff
/// (exact count == 2) <=> (check_two_walk_linear is Linear).
/// A false return is a counterexample to this implementation.
bool main_count_matches_linearity(const Graph& g);

}  // namespace twowalk
