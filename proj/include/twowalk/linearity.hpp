#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "twowalk/graph.hpp"
#include "twowalk/rational.hpp"

namespace twowalk {

/// S(v): sum of the degrees of v's neighbors.
/// Throws std::out_of_range if v is not a vertex.
long vertex_sum(const Graph& g, int v);

/// All degrees equal; (a, b) would not be unique.
struct Regular {};

/// S(v) = a*d(v) + b holds at every vertex and at least two degrees occur.
struct Linear {
    Rational a;
    Rational b;
};

/// First vertex where the fitted line fails, with both sides of the check.
struct NotLinear {
    int witness = -1;
    Rational expected_sum;  // a*d(witness) + b
    long actual_sum = 0;    // S(witness)
};

using LinearityVerdict = std::variant<Regular, Linear, NotLinear>;

/// Fits (a, b) from any two vertices of unequal degree:
///   a = (S(v) - S(u)) / (d(v) - d(u)),
///   b = (d(u)S(v) - d(v)S(u)) / (d(v) - d(u)).
/// Absent when all degrees are equal.
std::optional<std::pair<Rational, Rational>> solve_ab(const Graph& g);

/// Decides 2-walk (a,b)-linearity exactly: Regular when one distinct degree,
/// otherwise fits (a, b) and verifies S(v) = a*d(v) + b at every vertex.
/// The verdict does not depend on which vertex pair seeded the fit.
LinearityVerdict check_two_walk_linear(const Graph& g);

/// True iff both coefficients are integers. Throws std::logic_error when the
/// verdict is not Linear.
bool is_integral(const LinearityVerdict& verdict);

inline bool is_linear(const LinearityVerdict& v) { return std::holds_alternative<Linear>(v); }
inline bool is_regular(const LinearityVerdict& v) { return std::holds_alternative<Regular>(v); }

std::string verdict_str(const LinearityVerdict& v);

}  // namespace twowalk
