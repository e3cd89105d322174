#include "twowalk/linearity.hpp"

#include <stdexcept>

namespace twowalk {

long vertex_sum(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex_sum: vertex out of range");
    long s = 0;
    for (int u : g.neighbors(v)) s += g.degree(u);
    return s;
}

std::optional<std::pair<Rational, Rational>> solve_ab(const Graph& g) {
    int n = g.vertex_count();
    int u = 0;
    int v = -1;
    for (int w = 1; w < n; ++w) {
        if (g.degree(w) != g.degree(u)) {
            v = w;
            break;
        }
    }
    if (v < 0) return std::nullopt;
    long du = g.degree(u), dv = g.degree(v);
    long su = vertex_sum(g, u), sv = vertex_sum(g, v);
    // two-point fit of S(x) = a*d(x) + b
    Rational a(mpz_class(sv - su), mpz_class(dv - du));
    Rational b(mpz_class(dv * su - du * sv), mpz_class(dv - du));
    return std::make_pair(a, b);
}

LinearityVerdict check_two_walk_linear(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("check_two_walk_linear: empty graph");
    auto ab = solve_ab(g);
    if (!ab) return Regular{};
    const auto& [a, b] = *ab;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long actual = vertex_sum(g, v);
        Rational expected = a * Rational(g.degree(v)) + b;
        if (expected != Rational(actual)) return NotLinear{v, expected, actual};
    }
    return Linear{a, b};
}

bool is_integral(const LinearityVerdict& verdict) {
    const auto* lin = std::get_if<Linear>(&verdict);
    if (!lin) throw std::logic_error("is_integral: verdict is not Linear");
    return lin->a.is_integer() && lin->b.is_integer();
}

std::string verdict_str(const LinearityVerdict& v) {
    if (is_regular(v)) return "regular";
    if (const auto* lin = std::get_if<Linear>(&v))
        return "linear(" + lin->a.str() + "," + lin->b.str() + ")";
    const auto& nl = std::get<NotLinear>(v);
    return "not-linear(witness=" + std::to_string(nl.witness) +
           ",expected=" + nl.expected_sum.str() + ",actual=" + std::to_string(nl.actual_sum) + ")";
}

}  // namespace twowalk
