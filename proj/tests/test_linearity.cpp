#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twowalk/families.hpp"
#include "twowalk/linearity.hpp"
#include "twowalk/rational.hpp"

using namespace twowalk;
using namespace twowalk::testing;

TEST_CASE("rational invariants") {
    Rational r(mpz_class(4), mpz_class(-6));
    CHECK(r.numerator() == -2);
    CHECK(r.denominator() == 3);
    CHECK_FALSE(r.is_integer());
    CHECK(r.str() == "-2/3");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(mpz_class(6), mpz_class(3)) == Rational(2));
    CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), std::invalid_argument);
}

TEST_CASE("vertex_sum") {
    CHECK(vertex_sum(star_graph(3), 0) == 3);       // three leaves of degree 1
    CHECK(vertex_sum(cycle_graph(5), 2) == 4);      // two neighbors of degree 2
    Graph h1 = build_h(1);
    int hub = -1;
    for (int v = 0; v < h1.vertex_count(); ++v)
        if (h1.degree(v) == 6) hub = v;
    REQUIRE(hub >= 0);
    CHECK(vertex_sum(h1, hub) == 12);               // six neighbors of degree 2
    CHECK_THROWS_AS(vertex_sum(star_graph(3), 4), std::out_of_range);
}

TEST_CASE("solve_ab on hand-computed small graphs") {
    auto p3 = solve_ab(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->first == Rational(0));
    CHECK(p3->second == Rational(2));

    auto p4 = solve_ab(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->first == Rational(1));
    CHECK(p4->second == Rational(1));

    CHECK_FALSE(solve_ab(cycle_graph(6)).has_value());
}

TEST_CASE("check_two_walk_linear verdicts") {
    auto h1 = check_two_walk_linear(build_h(1));
    REQUIRE(is_linear(h1));
    CHECK(std::get<Linear>(h1).a == Rational(1));
    CHECK(std::get<Linear>(h1).b == Rational(6));

    auto h7 = check_two_walk_linear(build_h(7));
    REQUIRE(is_linear(h7));
    CHECK(std::get<Linear>(h7).a == Rational(3));
    CHECK(std::get<Linear>(h7).b == Rational(0));

    // P5: the two degree-2 vertex sums 3 and 4 cannot sit on one line with
    // the endpoint equation
    auto p5 = check_two_walk_linear(path_graph(5));
    REQUIRE(std::holds_alternative<NotLinear>(p5));
    const auto& nl = std::get<NotLinear>(p5);
    CHECK(nl.expected_sum != Rational(nl.actual_sum));

    CHECK(is_regular(check_two_walk_linear(cycle_graph(6))));
    CHECK(is_regular(check_two_walk_linear(complete_graph(4))));
}

TEST_CASE("single vertex and K2 are regular") {
    CHECK(is_regular(check_two_walk_linear(Graph::from_edge_list(1, {}))));
    CHECK(is_regular(check_two_walk_linear(path_graph(2))));
    CHECK_THROWS_AS(check_two_walk_linear(Graph::from_edge_list(0, {})), std::invalid_argument);
}

TEST_CASE("is_integral") {
    CHECK(is_integral(LinearityVerdict(Linear{Rational(1), Rational(6)})));
    CHECK_FALSE(is_integral(LinearityVerdict(Linear{Rational(mpz_class(3), mpz_class(2)), Rational(1)})));
    CHECK(is_integral(LinearityVerdict(Linear{Rational(0), Rational(3)})));
    CHECK_THROWS_AS(is_integral(LinearityVerdict(Regular{})), std::logic_error);
}

TEST_CASE("verdict is independent of the seeding pair") {
    // check S(v) = a*d(v) + b directly at every vertex for every seed pair
    for (int i : {1, 7, 13, 20}) {
        Graph g = build_h(i);
        auto verdict = check_two_walk_linear(g);
        REQUIRE(is_linear(verdict));
        const auto& lin = std::get<Linear>(verdict);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                if (g.degree(u) == g.degree(v)) continue;
                long du = g.degree(u), dv = g.degree(v);
                long su = vertex_sum(g, u), sv = vertex_sum(g, v);
                Rational a(mpz_class(sv - su), mpz_class(dv - du));
                Rational b(mpz_class(dv * su - du * sv), mpz_class(dv - du));
                CHECK(a == lin.a);
                CHECK(b == lin.b);
            }
        }
    }
}

TEST_CASE("linear verdicts re-verify at every vertex") {
    for (int i = 1; i <= 30; ++i) {
        Graph g = build_h(i);
        auto verdict = check_two_walk_linear(g);
        REQUIRE(is_linear(verdict));
        const auto& lin = std::get<Linear>(verdict);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(lin.a * Rational(g.degree(v)) + lin.b == Rational(vertex_sum(g, v)));
    }
}

TEST_CASE("degree-sum identity: sum of S(v) equals sum of d(v)^2") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 10);
        long lhs = 0, rhs = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            lhs += vertex_sum(g, v);
            rhs += static_cast<long>(g.degree(v)) * g.degree(v);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("regular graphs never come back Linear") {
    std::mt19937 rng(29);
    for (int n : {3, 4, 5, 6, 8, 10, 12}) {
        CHECK(is_regular(check_two_walk_linear(cycle_graph(n))));
        if (n % 2 == 0) CHECK(is_regular(check_two_walk_linear(complete_graph(n))));
    }
    (void)rng;
}
