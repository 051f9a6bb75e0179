#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubitope/diagram.hpp"
#include "schubitope/io.hpp"
#include "schubitope/polynomial.hpp"

using namespace schub;

namespace {

SparsePolynomial mono(int n, Exponent e, long c = 1) {
    SparsePolynomial p(n);
    p.add_term(e, Int(c));
    return p;
}

}  // namespace

TEST_CASE("arithmetic and invariants") {
    auto p = mono(2, {1, 0});
    auto q = mono(2, {0, 1});
    auto s = p + q;
    CHECK(s.terms().size() == 2);
    CHECK((s - s).terms().empty());
    auto prod = s * s;  // x^2 + 2xy + y^2
    CHECK(prod.coefficient({1, 1}) == 2);
    CHECK(prod.total_degree() == 2);
    CHECK_THROWS_AS(p + mono(3, {0, 0, 0}), input_error);
}

TEST_CASE("divided difference by synthetic division") {
    // dd_1(x1^2 x2) = x1 x2
    auto f = mono(2, {2, 1});
    CHECK(divided_difference(f, 1) == mono(2, {1, 1}));
    // dd_i of a symmetric polynomial is zero.
    auto sym = mono(2, {1, 0}) + mono(2, {0, 1});
    CHECK(divided_difference(sym, 1).terms().empty());
    // dd_1(x1) = 1.
    CHECK(divided_difference(mono(2, {1, 0}), 1) == mono(2, {0, 0}));
}

TEST_CASE("Schubert polynomials, small cases") {
    CHECK(schubert(parse_permutation("12")) == mono(2, {0, 0}));
    CHECK(schubert(parse_permutation("21")) == mono(2, {1, 0}));
    CHECK(schubert(parse_permutation("132")) ==
          mono(3, {1, 0, 0}) + mono(3, {0, 1, 0}));
    CHECK(schubert(parse_permutation("321")) == mono(3, {2, 1, 0}));
    // w0 in S_4: staircase monomial.
    CHECK(schubert(parse_permutation("4321")) == mono(4, {3, 2, 1, 0}));
    // 312 -> x1^2.
    CHECK(schubert(parse_permutation("312")) == mono(3, {2, 0, 0}));
}

TEST_CASE("Schubert polynomial structure on S_4") {
    for (const auto& w : all_permutations(4)) {
        const auto f = schubert(w);
        CHECK(f.total_degree() == static_cast<int>(w.inversions()));
        CHECK(f.min_total_degree() == static_cast<int>(w.inversions()));  // homogeneous
        for (const auto& [e, c] : f.terms()) CHECK(c > 0);
        // Leading monomial in the code: x^{code(w)} appears with coefficient 1.
        const Diagram d = rothe_diagram(w);
        Exponent code(4, 0);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (contains(d.column(j), i)) ++code[i - 1];
        CHECK(f.coefficient(code) == 1);
    }
}

TEST_CASE("Grothendieck polynomials, small cases") {
    CHECK(grothendieck(parse_permutation("12")) == mono(2, {0, 0}));
    CHECK(grothendieck(parse_permutation("21")) == mono(2, {1, 0}));
    // G_132 = x1 + x2 - x1 x2.
    auto g = grothendieck(parse_permutation("132"));
    CHECK(g.coefficient({1, 0, 0}) == 1);
    CHECK(g.coefficient({0, 1, 0}) == 1);
    CHECK(g.coefficient({1, 1, 0}) == -1);
    CHECK(g.terms().size() == 3);
}

TEST_CASE("Grothendieck lowest component is the Schubert polynomial") {
    for (const auto& w : all_permutations(4)) {
        const auto g = grothendieck(w);
        CHECK(g.homogeneous_component(static_cast<int>(w.inversions())) ==
              schubert(w));
        CHECK(g.evaluate_at_ones() == 1);
    }
}

TEST_CASE("per-variable degrees equal the upper-closure weight") {
    for (const auto& w : all_permutations(5)) {
        const auto wt = upper_closure_weight(rothe_diagram(w));
        const auto ds = schubert(w).max_degrees();
        const auto dg = grothendieck(w).max_degrees();
        CHECK(ds == wt);
        CHECK(dg == wt);
    }
}

TEST_CASE("key polynomials, small cases") {
    CHECK(key_polynomial({0, 1}) == mono(2, {1, 0}) + mono(2, {0, 1}));
    CHECK(key_polynomial({0, 2}) ==
          mono(2, {2, 0}) + mono(2, {1, 1}) + mono(2, {0, 2}));
    CHECK(key_polynomial({2, 1}) == mono(2, {2, 1}));  // decreasing: single monomial
    // kappa_(1,0,1) = dd_2(x2 * x1 x2) = x1 x2 + x1 x3.
    CHECK(key_polynomial({1, 0, 1}) == mono(3, {1, 1, 0}) + mono(3, {1, 0, 1}));
}

TEST_CASE("key polynomial structure") {
    // Homogeneous of degree |alpha| with positive coefficients, and x^alpha
    // appears with coefficient 1.
    const std::vector<Composition> cases = {
        {0, 3}, {1, 2}, {2, 0, 1}, {0, 2, 1}, {3, 0, 2}, {1, 0, 2, 1}};
    for (const auto& a : cases) {
        const auto k = key_polynomial(a);
        int total = 0;
        Exponent e;
        for (int v : a) {
            total += v;
            e.push_back(v);
        }
        CHECK(k.total_degree() == total);
        CHECK(k.min_total_degree() == total);
        CHECK(k.coefficient(e) == 1);
        for (const auto& [ex, c] : k.terms()) CHECK(c > 0);
    }
}

TEST_CASE("key of a dominant (decreasing) shape equals the monomial") {
    CHECK(key_polynomial({4, 2, 1}) == mono(3, {4, 2, 1}));
    CHECK(key_polynomial({0, 0, 0}) == mono(3, {0, 0, 0}));
}

TEST_CASE("support extraction") {
    auto g = grothendieck(parse_permutation("132"));
    const auto pts = g.support();
    CHECK(pts.size() == 3);
}
