#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubitope/ehrhart.hpp"
#include "schubitope/io.hpp"
#include "schubitope/lattice.hpp"

using namespace schub;

TEST_CASE("interpolation of known counters") {
    // Unit square: (t+1)^2.
    const auto sq = ehrhart_interpolate(
        [](int t) { return static_cast<long long>(t + 1) * (t + 1); }, 2);
    CHECK(sq.coefficients() == std::vector<Rat>{1, 2, 1});
    // Standard triangle conv{0, e1, e2}: (t+1)(t+2)/2.
    const auto tri = ehrhart_interpolate(
        [](int t) { return static_cast<long long>(t + 1) * (t + 2) / 2; }, 2);
    CHECK(tri.degree() == 2);
    CHECK(tri.evaluate(10) == 66);
    // A point.
    CHECK(ehrhart_interpolate([](int) { return 1; }, 0) == EhrhartPolynomial::one());
}

TEST_CASE("validation holdout faults on a non-polynomial counter") {
    CHECK_THROWS_AS(
        ehrhart_interpolate([](int t) { return t <= 1 ? t + 1 : 100; }, 1),
        invariant_fault);
}

TEST_CASE("product and strings") {
    const EhrhartPolynomial a({Rat(1), Rat(1, 2)});
    const EhrhartPolynomial b({Rat(1), Rat(3, 2)});
    const auto p = a * b;
    CHECK(p.coefficients() == std::vector<Rat>{1, 2, Rat(3, 4)});
    CHECK(p.coefficient_strings() == std::vector<std::string>{"1", "2", "3/4"});
}

TEST_CASE("column base polytope polynomials") {
    // Single box: a point, polynomial 1.
    CHECK(column_base_polytope_ehrhart(parse_diagram("1", 2), 1) ==
          EhrhartPolynomial::one());
    // Empty column: polynomial 1 by convention.
    CHECK(column_base_polytope_ehrhart(parse_diagram(";1", 2), 1) ==
          EhrhartPolynomial::one());
    // Column {2} in n=2: segment conv{e1, e2}, polynomial t + 1.
    CHECK(column_base_polytope_ehrhart(parse_diagram("2", 2), 1) ==
          EhrhartPolynomial({Rat(1), Rat(1)}));
}

TEST_CASE("schubitope polynomials against direct counts") {
    const Diagram d = parse_diagram("1,3;2,3;1", 3);
    const ThetaTable theta(d);
    const auto fv = ehrhart_factorization_check(d);
    for (int t = 0; t <= 5; ++t)
        CHECK(fv.schubitope_side.evaluate(t) ==
              Int(dilated_schubitope_points(theta, t).size()));
    // Figure-one diagram violates the interval criterion, so the factorization
    // must fail.
    CHECK_FALSE(fv.equal);
    CHECK(fv.column_factors.size() == 3);
}

TEST_CASE("factorization holds for an interval-disjoint diagram") {
    // D(321) = ({1,2},{1}): M(D_1) = {3}, M(D_2) = {2}, disjoint.
    const Diagram d = rothe_diagram(parse_permutation("321"));
    const auto fv = ehrhart_factorization_check(d);
    CHECK(fv.equal);
    CHECK(fv.schubitope_side == fv.product_side);
    // Constant term 1.
    CHECK(fv.schubitope_side.evaluate(0) == 1);
}

TEST_CASE("empty diagram") {
    const auto fv = ehrhart_factorization_check(Diagram(3, {}));
    CHECK(fv.equal);
    CHECK(fv.schubitope_side == EhrhartPolynomial::one());
}
