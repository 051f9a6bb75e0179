#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "schubitope/io.hpp"
#include "schubitope/lattice.hpp"
#include "schubitope/lp.hpp"

using namespace schub;

namespace {

// Independent dilation oracle: t-fold sums of the t=1 point set of a
// schubitope are contained in the H-description, so for small cases the
// H-description points can be cross-checked against a direct filter of a box.
LatticePointSet points_bruteforce(const Diagram& d, int t) {
    const ThetaTable theta(d);
    const int n = d.n();
    const long long total = static_cast<long long>(t) * d.box_count();
    std::vector<Point> out;
    std::vector<int> cap(n);
    for (int i = 0; i < n; ++i) cap[i] = t * theta.theta(Subset{1} << i);
    Point p(n, 0);
    const std::function<void(int, long long)> rec = [&](int i, long long sum) {
        if (i == n) {
            if (sum != total) return;
            for (Subset s = 1; s < (Subset{1} << n); ++s) {
                long long acc = 0;
                for (int k = 0; k < n; ++k)
                    if (contains(s, k + 1)) acc += p[k];
                if (acc > static_cast<long long>(t) * theta.theta(s)) return;
            }
            out.push_back(p);
            return;
        }
        for (int v = 0; v <= cap[i] && sum + v <= total; ++v) {
            p[i] = v;
            rec(i + 1, sum + v);
        }
        p[i] = 0;
    };
    rec(0, 0);
    return LatticePointSet(n, std::move(out));
}

std::vector<Point> sums_bruteforce(const std::vector<Point>& pts, int t, int dim) {
    std::set<Point> cur{Point(dim, 0)};
    for (int k = 0; k < t; ++k) {
        std::set<Point> next;
        for (const auto& a : cur)
            for (const auto& b : pts) {
                Point c = a;
                for (int i = 0; i < dim; ++i) c[i] += b[i];
                next.insert(std::move(c));
            }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

}  // namespace

TEST_CASE("exact LP convex hull membership") {
    const std::vector<Point> tri = {{0, 0}, {2, 0}, {0, 2}};
    CHECK(in_convex_hull({1, 1}, tri));     // edge midpoint
    CHECK(in_convex_hull({0, 0}, tri));     // vertex
    CHECK_FALSE(in_convex_hull({2, 2}, tri));
    CHECK_FALSE(in_convex_hull({1, 2}, tri));
    CHECK(in_convex_hull({1, 0}, {{0, 0}, {2, 0}}));  // segment
    CHECK_FALSE(in_convex_hull({1, 1}, {{0, 0}, {2, 0}}));
}

TEST_CASE("schubitope lattice points: published single-column case") {
    // Column {1,3} in n=3: vertices are the bases {1,2}, {1,3} of SM_3({1,3}).
    const Diagram d = parse_diagram("1,3", 3);
    const auto l = dilated_schubitope_points(d, 1);
    CHECK(l.points() == std::vector<Point>{{1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("schubitope points agree with the unpruned filter") {
    const std::vector<Diagram> cases = {
        parse_diagram("1,3;2,3;1", 3),
        rothe_diagram(parse_permutation("1423")),
        skyline_diagram({2, 0, 2}),
        rothe_diagram(parse_permutation("321")),
    };
    for (const auto& d : cases)
        for (int t = 0; t <= 3; ++t)
            CHECK(dilated_schubitope_points(d, t) == points_bruteforce(d, t));
}

TEST_CASE("t = 0 dilate is the origin") {
    const Diagram d = rothe_diagram(parse_permutation("321"));
    CHECK(dilated_schubitope_points(d, 0).points() == std::vector<Point>{{0, 0, 0}});
    CHECK(dilated_schubitope_points(Diagram(3, {}), 2).points() ==
          std::vector<Point>{{0, 0, 0}});
}

TEST_CASE("minkowski layer sums match brute force") {
    const std::vector<Point> a = {{1, 0}, {0, 1}};
    const std::vector<Point> b = {{1, 1}};
    for (int t = 0; t <= 3; ++t) {
        const auto got = dilated_minkowski_points({a, b}, 2, t);
        std::set<Point> expect;
        for (const auto& pa : sums_bruteforce(a, t, 2))
            for (const auto& pb : sums_bruteforce(b, t, 2)) {
                Point c = pa;
                c[0] += pb[0];
                c[1] += pb[1];
                expect.insert(std::move(c));
            }
        CHECK(got.points() == std::vector<Point>(expect.begin(), expect.end()));
    }
}

TEST_CASE("spanning polytope self-sums") {
    // SM_2({2}): spanning sets {1}, {2}, {1,2}; the 2-fold sum has 6 points,
    // confirmed by direct pairwise addition.
    SchubertMatroid m(2, subset_from_elements({2}, 2));
    const auto got = spanning_polytope_points(m, 2);
    const auto expect = sums_bruteforce(m.spanning_vectors(), 2, 2);
    CHECK(got.points() == expect);
    CHECK(got.size() == 6);
    CHECK(spanning_polytope_points(m, 0).points() == std::vector<Point>{{0, 0}});
}

TEST_CASE("vertex detection") {
    const LatticePointSet sq(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    for (const auto& p : sq.points()) CHECK(is_vertex(p, sq));
    const LatticePointSet seg(2, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(is_vertex({0, 0}, seg));
    CHECK_FALSE(is_vertex({1, 1}, seg));
    CHECK_THROWS_AS(is_vertex({5, 5}, seg), input_error);
}

TEST_CASE("lattice free check") {
    CHECK(lattice_free_check(LatticePointSet(2, {{0, 0}, {1, 0}, {0, 1}})).ok);
    const auto bad = lattice_free_check(LatticePointSet(2, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness == Point{1, 1});
    // The running-example diagram is not lattice-free: (3,1,1) is the
    // midpoint of the vertices (3,0,2) and (3,2,0).
    const auto v = lattice_free_check(
        dilated_schubitope_points(parse_diagram("1,3;2,3;1", 3), 1));
    CHECK_FALSE(v.ok);
    CHECK(v.witness == Point{3, 1, 1});
}

TEST_CASE("hull lattice points") {
    const auto got = hull_lattice_points({{0, 0}, {2, 0}, {0, 2}});
    CHECK(got.size() == 6);
    CHECK(got.contains({1, 1}));
    CHECK_FALSE(got.contains({1, 2}));
    CHECK(hull_lattice_points({{3, 4}}).points() == std::vector<Point>{{3, 4}});
}

TEST_CASE("generalized polymatroid certificate") {
    // Any single-column schubitope is a matroid base polytope, hence a g-p.
    CHECK(gp_certificate(dilated_schubitope_points(parse_diagram("1,3", 3), 1)).ok);
    // The diagonal pair {(0,0),(1,1)} is not a g-p: the subset-sum region
    // contains (0,1) and (1,0), which are not in the set.
    const auto bad = gp_certificate(LatticePointSet(2, {{0, 0}, {1, 1}}));
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.region_matches);
}

TEST_CASE("support property checks") {
    // Diagonal pair: fails interval closure, passes snp (both points are
    // vertices, hull has no other lattice points).
    const auto diag = support_property_checks({{0, 0}, {1, 1}});
    CHECK_FALSE(diag.interval_closed);
    CHECK(diag.snp);
    // Segment with a hole: snp fails.
    const auto hole = support_property_checks({{0, 0}, {2, 0}});
    CHECK_FALSE(hole.snp);
    CHECK(support_property_checks({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).snp);
}

TEST_CASE("key closures") {
    // alpha = (0,2): swaps reach (2,0); lattice moves fill in (1,1).
    const auto c = key_closures({0, 2});
    CHECK(c.vertices.points() == std::vector<Point>{{0, 2}, {2, 0}});
    CHECK(c.lattice_points.points() == std::vector<Point>{{0, 2}, {1, 1}, {2, 0}});
    // Weakly decreasing alpha is fixed by both closures.
    const auto fixed = key_closures({3, 1});
    CHECK(fixed.vertices.points() == std::vector<Point>{{3, 1}});
    CHECK(fixed.lattice_points.points() == std::vector<Point>{{3, 1}});
}

TEST_CASE("affine dimension") {
    CHECK(affine_dimension({{1, 2, 3}}) == 0);
    CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
    CHECK(affine_dimension({{0, 0}, {1, 0}, {0, 1}}) == 2);
    CHECK(affine_dimension({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
}
