#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schubitope/patterns.hpp"
#include "schubitope/verify.hpp"

using namespace schub;

TEST_CASE("pattern search agrees with the subset-enumeration oracle") {
    const std::vector<Permutation> patterns = {
        Permutation({1, 4, 2, 3}), Permutation({1, 4, 3, 2}), Permutation({1, 3, 2, 5, 4})};
    for (const auto& w : all_permutations(5))
        for (const auto& tau : patterns)
            CHECK(contains_pattern(w, tau).found == contains_pattern_bruteforce(w, tau));
}

TEST_CASE("random diagram corpus is deterministic in the seed") {
    const auto a = random_diagrams(4, 10, 42);
    const auto b = random_diagrams(4, 10, 42);
    const auto c = random_diagrams(4, 10, 43);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() == 10);
    for (const auto& d : a) CHECK(d.n() == 4);
}

TEST_CASE("schubert suite passes for small n") {
    SuiteOptions opt;
    opt.jobs = 2;
    for (int n = 2; n <= 4; ++n) {
        const auto r = verify_schubert_suite(n, opt);
        CHECK(r.pass());
        CHECK(r.n_instances == (n == 2 ? 2 : n == 3 ? 6 : 24));
    }
}

TEST_CASE("schubert suite: criterion modes never diverge on Rothe diagrams") {
    // Movable intervals of a Rothe diagram never meet in exactly one row:
    // at-most-one and disjoint coincide, so the divergence finding stays
    // empty. (General diagrams can diverge; see the combinatorics tests.)
    SuiteOptions opt;
    opt.jobs = 2;
    const auto r = verify_schubert_suite(4, opt);
    CHECK(r.pass());
    for (const auto& f : r.findings) CHECK(f["kind"] != "criterion_divergence");
}

TEST_CASE("key suite passes on a small grid") {
    SuiteOptions opt;
    opt.jobs = 2;
    const auto r = verify_key_suite(2, 3, opt);
    CHECK(r.pass());
    CHECK(r.n_instances == 27);
}

TEST_CASE("grothendieck suite passes for S_3") {
    SuiteOptions opt;
    opt.jobs = 2;
    const auto r = verify_grothendieck_suite(3, opt);
    CHECK(r.pass());
    CHECK(r.n_instances == 6);
}

TEST_CASE("criterion suite on a reduced random corpus") {
    SuiteOptions opt;
    opt.jobs = 2;
    opt.seed = 7;
    opt.random_diagrams = 20;
    const auto r = verify_schubitope_criterion(opt);
    CHECK(r.pass());
    CHECK(r.n_instances == 512 + 20);
}

TEST_CASE("reports are byte-identical for equal seeds") {
    SuiteOptions a, b;
    a.seed = b.seed = 99;
    a.random_diagrams = b.random_diagrams = 10;
    a.jobs = 1;
    b.jobs = 4;  // concurrency must not affect the canonical report
    CHECK(verify_schubitope_criterion(a).canonical() ==
          verify_schubitope_criterion(b).canonical());
}

TEST_CASE("report json shape") {
    SuiteOptions opt;
    opt.jobs = 2;
    const auto r = verify_key_suite(1, 2, opt);
    const auto j = r.to_json();
    CHECK(j.contains("suite"));
    CHECK(j.contains("n_instances"));
    CHECK(j.contains("failures"));
    CHECK(j.contains("elapsed_ms"));
    const auto canonical = nlohmann::ordered_json::parse(r.canonical());
    CHECK_FALSE(canonical.contains("elapsed_ms"));
}
