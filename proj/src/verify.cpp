#include "schubitope/verify.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <random>
#include <thread>

#include "schubitope/ehrhart.hpp"
#include "schubitope/io.hpp"
#include "schubitope/lattice.hpp"
#include "schubitope/matroid.hpp"
#include "schubitope/patterns.hpp"
#include "schubitope/polynomial.hpp"

namespace schub {

using json = nlohmann::ordered_json;

json Report::to_json(bool include_timing) const {
    json out;
    out["suite"] = suite;
    out["corpus"] = corpus;
    out["seed"] = seed;
    out["n_instances"] = n_instances;
    out["n_failures"] = n_failures();
    out["failures"] = failures;
    out["findings"] = findings;
    if (include_timing) out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string Report::canonical() const { return to_json(false).dump(); }

namespace {

struct InstanceResult {
    json failure;  // null when the instance passed
    json finding;  // null unless a non-failing divergence was observed
};

// Instance-level parallel sweep with order-independent aggregation: results
// land in a slot per instance and are merged in index order.
template <typename Check>
void sweep(Report& report, int count, const SuiteOptions& options, Check check) {
    const auto start = std::chrono::steady_clock::now();
    report.n_instances = count;

    int jobs = options.jobs > 0 ? options.jobs
                                : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, std::max(count, 1));

    std::vector<InstanceResult> results(count);
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        while (!stop.load()) {
            const int idx = next.fetch_add(1);
            if (idx >= count) return;
            results[idx] = check(idx);
            if (options.fail_fast && !results[idx].failure.is_null()) stop.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto& r : results) {
        if (!r.failure.is_null()) report.failures.push_back(std::move(r.failure));
        if (!r.finding.is_null()) report.findings.push_back(std::move(r.finding));
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
}

json failure_record(const std::string& instance, const std::string& detail,
                    const std::string& repro) {
    json f;
    f["instance"] = instance;
    f["detail"] = detail;
    f["repro"] = repro;
    return f;
}

std::vector<std::vector<Point>> column_basis_vertex_sets(const Diagram& d) {
    std::vector<std::vector<Point>> out;
    for (int j = 1; j <= d.n(); ++j)
        out.push_back(SchubertMatroid(d.n(), d.column(j)).basis_vectors());
    return out;
}

// The set-valued fillings of a column are capped at the lowest box row, so
// the realizable spanning sets live inside [max(D_j)]: take the spanning
// sets of the Schubert matroid on that smaller ground set, padded back to n
// coordinates. An empty column contributes only the origin.
std::vector<Point> column_spanning_vectors(const Diagram& d, int j) {
    const Subset col = d.column(j);
    if (col == 0) return {Point(d.n(), 0)};
    int max_row = 0;
    for (int i = 1; i <= d.n(); ++i)
        if (contains(col, i)) max_row = i;
    std::vector<Point> out;
    for (Point v : SchubertMatroid(max_row, col).spanning_vectors()) {
        v.resize(d.n(), 0);
        out.push_back(std::move(v));
    }
    return out;
}

// Three-way Theorem 1.1 check plus the dilation oracle comparison; returns an
// empty string on success, a diagnostic otherwise.
std::string check_diagram_equivalence(const Diagram& d) {
    const bool crit = criterion_check(d, CriterionMode::AtMostOne).ok;
    const auto points = dilated_schubitope_points(d, 1);
    const bool lattice_free = lattice_free_check(points).ok;
    const auto factorization = ehrhart_factorization_check(d);
    if (crit != lattice_free || crit != factorization.equal)
        return "criterion=" + std::to_string(crit) +
               " lattice_free=" + std::to_string(lattice_free) +
               " ehrhart_factors=" + std::to_string(factorization.equal);
    if (factorization.schubitope_side.coefficients()[0] != 1)
        return "Ehrhart constant term is not 1";

    const auto factors = column_basis_vertex_sets(d);
    for (int t = 0; t <= 3; ++t)
        if (!(dilated_schubitope_points(d, t) == dilated_minkowski_points(factors, d.n(), t)))
            return "H-description vs Minkowski point sets differ at t=" + std::to_string(t);
    return "";
}

}  // namespace

std::vector<Diagram> random_diagrams(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Diagram> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        std::vector<Subset> cols(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 1; i <= n; ++i)
                if (rng() & 1u) cols[j] = with(cols[j], i);
        out.emplace_back(n, std::move(cols));
    }
    return out;
}

bool contains_pattern_bruteforce(const Permutation& w, const Permutation& tau) {
    const int n = w.size(), k = tau.size();
    if (k > n) return false;
    std::vector<int> idx(k);
    // Enumerate all k-subsets of positions.
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        bool match = true;
        for (int a = 0; a < k && match; ++a)
            for (int b = a + 1; b < k && match; ++b)
                match = (w(idx[a] + 1) < w(idx[b] + 1)) == (tau(a + 1) < tau(b + 1));
        if (match) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

Report verify_schubitope_criterion(const SuiteOptions& options) {
    Report report;
    report.suite = "schubitope-criterion";
    report.seed = options.seed;

    std::vector<Diagram> corpus;
    for (Subset c1 = 0; c1 < 8; ++c1)
        for (Subset c2 = 0; c2 < 8; ++c2)
            for (Subset c3 = 0; c3 < 8; ++c3)
                corpus.emplace_back(3, std::vector<Subset>{c1, c2, c3});
    const int small_count = static_cast<int>(corpus.size());
    for (auto& d : random_diagrams(4, options.random_diagrams, options.seed))
        corpus.push_back(std::move(d));
    report.corpus = std::to_string(small_count) + " diagrams over [3]^3 plus " +
                    std::to_string(options.random_diagrams) + " random diagrams in [4]^4";

    sweep(report, static_cast<int>(corpus.size()), options, [&](int idx) {
        InstanceResult r;
        const Diagram& d = corpus[idx];
        const std::string detail = check_diagram_equivalence(d);
        if (!detail.empty())
            r.failure = failure_record(
                format_diagram(d), detail,
                "schubitope lattice-free --diagram \"" + format_diagram(d) + "\" --n " +
                    std::to_string(d.n()));
        return r;
    });
    return report;
}

Report verify_schubert_suite(int n, const SuiteOptions& options) {
    if (n < 2 || n > 6) throw input_error("schubert suite supports 2 <= n <= 6");
    Report report;
    report.suite = "schubert";
    report.corpus = "all permutations of S_" + std::to_string(n);
    report.seed = options.seed;

    const auto perms = all_permutations(n);
    sweep(report, static_cast<int>(perms.size()), options, [&](int idx) {
        InstanceResult r;
        const Permutation& w = perms[idx];
        const std::string key = format_permutation(w);
        const std::string repro = "schubitope lattice-free --perm " + key;

        const Diagram d = rothe_diagram(w);
        const bool avoid = avoids_lattice_free_patterns(w);
        bool avoid_oracle = true;
        for (const auto& pat :
             {Permutation({1, 4, 2, 3}), Permutation({1, 4, 3, 2}), Permutation({1, 3, 2, 5, 4})})
            if (contains_pattern_bruteforce(w, pat)) avoid_oracle = false;
        const bool hook = hook_condition(w);
        const bool disjoint = criterion_check(d, CriterionMode::Disjoint).ok;
        const bool at_most_one = criterion_check(d, CriterionMode::AtMostOne).ok;
        const auto points = dilated_schubitope_points(d, 1);
        const bool lattice_free = lattice_free_check(points).ok;
        const bool factors = ehrhart_factorization_check(d).equal;

        if (avoid != avoid_oracle) {
            r.failure = failure_record(key, "pattern checker disagrees with brute force", repro);
            return r;
        }
        if (avoid != hook || avoid != disjoint) {
            r.failure = failure_record(key, "pattern/hook/disjoint-interval equivalence broke",
                                       repro);
            return r;
        }
        if (lattice_free != disjoint || lattice_free != avoid || lattice_free != factors) {
            r.failure = failure_record(
                key,
                "four-way equivalence broke: lattice_free=" + std::to_string(lattice_free) +
                    " disjoint=" + std::to_string(disjoint) + " avoids=" + std::to_string(avoid) +
                    " ehrhart=" + std::to_string(factors),
                repro);
            return r;
        }
        if (at_most_one != disjoint)
            r.finding = json{{"kind", "criterion_divergence"},
                             {"instance", key},
                             {"note", "at-most-one and disjoint criterion modes diverge"}};
        if (n <= 5) {
            const auto support = schubert(w).support();
            if (!(LatticePointSet(n, support) == points)) {
                r.failure = failure_record(key, "Schubert support != Schubitope lattice points",
                                           repro);
                return r;
            }
        }
        return r;
    });
    return report;
}

Report verify_grothendieck_suite(int n, const SuiteOptions& options) {
    if (n < 2 || n > 5) throw input_error("grothendieck suite supports 2 <= n <= 5");
    Report report;
    report.suite = "grothendieck";
    report.corpus = "all permutations of S_" + std::to_string(n);
    report.seed = options.seed;

    const auto perms = all_permutations(n);
    sweep(report, static_cast<int>(perms.size()), options, [&](int idx) {
        InstanceResult r;
        const Permutation& w = perms[idx];
        const std::string key = format_permutation(w);
        const std::string repro = "schubitope newton grothendieck --perm " + key;

        const Diagram d = rothe_diagram(w);
        const SparsePolynomial g = grothendieck(w);
        const SparsePolynomial s = schubert(w);

        // Laws that hold for every permutation.
        if (g.evaluate_at_ones() != 1) {
            r.failure = failure_record(key, "G_w(1,...,1) != 1", repro);
            return r;
        }
        const auto weight = upper_closure_weight(d);
        if (g.max_degrees() != s.max_degrees() || g.max_degrees() != weight) {
            r.failure = failure_record(key, "d_i(G_w) = d_i(S_w) = wt(upper closure) broke",
                                       repro);
            return r;
        }
        if (!(g.homogeneous_component(g.min_total_degree()) == s)) {
            r.failure = failure_record(key, "lowest-degree component of G_w is not S_w", repro);
            return r;
        }

        const auto support = g.support();
        const auto hull = hull_lattice_points(support);
        const bool lattice_free = lattice_free_check(hull).ok;
        const bool avoid = avoids_lattice_free_patterns(w);
        if (lattice_free != avoid) {
            r.failure = failure_record(
                key, "Newton(G_w) lattice-freeness does not match pattern avoidance", repro);
            return r;
        }
        if (!avoid) return r;

        // Structural consequences for the avoiding class.
        std::vector<std::vector<Point>> spanning_factors;
        for (int j = 1; j <= n; ++j) spanning_factors.push_back(column_spanning_vectors(d, j));
        if (!(hull == dilated_minkowski_points(spanning_factors, n, 1))) {
            r.failure = failure_record(
                key, "Newton(G_w) lattice points != spanning-set Minkowski sum", repro);
            return r;
        }

        const int dim = affine_dimension(hull.points());
        const auto lhs = ehrhart_interpolate(
            [&support](int t) {
                std::vector<Point> scaled;
                scaled.reserve(support.size());
                for (const auto& p : support) {
                    Point q(p.size());
                    for (std::size_t i = 0; i < p.size(); ++i) q[i] = t * p[i];
                    scaled.push_back(std::move(q));
                }
                return static_cast<long long>(hull_lattice_points(scaled).size());
            },
            dim);
        EhrhartPolynomial rhs = EhrhartPolynomial::one();
        for (const auto& factor : spanning_factors) {
            const int fdim = affine_dimension(factor);
            rhs = rhs * ehrhart_interpolate(
                            [&factor, n](int t) {
                                return static_cast<long long>(
                                    dilated_minkowski_points({factor}, n, t).size());
                            },
                            fdim);
        }
        if (!(lhs == rhs)) {
            r.failure = failure_record(
                key, "Ehrhart of Newton(G_w) != product over spanning-set polytopes", repro);
            return r;
        }

        const auto checks = support_property_checks(support);
        if (!checks.interval_closed || !checks.degree_raising || !checks.unique_max ||
            !checks.snp) {
            r.failure = failure_record(key, "support property checks failed", repro);
            return r;
        }
        if (!gp_certificate(hull).ok) {
            r.failure = failure_record(key, "generalized polymatroid certificate failed", repro);
            return r;
        }
        if (g.homogeneous_component(g.total_degree()).term_count() != 1) {
            r.failure = failure_record(key, "top-degree component is not a single term", repro);
            return r;
        }
        return r;
    });
    return report;
}

Report verify_key_suite(int max_part, int max_len, const SuiteOptions& options) {
    if (max_part < 0 || max_len < 1 || max_len > 6 || max_part > max_len)
        throw input_error("key suite requires 1 <= length <= 6 and 0 <= parts <= length");
    Report report;
    report.suite = "key";
    report.corpus = "all compositions with parts <= " + std::to_string(max_part) +
                    ", length " + std::to_string(max_len);
    report.seed = options.seed;

    std::vector<Composition> corpus;
    Composition alpha(max_len, 0);
    while (true) {
        corpus.push_back(alpha);
        int pos = max_len - 1;
        while (pos >= 0 && alpha[pos] == max_part) alpha[pos--] = 0;
        if (pos < 0) break;
        ++alpha[pos];
    }

    sweep(report, static_cast<int>(corpus.size()), options, [&](int idx) {
        InstanceResult r;
        const Composition& alpha = corpus[idx];
        const std::string key = format_composition(alpha);
        const std::string repro = "schubitope lattice-free --comp " + key;

        const Diagram d = skyline_diagram(alpha);
        const auto points = dilated_schubitope_points(d, 1);
        const bool lattice_free = lattice_free_check(points).ok;
        const bool avoids = composition_avoids_02(alpha);
        const bool factors = ehrhart_factorization_check(d).equal;
        if (lattice_free != avoids || lattice_free != factors) {
            r.failure = failure_record(
                key,
                "three-way equivalence broke: lattice_free=" + std::to_string(lattice_free) +
                    " avoids_02=" + std::to_string(avoids) +
                    " ehrhart=" + std::to_string(factors),
                repro);
            return r;
        }

        const auto support = key_polynomial(alpha).support();
        if (!(LatticePointSet(max_len, support) == points)) {
            r.failure = failure_record(key, "key support != Schubitope lattice points", repro);
            return r;
        }
        const auto closures = key_closures(alpha);
        if (!(closures.lattice_points == points)) {
            r.failure = failure_record(key, "t/m-move closure != lattice point set", repro);
            return r;
        }
        std::vector<Point> vertex_points;
        for (const auto& p : points.points())
            if (is_vertex(p, points)) vertex_points.push_back(p);
        if (!(LatticePointSet(max_len, vertex_points) == closures.vertices)) {
            r.failure = failure_record(key, "t-move closure != vertex set", repro);
            return r;
        }
        return r;
    });
    return report;
}

}  // namespace schub
