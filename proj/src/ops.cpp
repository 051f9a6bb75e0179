#include "schubitope/ops.hpp"

#include "schubitope/ehrhart.hpp"
#include "schubitope/io.hpp"
#include "schubitope/lattice.hpp"
#include "schubitope/matroid.hpp"
#include "schubitope/patterns.hpp"
#include "schubitope/polynomial.hpp"
#include "schubitope/verify.hpp"

namespace schub::ops {

namespace {

json columns_json(const Diagram& d) {
    json cols = json::array();
    for (int j = 1; j <= d.n(); ++j) cols.push_back(subset_elements(d.column(j)));
    return cols;
}

json interval_json(const MovableInterval& m) {
    if (m.empty()) return json::array();
    json out = json::array();
    for (int r = m.lo; r <= m.hi; ++r) out.push_back(r);
    return out;
}

json points_json(const LatticePointSet& l) {
    json out = json::array();
    for (const auto& p : l.points()) out.push_back(p);
    return out;
}

json poly_json(const SparsePolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exponents"] = e;
        term["coeff"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json ehrhart_json(const EhrhartPolynomial& p) { return p.coefficient_strings(); }

Diagram diagram_from(const std::string& kind, const std::string& input, int n) {
    if (kind == "rothe") return rothe_diagram(parse_permutation(input));
    if (kind == "skyline") return skyline_diagram(parse_composition(input));
    if (kind == "parse" || kind == "diagram") {
        if (n <= 0) throw input_error("diagram input requires an explicit --n");
        return parse_diagram(input, n);
    }
    throw input_error("unknown diagram kind \"" + kind + "\"");
}

json diagram_document(const Diagram& d) {
    json out;
    out["n"] = d.n();
    out["columns"] = columns_json(d);
    out["string"] = format_diagram(d);
    out["box_count"] = d.box_count();
    json intervals = json::array();
    for (const auto& m : movable_intervals(d)) intervals.push_back(interval_json(m));
    out["movable_intervals"] = std::move(intervals);
    return out;
}

}  // namespace

json diagram(const std::string& kind, const std::string& input, int n) {
    json out = diagram_document(diagram_from(kind, input, n));
    if (kind == "rothe") out["permutation"] = input;
    if (kind == "skyline") out["composition"] = input;
    return out;
}

json theta(const std::string& diagram_text, int n, const std::string& rows_text) {
    const Diagram d = parse_diagram(diagram_text, n);
    Subset rows = 0;
    if (!rows_text.empty())
        rows = subset_from_elements(parse_composition(rows_text), n);
    json out;
    out["n"] = n;
    out["rows"] = subset_elements(rows);
    json per_column = json::array();
    int total = 0;
    for (int j = 1; j <= n; ++j) {
        json col;
        col["word"] = theta_word(d.column(j), rows, n);
        col["theta"] = theta_column(d.column(j), rows, n);
        total += theta_column(d.column(j), rows, n);
        per_column.push_back(std::move(col));
    }
    out["per_column"] = std::move(per_column);
    out["theta"] = total;
    return out;
}

json points(const std::string& diagram_text, int n, int t) {
    const Diagram d = parse_diagram(diagram_text, n);
    if (t < 0) throw input_error("t must be nonnegative");
    const auto h_points = dilated_schubitope_points(d, t);
    std::vector<std::vector<Point>> factors;
    for (int j = 1; j <= n; ++j)
        factors.push_back(SchubertMatroid(n, d.column(j)).basis_vectors());
    const auto m_points = dilated_minkowski_points(factors, n, t);
    json out;
    out["n"] = n;
    out["t"] = t;
    out["count"] = h_points.size();
    out["points"] = points_json(h_points);
    out["minkowski_points"] = points_json(m_points);
    out["agree"] = h_points == m_points;
    return out;
}

json lattice_free(const std::string& kind, const std::string& input, int n) {
    json out;
    Diagram d = [&] {
        if (kind == "perm") {
            const Permutation w = parse_permutation(input);
            out["avoids_patterns"] = avoids_lattice_free_patterns(w);
            out["hook_condition"] = hook_condition(w);
            return rothe_diagram(w);
        }
        if (kind == "comp") {
            const Composition alpha = parse_composition(input);
            out["avoids_02"] = composition_avoids_02(alpha);
            return skyline_diagram(alpha);
        }
        return diagram_from(kind, input, n);
    }();
    const auto verdict = lattice_free_check(dilated_schubitope_points(d, 1));
    const auto crit = criterion_check(d, CriterionMode::AtMostOne);
    json doc;
    doc["ok"] = verdict.ok;
    doc["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
    doc["criterion_ok"] = crit.ok;
    doc["criterion_witness"] =
        crit.ok ? json(nullptr) : json(std::vector<int>{crit.witness.first, crit.witness.second});
    doc["diagram"] = format_diagram(d);
    doc["n"] = d.n();
    for (auto& [k, v] : out.items()) doc[k] = v;
    return doc;
}

json ehrhart(const std::string& kind, const std::string& input, int n) {
    const Diagram d = diagram_from(kind, input, n);
    const auto verdict = ehrhart_factorization_check(d);
    json out;
    out["n"] = d.n();
    out["diagram"] = format_diagram(d);
    out["schubitope"] = ehrhart_json(verdict.schubitope_side);
    out["product"] = ehrhart_json(verdict.product_side);
    json factors = json::array();
    for (const auto& f : verdict.column_factors) factors.push_back(ehrhart_json(f));
    out["factors"] = std::move(factors);
    out["equal"] = verdict.equal;
    return out;
}

namespace {

SparsePolynomial family_polynomial(const std::string& family, const std::string& input) {
    if (family == "schubert") return schubert(parse_permutation(input));
    if (family == "grothendieck") return grothendieck(parse_permutation(input));
    if (family == "key") return key_polynomial(parse_composition(input));
    throw input_error("unknown polynomial family \"" + family + "\"");
}

}  // namespace

json poly(const std::string& family, const std::string& input) {
    const SparsePolynomial p = family_polynomial(family, input);
    json out;
    out["family"] = family;
    out["input"] = input;
    out["n"] = p.n_vars();
    out["terms"] = poly_json(p);
    return out;
}

json newton(const std::string& family, const std::string& input) {
    const SparsePolynomial p = family_polynomial(family, input);
    const auto support = p.support();
    const auto hull = hull_lattice_points(support);
    const auto free_verdict = lattice_free_check(hull);
    const auto checks = support_property_checks(support);
    std::vector<Point> vertices;
    for (const auto& q : hull.points())
        if (is_vertex(q, hull)) vertices.push_back(q);

    json out;
    out["family"] = family;
    out["input"] = input;
    out["n"] = p.n_vars();
    out["support"] = json(support);
    out["lattice_points"] = points_json(hull);
    out["vertices"] = json(vertices);
    out["lattice_free"] = free_verdict.ok;
    out["max_degrees"] = p.max_degrees();
    out["total_degree"] = p.total_degree();
    out["coefficient_sum"] = p.evaluate_at_ones().get_str();
    json props;
    props["interval_closed"] = checks.interval_closed;
    props["degree_raising"] = checks.degree_raising;
    props["unique_max"] = checks.unique_max;
    props["snp"] = checks.snp;
    out["properties"] = std::move(props);
    return out;
}

json verify(const std::string& suite, const json& options) {
    SuiteOptions opt;
    opt.seed = options.value("seed", std::uint64_t{0});
    opt.jobs = options.value("jobs", 0);
    opt.fail_fast = options.value("fail_fast", false);
    opt.random_diagrams = options.value("random_diagrams", 200);
    const bool timing = options.value("timing", true);

    Report report;
    if (suite == "schubitope-criterion") {
        report = verify_schubitope_criterion(opt);
    } else if (suite == "schubert") {
        report = verify_schubert_suite(options.value("n", 5), opt);
    } else if (suite == "grothendieck") {
        report = verify_grothendieck_suite(options.value("n", 4), opt);
    } else if (suite == "key") {
        report = verify_key_suite(options.value("max_part", 3), options.value("max_len", 4), opt);
    } else {
        throw input_error("unknown suite \"" + suite + "\"");
    }
    return report.to_json(timing);
}

}  // namespace schub::ops
