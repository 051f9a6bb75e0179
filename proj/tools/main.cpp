// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubitope.h"

namespace {

using json = nlohmann::ordered_json;

struct ResultDeleter {
    void operator()(stp_result* r) const { stp_result_free(r); }
};
using Result = std::unique_ptr<stp_result, ResultDeleter>;

std::string g_output_path;
std::string g_format = "json";

int emit(Result result) {
    const stp_status status = stp_result_status(result.get());
    if (status == STP_BAD_INPUT || status == STP_INTERNAL) {
        std::cerr << "error: " << stp_result_error(result.get()) << "\n";
        return 2;
    }
    std::string body = stp_result_json(result.get());
    if (g_format == "csv") {
        // Tabular rendering for report-shaped documents; other documents
        // stay JSON regardless of the flag.
        const auto doc = json::parse(body);
        if (doc.contains("suite")) {
            std::string csv = "suite,corpus,seed,n_instances,n_failures,elapsed_ms\n";
            csv += doc["suite"].get<std::string>() + ",\"" + doc["corpus"].get<std::string>() +
                   "\"," + std::to_string(doc["seed"].get<std::uint64_t>()) + "," +
                   std::to_string(doc["n_instances"].get<int>()) + "," +
                   std::to_string(doc["n_failures"].get<int>()) + "," +
                   std::to_string(doc.value("elapsed_ms", 0LL)) + "\n";
            body = std::move(csv);
        }
    }
    if (!g_output_path.empty()) {
        std::ofstream out(g_output_path);
        if (!out) {
            std::cerr << "error: cannot write " << g_output_path << "\n";
            return 2;
        }
        out << body << "\n";
    } else {
        std::cout << body << "\n";
    }
    return status == STP_SUITE_FAIL ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubitopes, Newton polytopes, and lattice-freeness checks"};
    app.require_subcommand(1);

    if (const char* dir = std::getenv("SCHUBITOPE_OUTPUT_DIR"); dir && *dir)
        g_output_path = std::string(dir) + "/schubitope-output.json";
    app.add_option("-o,--output", g_output_path, "write the document to a file");
    app.add_option("--format", g_format, "json (default) or csv for reports")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string perm, comp, diagram, rows, family, suite;
    int n = 0, t = 1, jobs = 0, random_count = 200;
    std::uint64_t seed = 0;
    bool large = false, fail_fast = false, no_timing = false;

    auto add_diagram_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--perm", perm, "permutation, e.g. 365142 or [3,6,5,1,4,2]");
        cmd->add_option("--comp", comp, "composition, e.g. 4,1,3,0,2");
        cmd->add_option("--diagram", diagram, "diagram, e.g. \"1,3;2,3;1\" (needs --n)");
        cmd->add_option("--n", n, "ambient grid size for --diagram");
    };

    auto* cmd_diagram = app.add_subcommand("diagram", "build a diagram and its movable intervals");
    add_diagram_inputs(cmd_diagram);

    auto* cmd_theta = app.add_subcommand("theta", "theta values of a diagram");
    cmd_theta->add_option("--diagram", diagram, "diagram string")->required();
    cmd_theta->add_option("--n", n, "ambient grid size")->required();
    cmd_theta->add_option("--rows", rows, "row subset, e.g. 2,3 (empty for the empty set)");

    auto* cmd_points = app.add_subcommand("points", "lattice points of the dilated schubitope");
    cmd_points->add_option("--diagram", diagram, "diagram string")->required();
    cmd_points->add_option("--n", n, "ambient grid size")->required();
    cmd_points->add_option("--t", t, "dilation factor");

    auto* cmd_free = app.add_subcommand("lattice-free", "lattice-freeness verdict");
    add_diagram_inputs(cmd_free);

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial and factorization");
    add_diagram_inputs(cmd_ehrhart);

    auto* cmd_poly = app.add_subcommand("poly", "polynomial as sorted JSON terms");
    cmd_poly->add_option("family", family, "schubert | grothendieck | key")->required();
    cmd_poly->add_option("--perm", perm, "permutation input");
    cmd_poly->add_option("--comp", comp, "composition input");

    auto* cmd_newton = app.add_subcommand("newton", "Newton polytope and support properties");
    cmd_newton->add_option("family", family, "schubert | grothendieck | key")->required();
    cmd_newton->add_option("--perm", perm, "permutation input");
    cmd_newton->add_option("--comp", comp, "composition input");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite,
                           "schubitope-criterion | schubert | grothendieck | key")
        ->required();
    cmd_verify->add_option("--n", n, "symmetric group size for permutation suites");
    cmd_verify->add_option("--seed", seed, "random corpus seed");
    cmd_verify->add_option("--jobs", jobs, "parallel shards (default: hardware)");
    cmd_verify->add_option("--random-diagrams", random_count, "random corpus size");
    cmd_verify->add_flag("--large", large, "widen sweep bounds (S_6 / S_5)");
    cmd_verify->add_flag("--fail-fast", fail_fast, "stop at the first failure");
    cmd_verify->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-stable output");

    // Let the global --output/--format flags appear after a subcommand too.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto pick_input = [&](std::string& kind) -> const std::string& {
        int given = (!perm.empty()) + (!comp.empty()) + (!diagram.empty());
        if (given != 1) {
            std::cerr << "error: give exactly one of --perm, --comp, --diagram\n";
            std::exit(2);
        }
        if (!perm.empty()) {
            kind = "perm";
            return perm;
        }
        if (!comp.empty()) {
            kind = "comp";
            return comp;
        }
        kind = "diagram";
        return diagram;
    };

    if (cmd_diagram->parsed()) {
        std::string kind;
        const std::string& input = pick_input(kind);
        if (kind == "perm") kind = "rothe";
        if (kind == "comp") kind = "skyline";
        if (kind == "diagram") kind = "parse";
        return emit(Result(stp_diagram(kind.c_str(), input.c_str(), n)));
    }
    if (cmd_theta->parsed()) return emit(Result(stp_theta(diagram.c_str(), n, rows.c_str())));
    if (cmd_points->parsed()) return emit(Result(stp_points(diagram.c_str(), n, t)));
    if (cmd_free->parsed()) {
        std::string kind;
        const std::string& input = pick_input(kind);
        return emit(Result(stp_lattice_free(kind.c_str(), input.c_str(), n)));
    }
    if (cmd_ehrhart->parsed()) {
        std::string kind;
        const std::string& input = pick_input(kind);
        if (kind == "perm") kind = "rothe";
        if (kind == "comp") kind = "skyline";
        if (kind == "diagram") kind = "parse";
        return emit(Result(stp_ehrhart(kind.c_str(), input.c_str(), n)));
    }
    if (cmd_poly->parsed() || cmd_newton->parsed()) {
        const std::string& input = family == "key" ? comp : perm;
        if (input.empty()) {
            std::cerr << "error: " << (family == "key" ? "--comp" : "--perm") << " is required\n";
            return 2;
        }
        return emit(Result(cmd_poly->parsed() ? stp_poly(family.c_str(), input.c_str())
                                              : stp_newton(family.c_str(), input.c_str())));
    }
    if (cmd_verify->parsed()) {
        json options;
        if (n > 0) options["n"] = n;
        if (suite == "schubert" && n == 0) options["n"] = large ? 6 : 5;
        if (suite == "grothendieck" && n == 0) options["n"] = large ? 5 : 4;
        options["seed"] = seed;
        options["jobs"] = jobs;
        options["fail_fast"] = fail_fast;
        options["random_diagrams"] = random_count;
        options["timing"] = !no_timing;
        return emit(Result(stp_verify(suite.c_str(), options.dump().c_str())));
    }
    return 2;
}
