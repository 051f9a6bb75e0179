#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SCHUB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("diagram subcommand") {
    const auto r = run_cli("diagram --perm 365142");
    CHECK(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["n"] == 6);
    CHECK(j["box_count"] == 10);

    const auto d = run_cli("diagram --diagram \"1,3;2,3;1\" --n 3");
    CHECK(d.exit_code == 0);
    const auto dj = json::parse(d.out);
    CHECK(dj["movable_intervals"][0] == json::array({2, 3}));
    CHECK(dj["movable_intervals"][1] == json::array({1, 2, 3}));
    CHECK(dj["movable_intervals"][2].empty());
}

TEST_CASE("exactly one input source is enforced") {
    CHECK(run_cli("diagram --perm 321 --comp 1,2").exit_code == 2);
    CHECK(run_cli("diagram").exit_code == 2);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run_cli("diagram --perm 14x3").exit_code == 2);
    CHECK(run_cli("diagram --diagram \"1,9;2\" --n 3").exit_code == 2);
    CHECK(run_cli("poly mystery --perm 132").exit_code == 2);
}

TEST_CASE("theta and points") {
    const auto t = run_cli("theta --diagram \"1,3;2,3;1\" --n 3 --rows 2,3");
    CHECK(t.exit_code == 0);
    CHECK(json::parse(t.out)["theta"] == 3);

    const auto p = run_cli("points --diagram \"1,3\" --n 3 --t 2");
    CHECK(p.exit_code == 0);
    const auto j = json::parse(p.out);
    CHECK(j["agree"] == true);
    CHECK(j["count"] == 3);
}

TEST_CASE("lattice-free and ehrhart") {
    const auto lf = run_cli("lattice-free --perm 1423");
    CHECK(lf.exit_code == 0);
    CHECK(json::parse(lf.out)["ok"] == false);

    const auto e = run_cli("ehrhart --comp 2,1");
    CHECK(e.exit_code == 0);
    CHECK(json::parse(e.out)["equal"] == true);
}

TEST_CASE("poly and newton") {
    const auto p = run_cli("poly key --comp 0,2");
    CHECK(p.exit_code == 0);
    CHECK(json::parse(p.out)["terms"].size() == 3);

    const auto nw = run_cli("newton grothendieck --perm 132");
    CHECK(nw.exit_code == 0);
    const auto j = json::parse(nw.out);
    CHECK(j["coefficient_sum"] == "1");
    CHECK(j["support"].size() == 3);

    CHECK(run_cli("poly schubert").exit_code == 2);  // missing --perm
}

TEST_CASE("verify exits 0 on pass and reports counts") {
    const auto r = run_cli("verify key --jobs 2");
    CHECK(r.exit_code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["suite"] == "key");
    CHECK(j["n_failures"] == 0);
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("verify --no-timing output is byte-stable across seeds and jobs") {
    const std::string args =
        "verify schubitope-criterion --seed 5 --random-diagrams 10 --no-timing";
    const auto a = run_cli(args + " --jobs 1");
    const auto b = run_cli(args + " --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run_cli("verify schubitope-criterion --seed 6 --random-diagrams 10"
                           " --no-timing --jobs 2");
    CHECK(a.out != c.out);
}

TEST_CASE("output file and csv format") {
    const std::string path = "/tmp/schub_cli_test_out.json";
    std::remove(path.c_str());
    const auto r = run_cli("diagram --perm 321 -o " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    CHECK(j["box_count"] == 3);
    std::remove(path.c_str());

    const auto csv = run_cli("verify key --format csv --jobs 2");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("suite,corpus,seed", 0) == 0);
}
