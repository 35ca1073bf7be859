#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("interval extraction over the two-urn model") {
    auto r = run_cli("intervals " + fixture("example1.json") +
                     " --event u1r,u1w --given u1r,u2r --method choquet-full");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"method\": \"choquet-full\""));
    CHECK(contains(r.out, "\"lower\": 0.993079"));
    CHECK(contains(r.out, "\"upper\": 1"));

    auto d = run_cli("intervals " + fixture("example1.json") +
                     " --event u1r,u1w --given u1r,u2r --method dempster");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "\"lower\": 1, \"upper\": 1"));

    auto rb = run_cli("intervals " + fixture("example1.json") +
                      " --event u1r,u1w --given u1r,u2r --method robust");
    CHECK(rb.exit_code == 0);
    CHECK(contains(rb.out, "\"lower\": 0, \"upper\": 1"));
}

TEST_CASE("interval output formats") {
    const std::string base = "intervals " + fixture("example2.json") +
                             " --event r --given r,w --method sugeno-extreme";
    auto csv = run_cli(base + " --output csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "method,lower,upper\n"));
    CHECK(contains(csv.out, "sugeno-extreme,0.5,0.75\n"));
    auto table = run_cli(base + " --output table");
    CHECK(table.exit_code == 0);
    CHECK(contains(table.out, "method"));
    CHECK(contains(table.out, "0.75"));
}

TEST_CASE("conditioned generators are reported with possibilities") {
    auto r = run_cli("condition " + fixture("example2.json") +
                     " --given r,w --method possibility");
    CHECK(r.exit_code == 0);
    const bool totals_ok = contains(r.out, "\"totals\": [1, 0.5]") ||
                           contains(r.out, "\"totals\": [0.5, 1]");
    CHECK(totals_ok);
    const bool pis_ok = contains(r.out, "\"possibilities\": [1, 0.5]") ||
                        contains(r.out, "\"possibilities\": [0.5, 1]");
    CHECK(pis_ok);

    auto d = run_cli("condition " + fixture("example2.json") +
                     " --given r,w --method dempster");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "[0.75, 0.25, 0]"));
}

TEST_CASE("profile output carries anchors and samples") {
    auto r = run_cli("profile " + fixture("example1.json") +
                     " --event u1r,u1w --given u1r,u2r --resolution 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "x,pi,anchor\n"));
    CHECK(contains(r.out, "1,1,1\n"));                 // anchor at x=1
    CHECK(contains(r.out, "0,0.001001001001,1"));      // anchor at x=0
    CHECK(contains(r.out, "0.5,0.002,0"));             // sample on the curve
    // resolution 4 -> 5 samples + 2 anchors.
    int lines = 0;
    for (char c : r.out)
        lines += c == '\n';
    CHECK(lines == 8);
}

TEST_CASE("method comparison matches the published intervals") {
    auto r = run_cli("compare " + fixture("example2.json") +
                     " --event w --given r,w --output csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "dempster,0.25,0.25"));
    CHECK(contains(r.out, "dempster-closed-form,0.25,0.25"));
    CHECK(contains(r.out, "robust,0.25,0.5"));
    CHECK(contains(r.out, "choquet-extreme,0.25,0.375"));
    CHECK(contains(r.out, "choquet-full,0.25,0.4232867951"));
    CHECK(contains(r.out, "sugeno-extreme,0.25,0.5"));
    CHECK(contains(r.out, "sugeno-full,0.25,0.5"));
}

TEST_CASE("closed forms agree with the sampling oracle") {
    auto r = run_cli("check " + fixture("example2.json") +
                     " --event r --given r,w --resolution 2000");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "PASS"));
    CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("deterministic output") {
    const std::string cmd = "compare " + fixture("modified_example2.json") +
                            " --event r --given r,w --output json";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("intervals").exit_code == 2);
    CHECK(run_cli("nonsense --what").exit_code == 2);
    CHECK(run_cli("intervals " + fixture("example1.json") +
                  " --event u1r --given u1r,u2r --method banana")
              .exit_code == 2);
}

TEST_CASE("document errors exit with 2") {
    auto bad_sum = write_temp(
        "cli_bad_sum.json",
        R"({"frame": ["a","b"], "model": {"kind": "credal", "extreme_points": [[0.5, 0.4]]}})");
    CHECK(run_cli("intervals " + bad_sum + " --event a --given a,b --method robust")
              .exit_code == 2);
    auto bad_json = write_temp("cli_bad_json.json", "{ not json");
    CHECK(run_cli("intervals " + bad_json + " --event a --given a,b --method robust")
              .exit_code == 2);
    CHECK(run_cli("intervals " + fixture("example1.json") +
                  " --event zebra --given u1r,u2r --method robust")
              .exit_code == 2);
    CHECK(run_cli("intervals /tmp/definitely_missing_model.json "
                  "--event a --given a --method robust")
              .exit_code == 2);
}

TEST_CASE("impossible conditioning exits with 3") {
    auto point = write_temp(
        "cli_point.json",
        R"({"frame": ["a","b","c"], "model": {"kind": "credal", "extreme_points": [[1.0, 0.0, 0.0]]}})");
    CHECK(run_cli("intervals " + point + " --event a --given c --method robust")
              .exit_code == 3);
    CHECK(run_cli("condition " + point + " --given c --method possibility")
              .exit_code == 3);
}

TEST_CASE("oversized oracle grids exit with 2") {
    CHECK(run_cli("check " + fixture("example1.json") +
                  " --event u1r,u1w --given u1r,u2r --resolution 20000000")
              .exit_code == 2);
}
