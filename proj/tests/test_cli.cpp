#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ARCLINE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("classify text golden") {
    RunResult r = run_cli("classify --region 'lower(3)'");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "fountains.left = (-inf,3]\n"
          "fountains.right = empty\n"
          "locally_finite = false\n"
          "condition_i = window-approximate holds\n"
          "condition_ii = holds\n"
          "ort_closed = true\n"
          "precovering = true\n"
          "preenveloping = false\n"
          "torsion_class = true\n"
          "t_structure = HalfLine(3)\n"
          "co_t_structure = Not\n"
          "canonical_parts = 1\n");
}

TEST_CASE("classify json") {
    RunResult r = run_cli("classify --region 'lower(3)' --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"t_structure\": \"HalfLine(3)\"") != std::string::npos);
    CHECK(r.output.find("\"canonical_parts\": 1") != std::string::npos);
}

TEST_CASE("region verbs print one region per line") {
    CHECK(run_cli("ort --region 'lower(0)'").output == "upper(0)\n");
    CHECK(run_cli("closure --region 'arcs{(0,2),(1,3)}'").output == "arcs{(0,2),(0,3),(1,3)}\n");
    CHECK(run_cli("coaisle --region 'lower(0)'").output == "upper(-1)\n");
    CHECK(run_cli("ort --region 'all'").output == "empty\n");
}

TEST_CASE("approximation verbs print the component arcs") {
    RunResult pre = run_cli("precover --region 'lower(3)' --object '(0,5)'");
    CHECK(pre.exit_code == 0);
    CHECK(pre.output == "(0,2)\n(0,3)\n");
    RunResult env = run_cli("preenvelope --region 'upper(-3)' --object '(-5,0)'");
    CHECK(env.exit_code == 0);
    CHECK(env.output == "(-3,0)\n(-2,0)\n");
}

TEST_CASE("precover on a non-precovering class exits 2") {
    RunResult r = run_cli("precover --region 'upper(0)' --object '(0,5)'");
    CHECK(r.exit_code == 2);
    CHECK(r.output ==
          "error: not precovering: right fountain 0 is not a left fountain\n");
}

TEST_CASE("parse errors exit 1 with a position") {
    RunResult r = run_cli("classify --region 'arcs{(0,1)}'");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("parse error at line 1, column 6") != std::string::npos);
    CHECK(r.output.find("not an arc") != std::string::npos);

    RunResult bad_term = run_cli("ort --region 'triangle(3)'");
    CHECK(bad_term.exit_code == 1);
    CHECK(bad_term.output.find("expected one of:") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("classify").exit_code == 1);               // missing --region
    CHECK(run_cli("frobnicate --region all").exit_code == 1);  // unknown verb
    CHECK(run_cli("classify --region all --format yaml").exit_code == 1);
    CHECK(run_cli("render --region all --format jpeg").exit_code == 1);
    CHECK(run_cli("precover --region 'lower(3)' --object '(0,'").exit_code == 1);
}

TEST_CASE("render golden through the CLI") {
    RunResult r = run_cli("render --region 'arcs{(-1,2)}' --window=-2..3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "     .-----------.\n"
          "     |           |\n"
          "-+---+---+---+---+---+\n"
          "-2  -1   0   1   2   3\n");
    RunResult svg = run_cli("render --region 'lower(0)' --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.find("<svg") != std::string::npos);
}

TEST_CASE("regions load from @file") {
    std::string path = "cli_region_input.txt";
    {
        std::ofstream f(path);
        f << "lower(0) |\n  upper(4)\n";
    }
    RunResult r = run_cli("ort --region @" + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "arcs{(0,2),(0,3),(0,4),(1,3),(1,4),(2,4)}\n");
    std::remove(path.c_str());
    RunResult missing = run_cli("ort --region @no_such_file.txt");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("cannot read region file") != std::string::npos);
}

TEST_CASE("law checker and oracle verbs succeed") {
    RunResult chk = run_cli("check --region 'lower(0) | upper(4)'");
    CHECK(chk.exit_code == 0);
    CHECK(chk.output.find("ort_cube_equals_ort = ok\n") != std::string::npos);
    CHECK(chk.output.find("perp_composition_is_closure = ok\n") != std::string::npos);
    CHECK(chk.output.find("violated") == std::string::npos);

    RunResult orc = run_cli("oracle --cases 5 --seed 3");
    CHECK(orc.exit_code == 0);
    CHECK(orc.output.find("passed = true\n") != std::string::npos);
}
