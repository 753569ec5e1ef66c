#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <srg/graphs.hpp>

#include "fixtures.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef SRG_CLI_PATH
#error "SRG_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        (env.empty() ? "" : env + " ") + std::string(SRG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("cli_fixture_") + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
    return path;
}

}  // namespace

TEST_CASE("params command") {
    RunResult feasible = run_cli("params 76 21 2 7");
    CHECK(feasible.exit_code == 0);
    CHECK(feasible.output.find("21^1, 2^56, -7^19") != std::string::npos);
    CHECK(feasible.output.find("(1, -1/3, 1/9)") != std::string::npos);
    CHECK(feasible.output.find("feasible") != std::string::npos);

    RunResult refuted = run_cli("params 28 9 0 4");
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.output.find("krein-2") != std::string::npos);

    RunResult identity = run_cli("params 6 3 0 1");
    CHECK(identity.exit_code == 1);

    RunResult garbage = run_cli("params 6 3 0");
    CHECK(garbage.exit_code == 2);

    RunResult json = run_cli("params 76 21 2 7 --json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"den\": \"9\"") != std::string::npos);
}

TEST_CASE("check-graph command") {
    const std::string g6 = write_temp("petersen.g6", srg::write_graph6(srg::fixtures::petersen()));
    RunResult ok = run_cli("check-graph " + g6);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("(10,3,0,1)") != std::string::npos);
    CHECK(ok.output.find("verified") != std::string::npos);

    RunResult single = run_cli("check-graph " + g6 + " --theta -2");
    CHECK(single.exit_code == 0);
    CHECK(single.output.find("rank=4") != std::string::npos);

    RunResult json = run_cli("check-graph " + g6 + " --json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"verified\": true") != std::string::npos);

    const std::string path = write_temp("p3.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    RunResult bad = run_cli("check-graph " + path);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("not strongly regular") != std::string::npos);

    RunResult missing = run_cli("check-graph does_not_exist.g6");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("local command") {
    const std::string pal = write_temp("paley13.g6", srg::write_graph6(srg::fixtures::paley(13)));
    RunResult dec = run_cli("local " + pal + " --vertex 0");
    CHECK(dec.exit_code == 0);
    CHECK(dec.output.find("1 4 3 12 9 10") != std::string::npos);

    RunResult marks = run_cli("local " + pal + " --vertex 0 --witness 2");
    CHECK(marks.exit_code == 0);
    CHECK(marks.output.find("total marks: 3") != std::string::npos);
}

TEST_CASE("replay76 command") {
    RunResult rep = run_cli("replay76");
    CHECK(rep.exit_code == 1);  // a definitive negative certificate
    CHECK(rep.output.find("final verdict: NONEXISTENT") != std::string::npos);

    RunResult stage = run_cli("replay76 --stage spectrum");
    CHECK(stage.exit_code == 0);
    CHECK(stage.output.find("spectrum: VERIFIED") != std::string::npos);

    RunResult unknown = run_cli("replay76 --stage nope");
    CHECK(unknown.exit_code == 2);

    RunResult json = run_cli("replay76 --json");
    CHECK(json.exit_code == 1);
    CHECK(json.output.find("\"final_verdict\": \"NONEXISTENT\"") != std::string::npos);

    // byte-determinism across invocations
    RunResult json2 = run_cli("replay76 --json");
    CHECK(json.output == json2.output);
}

TEST_CASE("roots command") {
    const std::string gram = write_temp(
        "d4.json", R"({"gram": [[2,-1,0,0],[-1,2,-1,-1],[0,-1,2,0],[0,-1,0,2]]})");
    RunResult out = run_cli("roots --gram " + gram);
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("24 roots") != std::string::npos);
    CHECK(out.output.find("D4(24 roots)") != std::string::npos);
}

TEST_CASE("codes command") {
    RunResult feasible = run_cli("codes 2 7 3 1");
    CHECK(feasible.exit_code == 0);
    CHECK(feasible.output.find("FEASIBLE") != std::string::npos);
    CHECK(feasible.output.find("0111111") != std::string::npos);

    RunResult infeasible = run_cli("codes 5 7 3 1");
    CHECK(infeasible.exit_code == 1);
    CHECK(infeasible.output.find("INFEASIBLE (exhaustive") != std::string::npos);

    RunResult limited = run_cli("codes 5 7 3 1 --budget 10");
    CHECK(limited.exit_code == 2);

    RunResult env_limited = run_cli("codes 5 7 3 1", "SRG_WITNESS_BUDGET=10");
    CHECK(env_limited.exit_code == 2);
    RunResult flag_overrides = run_cli("codes 2 7 3 1 --budget 100000", "SRG_WITNESS_BUDGET=10");
    CHECK(flag_overrides.exit_code == 0);
}

TEST_CASE("output file option") {
    RunResult redirected = run_cli("-o cli_out.txt params 76 21 2 7");
    CHECK(redirected.exit_code == 0);
    std::ifstream in("cli_out.txt");
    REQUIRE(in.good());
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all.find("21^1, 2^56, -7^19") != std::string::npos);
}
