// End-to-end checks of the command line tool. The binary path comes from
// the PSCBSC_CLI environment variable, set by CTest.
#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("PSCBSC_CLI");
    REQUIRE_MESSAGE(path != nullptr, "PSCBSC_CLI must point at the binary");
    return path;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("pe emits the closed form and oracle with exit 0") {
    const auto r = run("pe --code even:3 --theta 0.9272952180016122 --oracle");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema"] == 1);
    CHECK(std::abs(j["pe_closed_form"].get<double>() - 0.07733384694432144) < 1e-12);
    CHECK(j["residual"].get<double>() <= 1e-8);
    CHECK(j["shat"].size() == 4);
}

TEST_CASE("theta accepts degrees and per-bit lists") {
    const auto deg = run("pe --code even:3 --theta deg:90");
    REQUIRE(deg.exit_code == 0);
    CHECK(nlohmann::json::parse(deg.output)["pe_closed_form"].get<double>() < 1e-10);

    const auto list = run("pe --code even:3 --theta 0.4,0.9,1.3 --oracle");
    REQUIRE(list.exit_code == 0);
    CHECK(nlohmann::json::parse(list.output)["residual"].get<double>() <= 1e-8);
}

TEST_CASE("secrecy-bsc reports a posterior consistent with pe") {
    const auto r = run("secrecy-bsc --code even:3 --p 0.2 --received 110");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["matches_pe"] == true);
    double total = 0.0;
    for (const auto& v : j["posterior"]) total += v.get<double>();
    CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("coding-bsc reports the map/srm gap") {
    const auto r = run("coding-bsc --code even:3 --p 0.1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(std::abs(j["map_success"].get<double>() - 0.972) <= 1e-12);
    CHECK(j["gap"].get<double>() > 1e-4);
}

TEST_CASE("secrecy-psc reports the fidelity chain and uniform srm stats") {
    const auto r = run("secrecy-psc --code even:3 --theta 0.9272952180016122");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["identity_sigma_fidelity"].get<double>() <=
          j["avg_sigma_fidelity"].get<double>() + 1e-10);
    CHECK(j["avg_sigma_fidelity"].get<double>() <=
          j["optimal_fidelity"].get<double>() + 1e-10);
    for (const auto& v : j["srm_d"]) CHECK(std::abs(v.get<double>() - 0.5) <= 1e-10);
    for (const auto& v : j["srm_f"]) CHECK(std::abs(v.get<double>() - 0.5) <= 1e-10);
}

TEST_CASE("entropy runs the duality and gexit reports") {
    const auto r = run("entropy --code hamming:7,4 --p 0.2 --gexit-bit 3 --step 1e-3");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["vne_output"]["residual"].get<double>() <= 1e-10);
    CHECK(j["vne_coding"]["residual"].get<double>() <= 1e-9);
    CHECK(std::abs(j["gexit"]["defect"].get<double>()) <= 1e-4);
}

TEST_CASE("bec reports exact identities") {
    const auto r = run("bec --code even:3 --erase 1,2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["coding_entropy"]["consistent"] == true);
    CHECK(j["entropy_duality"]["ok"] == true);
    CHECK(j["secrecy_coding_sum"]["sum_ok"] == true);
    CHECK(j["guessing"]["exponent_ok"] == true);
}

TEST_CASE("codes load from files") {
    const std::string path = "/tmp/pscbsc_cli_code.txt";
    std::ofstream(path) << "# a [4,2] code\n1001\n0101\n";
    const auto r = run("pe --code " + path + " --theta 1.1 --oracle");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["residual"].get<double>() <= 1e-8);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("pe --code even:3").exit_code == 2);          // no channel
    CHECK(run("nonsense").exit_code == 2);                  // unknown subcommand
    CHECK(run("pe --theta 0.3").exit_code == 2);            // missing code
    CHECK(run("pe --code nope:1 --theta 0.3").exit_code == 2);
    CHECK(run("pe --code even:3 --p 0.7").exit_code == 2);  // p out of range
}

TEST_CASE("suite runs clean on a reduced grid and is byte-deterministic") {
    const std::string json1 = "/tmp/pscbsc_suite_1.json";
    const std::string json2 = "/tmp/pscbsc_suite_2.json";
    const std::string args =
        "suite --codes rep:3 even:3 --theta 0.3,1.2 --seed 99 --json ";
    const auto r1 = run(args + json1);
    REQUIRE(r1.exit_code == 0);
    const auto r2 = run(args + json2);
    REQUIRE(r2.exit_code == 0);

    std::ifstream f1(json1), f2(json2);
    const std::string s1((std::istreambuf_iterator<char>(f1)),
                         std::istreambuf_iterator<char>());
    const std::string s2((std::istreambuf_iterator<char>(f2)),
                         std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK_FALSE(s1.empty());

    const auto j = nlohmann::json::parse(s1);
    CHECK(j["schema"] == 1);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["instances"].size() == 4);
}

TEST_CASE("parallel execution leaves the report byte-identical") {
    const std::string args = "suite --codes even:3 hamming:7,4 --theta 0.9,1.4 --json ";
    const auto seq = run(args + "/tmp/pscbsc_suite_seq.json");
    const auto par = run(args + "/tmp/pscbsc_suite_par.json --parallel");
    REQUIRE(seq.exit_code == 0);
    REQUIRE(par.exit_code == 0);
    std::ifstream f1("/tmp/pscbsc_suite_seq.json"), f2("/tmp/pscbsc_suite_par.json");
    const std::string s1((std::istreambuf_iterator<char>(f1)),
                         std::istreambuf_iterator<char>());
    const std::string s2((std::istreambuf_iterator<char>(f2)),
                         std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
}

TEST_CASE("suite with an empty code list reports nothing and exits 0") {
    const auto r = run("suite --codes '' --json /tmp/pscbsc_suite_empty.json");
    CHECK(r.exit_code == 0);
    std::ifstream f("/tmp/pscbsc_suite_empty.json");
    const auto j = nlohmann::json::parse(f);
    CHECK(j["instances"].empty());
    CHECK(j["summary"]["failed"] == 0);
}

TEST_SUITE_END();
