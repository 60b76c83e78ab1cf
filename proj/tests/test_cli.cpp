#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

#include "run_config.hpp"

using namespace storsion;
using nlohmann::json;

namespace {

struct Run {
    int exitCode;
    std::string out;
};

// Runs the tool with stderr folded into a separate file so stdout stays pure JSON.
Run runTool(const std::string& args, std::string* err = nullptr) {
    const std::string errPath = "cli_test_stderr.txt";
    const std::string cmd = std::string(SPECTRAL_TORSION_BIN) + " " + args + " 2>" + errPath;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    if (err) {
        std::ifstream in(errPath);
        err->assign(std::istreambuf_iterator<char>(in), {});
    }
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string writeConfig(const std::string& name, const json& doc) {
    std::ofstream(name) << doc.dump();
    return name;
}

json withoutTiming(json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST_CASE("dimension lists") {
    CHECK(cli::parseDims("3,4,5") == std::vector<int>{3, 4, 5});
    CHECK(cli::parseDims("2") == std::vector<int>{2});
    CHECK_THROWS_AS(cli::parseDims("9"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseDims("1"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseDims("3,x"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseDims("3.5"), cli::ConfigError);
}

TEST_CASE("torsion entries") {
    const auto e = cli::parseTorsionEntry(json::parse(R"({"indices":[1,2,4],"value":"-3/6"})"));
    CHECK(e.indices == std::array<int, 3>{1, 2, 4});
    CHECK(e.value == Rational(-1, 2));
    CHECK(cli::parseTorsionEntry(json::parse(R"({"indices":[1,2,3],"value":2})")).value == 2);
    for (const char* bad : {R"({"indices":[1,1,2],"value":"1"})", R"({"indices":[3,2,1],"value":"1"})"}) {
        try {
            cli::parseTorsionEntry(json::parse(bad));
            FAIL("accepted " << bad);
        } catch (const cli::ConfigError& err) {
            CHECK(std::string(err.what()).find("non-increasing index triple") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(cli::parseTorsionEntry(json::parse(R"({"indices":[1,2],"value":"1"})")), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseTorsionEntry(json::parse(R"({"indices":[0,1,2],"value":"1"})")), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseTorsionEntry(json::parse(R"({"indices":[1,2,3],"value":"1/0"})")), cli::ConfigError);
    CHECK_THROWS_AS(cli::parseTorsionEntry(json::parse(R"({"indices":[1,2,3],"value":0.5})")), cli::ConfigError);
}

TEST_CASE("config documents") {
    cli::RunConfig c;
    c.command = "eval";
    cli::applyConfigJson(json::parse(R"({"dim":3,"torsion":[{"indices":[1,2,3],"value":"1/2"}],
                                         "u":[1,0,0],"v":["0","1","0"],"w":[0,0,"2/3"],"seed":7})"),
                         c);
    CHECK(cli::evalDimension(c) == 3);
    CHECK(c.seed == 7);
    CHECK((*c.w)[2] == Rational(2, 3));
    CHECK_NOTHROW(cli::validate(c));
    CHECK(cli::buildTorsion(c, 3)(1, 0, 2) == Rational(-1, 2));

    cli::RunConfig dup = c;
    dup.torsion.push_back(dup.torsion.front());
    CHECK_THROWS_AS(cli::validate(dup), cli::ConfigError);
    cli::RunConfig mismatch = c;
    mismatch.u = OneForm{1, 0, 0, 0};
    CHECK_THROWS_AS(cli::validate(mismatch), cli::ConfigError);
    cli::RunConfig unknown;
    CHECK_THROWS_AS(cli::applyConfigJson(json::parse(R"({"dimz":3})"), unknown), cli::ConfigError);
    CHECK_THROWS_AS(cli::applyConfigJson(json::parse(R"([1,2])"), unknown), cli::ConfigError);
}

TEST_CASE("exact scalar serialisation") {
    const ResidueValue r(4, ComplexRational(Rational(1, 3), -4));
    const auto j = cli::residueJson(r);
    CHECK(j["re"] == json::array({1, 3}));
    CHECK(j["im"] == json::array({-4, 1}));
    CHECK(j["Vpow"] == 1);
    CHECK(j["piPow"] == 0);
    CHECK(j["pi_form"]["im"] == json::array({-8, 1}));
    CHECK(j["pi_form"]["piPow"] == 2);
    const auto decimal = j["decimal"].get<std::string>();
    const auto split = decimal.find('-', 1);
    CHECK(std::stod(decimal.substr(0, split)) == doctest::Approx(2 * M_PI * M_PI / 3).epsilon(1e-14));
    CHECK(decimal.substr(split) == "-78.9568352087149i");
    const auto big = cli::exactScalar(ComplexRational(Rational(mpz_class("123456789012345678901234567890"))), 0, 0);
    CHECK(big["re"][0] == "123456789012345678901234567890");
    CHECK(cli::decimalString({0.1, 0}) == "0.1+0i");
}

TEST_CASE("eval reports the pipeline and the closed form") {
    const auto path = writeConfig("cli_eval_anchor.json", json::parse(R"({"dim":4,"torsion":[{"indices":[1,2,3],"value":"1"}],
                                                                          "u":[1,0,0,0],"v":[0,1,0,0],"w":[0,0,1,0]})"));
    const auto run = runTool("eval --config " + path);
    const auto report = json::parse(run.out);
    CHECK(report["result"]["closed_form"]["im"] == json::array({-4, 1}));
    CHECK(report["result"]["closed_form"]["pi_form"]["im"] == json::array({-8, 1}));
    CHECK(report["result"]["contraction"] == "1");
    CHECK(run.exitCode == (report["passed"].get<bool>() ? 0 : 1));
    CHECK(report["config"]["torsion"][0]["indices"] == json::array({1, 2, 3}));

    const auto zero = runTool("eval --dims 3");
    const auto z = json::parse(zero.out);
    CHECK(zero.exitCode == 0);
    CHECK(z["result"]["pipeline"]["re"] == json::array({0, 1}));
    CHECK(z["result"]["pipeline"]["im"] == json::array({0, 1}));
}

TEST_CASE("configuration errors exit with code 2") {
    std::string err;
    const auto bad = writeConfig("cli_bad_triple.json", json::parse(R"({"torsion":[{"indices":[1,1,2],"value":"1"}]})"));
    CHECK(runTool("eval --config " + bad, &err).exitCode == 2);
    CHECK(err.find("non-increasing index triple") != std::string::npos);
    CHECK(runTool("eval --dims 9").exitCode == 2);
    CHECK(runTool("eval --config does_not_exist.json").exitCode == 2);
    CHECK(runTool("examples nowhere").exitCode == 2);
    CHECK(runTool("examples doubled --phi 1+2k").exitCode == 2);
    CHECK(runTool("examples eym --dims 3").exitCode == 2);
    CHECK(runTool("verify --q 1.5").exitCode == 2);
    CHECK(runTool("").exitCode == 2);
    std::ofstream("cli_malformed.json") << "{ not json";
    CHECK(runTool("verify --config cli_malformed.json").exitCode == 2);
}

TEST_CASE("verify in two dimensions passes vacuously") {
    const auto run = runTool("verify --dims 2");
    const auto report = json::parse(run.out);
    CHECK(run.exitCode == 0);
    CHECK(report["passed"] == true);
    CHECK(report["checks"].size() == 9);
    CHECK(report["checks"][0]["detail"].get<std::string>().find("antisymmetric rank-3 tensor vanishes") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timing") {
    const auto a = runTool("verify --dims 3,4 --trials 3 --seed 5 --out cli_report.json");
    const auto b = runTool("verify --dims 3,4 --trials 3 --seed 5");
    CHECK(withoutTiming(json::parse(a.out)).dump() == withoutTiming(json::parse(b.out)).dump());
    std::ifstream in("cli_report.json");
    const std::string file((std::istreambuf_iterator<char>(in)), {});
    CHECK(file == a.out);
    const auto report = json::parse(a.out);
    CHECK(report["version"].is_string());
    CHECK(report["timing"].contains("timestamp"));
    CHECK(report["config"]["seed"] == 5);
    CHECK(a.exitCode == (report["passed"].get<bool>() ? 0 : 1));
    for (const auto& check : report["checks"]) CHECK(report["timing"]["elapsed_seconds"].contains(check["name"]));
    const auto c = runTool("verify --dims 3,4 --trials 3 --seed 6");
    CHECK(withoutTiming(json::parse(a.out)).dump() != withoutTiming(json::parse(c.out)).dump());
}

TEST_CASE("examples") {
    for (const char* args : {"examples eym --N 3 --dims 4", "examples doubled --phi 1+0i --dims 4", "examples nctorus --K 6",
                             "examples suq2 --q 0.5 --N 2000"}) {
        INFO(args);
        const auto run = runTool(args);
        const auto report = json::parse(run.out);
        CHECK(run.exitCode == 0);
        CHECK(report["checks"].size() == 1);
        CHECK(report["passed"] == true);
    }
    const auto doubled = json::parse(runTool("examples doubled --phi 0 --dims 2").out);
    CHECK(doubled["passed"] == true);
}
