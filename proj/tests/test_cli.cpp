#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BIRWEYL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cocycle matches the G2 table value") {
    auto r = run_cli("--preset G2 cocycle --word 2,1 --weight L1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "u*v - b*w\n");
    // Structure options may also follow the subcommand.
    CHECK(run_cli("cocycle --preset G2 --word 2,1 --weight L1").out == "u*v - b*w\n");
}

TEST_CASE("tau prints coefficient and reflected weight") {
    auto r = run_cli("--preset A2 tau --word 1 --weight L1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "coefficient x\nweight -L1+L2\n");
}

TEST_CASE("bracket and act") {
    CHECK(run_cli("--preset A2 bracket x y").out == "z\n");
    CHECK(run_cli("--preset G2 bracket w x").out == "-3*z\n");
    CHECK(run_cli("--preset A2 act --word 2 x").out == "(x*y - b*z)/(y)\n");
    CHECK(run_cli("--preset A2 act --word 1,1 'y + a*z/x'").out == "(x*y + a*z)/(x)\n");
}

TEST_CASE("json output carries the term list") {
    auto r = run_cli("--preset B2 --format json cocycle --word 1,2 --weight L2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "x^2*y + a*x*z + a^2*w");
    CHECK(j["polynomial"] == "x^2*y + a*x*z + a^2*w");
    CHECK(j["word"] == nlohmann::json({1, 2}));
}

TEST_CASE("verify fixtures passes and is deterministic") {
    auto r1 = run_cli("verify fixtures --preset B2");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("checks passed") != std::string::npos);
    auto r2 = run_cli("verify fixtures --preset B2");
    CHECK(r1.out == r2.out);
}

TEST_CASE("verify properties on a preset") {
    auto r = run_cli("--preset 2A1 verify properties --max-len 3 --seed 5");
    CHECK(r.exit_code == 0);
    auto j = run_cli("--preset 2A1 --format json verify properties --max-len 3 --seed 5");
    CHECK(j.exit_code == 0);
    auto report = nlohmann::json::parse(j.out);
    CHECK(report["status"] == "PASS");
    CHECK(report["failed"] == 0);
    CHECK(report["checks"][0].contains("ms"));
}

TEST_CASE("certify-polynomial fails on a non-dominant weight") {
    auto r = run_cli("--preset A2 cocycle --word 1 --weight L2-L1 --certify-polynomial");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("NOT_POLYNOMIAL") != std::string::npos);
    auto ok = run_cli("--preset A2 cocycle --word 1 --weight [-1,1]");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "(1)/(x)\n");
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("--preset A2 act --word 3 x").exit_code == 2);
    CHECK(run_cli("--preset A2 act --word 1 'x*('").exit_code == 2);
    CHECK(run_cli("--preset E8 cocycle --word 1 --weight L1").exit_code == 2);
    CHECK(run_cli("--preset A2 cocycle --word 1 --weight Q7").exit_code == 2);
    CHECK(run_cli("cocycle --word 1 --weight L1").exit_code == 2);  // no structure
}

TEST_CASE("normalization") {
    auto r = run_cli("--preset A2 normalization --word 1,2 --weight L1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-a\n");
}

TEST_CASE("validate reports status") {
    auto good = run_cli("validate " + std::string(BIRWEYL_FIXTURES_DIR) +
                        "/structures/a2_affine_height2.json");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("PASS") != std::string::npos);
}

TEST_SUITE_END();
