#include "arcsing/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace arcsing;
using nlohmann::json;

namespace {

std::string scenario_path(const std::string& name) {
    const char* dir = std::getenv("ARCSING_SCENARIO_DIR");
    return std::string(dir ? dir : "scenarios") + "/" + name;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect_code = 0) {
    args.insert(args.begin(), "--json");
    RunResult r = run(args);
    REQUIRE(r.code == expect_code);
    return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/arcsing_cli_" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

}  // namespace

TEST_CASE("closure command") {
    RunResult r = run({"closure", scenario_path("ex_xy_z5.scn")});
    CHECK(r.code == 0);
    CHECK(r.out.find("(x)W") != std::string::npos);
    CHECK(r.out.find("(y)W") != std::string::npos);
    CHECK(r.out.find("(z^4)W") != std::string::npos);
    CHECK(r.out.find("(z^5 - x*y)W^2") != std::string::npos);
    CHECK(r.out.find("ord at origin = 1") != std::string::npos);

    json rep = run_json({"closure", scenario_path("ex_xy_z5.scn")});
    CHECK(rep["command"] == "closure");
    CHECK(rep["errors"].empty());
    CHECK(rep["results"][0]["weight"] == 2);
    CHECK(rep["results"][0]["tau_lower_bound"] == 2);
}

TEST_CASE("contact command reports the exact invariants") {
    json rep = run_json({"contact", scenario_path("ex_xy_z5.scn"), "--arc", "phi"});
    REQUIRE(rep["results"].size() == 1);
    const json& rec = rep["results"][0];
    CHECK(rec["ord"] == "1");
    CHECK(rec["r"] == "2");
    CHECK(rec["r_bar"] == "2");
    CHECK(rec["rho"] == 2);
    CHECK(rec["rho_bar"] == "2");
    CHECK(rec["rho_route"] == "blowup");

    json slow = run_json({"contact", scenario_path("ex_xy_z5.scn"), "--arc", "psi"});
    const json& rec2 = slow["results"][0];
    CHECK(rec2["ord"] == "2");
    CHECK(rec2["r"] == "5");
    CHECK(rec2["r_bar"] == "5/2");
    CHECK(rec2["rho"] == 5);
    CHECK(rec2["rho_bar"] == "5/2");
}

TEST_CASE("json output is byte-identical across runs") {
    std::vector<std::string> args{"--json", "contact", scenario_path("ex_xy_z5.scn"),
                                  "--arc", "phi"};
    RunResult a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("nash command") {
    json rep = run_json({"nash", scenario_path("ex_xy_z5.scn"), "--arc", "phi"});
    const json& rec = rep["results"][0];
    CHECK(rec["m"] == json::array({2, 2, 1}));
    CHECK(rec["terminated"] == "first_drop");
    CHECK(rec["rho"] == 2);

    json full = run_json({"nash", scenario_path("ex_xy_z5.scn"), "--arc", "psi", "--full"});
    CHECK(full["results"][0]["m"] == json::array({2, 2, 2, 2, 2, 1}));
}

TEST_CASE("isolated command on the bounded example") {
    json rep = run_json({"isolated", scenario_path("ex_bounded.scn")});
    const json& rec = rep["results"][0];
    CHECK(rec["verdict"] == "ISOLATED");
    CHECK(rec["Q"] == 3);
    CHECK(rec["pure_power_exponents"]["z"] == 3);
    CHECK(rec["pure_power_exponents"]["x"] == 1);
}

TEST_CASE("isolated command on the unbounded example") {
    json rep = run_json({"isolated", scenario_path("ex_unbounded.scn")});
    const json& rec = rep["results"][0];
    CHECK(rec["verdict"] == "NOT_ISOLATED");
    CHECK(rec["axis"] == "z");
    CHECK(!rec["family"].empty());
}

TEST_CASE("family sweep over the declared family") {
    json rep = run_json({"family", scenario_path("ex_unbounded.scn"), "--family", "phiN"});
    REQUIRE(rep["results"].size() == 10);
    for (const auto& rec : rep["results"]) {
        long long n = rec["N"].get<long long>();
        CHECK(rec["r"] == std::to_string(2 * n + 2));
        CHECK(rec["r_bar"] == std::to_string(2 * n + 2));
        CHECK(rec["ord"] == "1");
    }
}

TEST_CASE("automatic family synthesis") {
    json rep = run_json({"family", scenario_path("ex_unbounded.scn"), "--auto-axis", "z"});
    REQUIRE(rep["results"].size() == 10);
}

TEST_CASE("sample command") {
    json rep = run_json({"sample", scenario_path("ex_xy_z5.scn"), "--cap", "12"});
    const json& rec = rep["results"][0];
    CHECK(rec["cap"] == 12);
    CHECK(rec["max_observed"] == "5/2");
    CHECK(rec["min_observed"] == "1");
    CHECK(rec["count"].get<int>() > 0);
}

TEST_CASE("verify command") {
    RunResult r = run({"verify", scenario_path("ex_xy_z5.scn")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({"frobnicate", "foo.scn"}).code == 1);
    CHECK(run({"contact", scenario_path("ex_xy_z5.scn")}).code == 1);  // missing --arc
    CHECK(run({}).code == 1);
    CHECK(run({"contact", "/nonexistent.scn", "--arc", "phi"}).code == 1);
    // unknown arc name
    CHECK(run({"contact", scenario_path("ex_xy_z5.scn"), "--arc", "nope"}).code == 1);
}

TEST_CASE("scenario parse errors exit with code 1 and are reported") {
    std::string bad = write_temp("bad.scn", "vars x\npoly f = x + q\n");
    std::vector<std::string> args{"--json", "contact", bad, "--arc", "phi"};
    RunResult r = run(args);
    CHECK(r.code == 1);
    json rep = json::parse(r.out);
    REQUIRE(rep["errors"].size() == 1);
    CHECK(rep["errors"][0]["error"] == "ParseError");
    std::string msg = rep["errors"][0]["message"];
    CHECK(msg.find("2:") != std::string::npos);
}

TEST_CASE("domain errors exit with code 2 and carry the error name") {
    std::string scn = write_temp(
        "maxmult.scn",
        "vars x y z s\n"
        "poly f = x^2*y^3 - z^4*s^5\n"
        "arc zaxis : x -> 0, y -> 0, z -> t, s -> 0\n");
    std::vector<std::string> args{"--json", "contact", scn, "--arc", "zaxis"};
    RunResult r = run(args);
    CHECK(r.code == 2);
    json rep = json::parse(r.out);
    REQUIRE(rep["errors"].size() == 1);
    CHECK(rep["errors"][0]["error"] == "ArcInMaxMult");
}

TEST_CASE("precision resolution order") {
    Scenario sc = parse_scenario("vars x\npoly f = x^2\n");
    cli::GlobalOptions g;

    unsetenv("ARC_CONTACT_PREC");
    CHECK(cli::options_for(sc, g).precision == kDefaultPrecision);

    setenv("ARC_CONTACT_PREC", "32", 1);
    CHECK(cli::options_for(sc, g).precision == 32);

    // a scenario-level setting beats the environment
    Scenario sc2 = parse_scenario("vars x\npoly f = x^2\nset prec 48\n");
    CHECK(cli::options_for(sc2, g).precision == 48);

    // the command-line flag beats both
    g.precision = 96;
    CHECK(cli::options_for(sc2, g).precision == 96);
    CHECK(cli::options_for(sc, g).precision == 96);
    unsetenv("ARC_CONTACT_PREC");
}
