#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "spinorbit/cli.hpp"
#include "test_support.hpp"

using test_support::data_path;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "spinorbit");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = spinorbit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string &s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("certify: moons pass, minor bodies fail") {
    const auto moons = run({"certify", "--catalog", data_path("moons.csv")});
    CHECK(moons.code == 0);
    CHECK(count_lines(moons.out) == 19);

    const auto minor = run({"certify", "--catalog", data_path("minor_bodies.csv")});
    CHECK(minor.code == 1);
    CHECK(minor.err.find("Phobos") != std::string::npos);
    CHECK(minor.err.find("Janus") == std::string::npos);

    const auto both = run({"certify", "--catalog", data_path("moons.csv"), "--catalog",
                           data_path("mercury.csv"), "--body", "Mercury", "--format", "json"});
    CHECK(both.code == 0);
    const auto js = nlohmann::json::parse(both.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["q"] == 2);
}

TEST_CASE("certify: dissipation argument") {
    const auto moon = data_path("moons.csv");
    CHECK(run({"certify", "--catalog", moon, "--body", "Moon", "--eta", "0.008"}).code == 0);
    CHECK(run({"certify", "--catalog", moon, "--body", "Moon", "--eta", "0.009"}).code == 1);
    CHECK(run({"certify", "--catalog", moon, "--eta", "abc"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    const auto none = run({"certify", "--catalog", data_path("moons.csv"), "--body", "Vulcan"});
    CHECK(none.code == 2);
    CHECK(run({"certify", "--catalog", data_path("nope.csv")}).code == 2);
    CHECK(run({"certify", "--catalog", data_path("moons.csv"), "--format", "xml"}).code == 2);
    CHECK(run({"fourier", "--e", "1.2"}).code == 2);
    CHECK(run({"fourier"}).code == 2);
}

TEST_CASE("catalog from the environment") {
    const std::string path = data_path("mercury.csv");
    setenv("RESONANCE_CATALOG", path.c_str(), 1);
    const auto r = run({"certify"});
    unsetenv("RESONANCE_CATALOG");
    CHECK(r.code == 0);
    CHECK(r.out.find("Mercury,3,2,") != std::string::npos);
    CHECK(run({"certify"}).code == 2);
}

TEST_CASE("fourier table") {
    const auto r = run({"fourier", "--e", "0", "--jmax", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto js = nlohmann::json::parse(r.out);
    REQUIRE(js["rows"].size() == 4);
    for (const auto &row : js["rows"]) {
        const double a = row["alpha_quadrature"];
        if (row["j"] == 2) CHECK(a == doctest::Approx(-0.5));
        else CHECK(std::abs(a) < 1e-12);
    }

    const auto mercury = run({"fourier", "--e", "0.2056", "--jmax", "3"});
    CHECK(mercury.code == 0);
    CHECK(mercury.out.find("\n3,") != std::string::npos);
    CHECK(mercury.out.find(",true\n") != std::string::npos);
    CHECK(mercury.out.find("false") == std::string::npos);

    const auto high = run({"fourier", "--e", "0.7", "--jmax", "3"});
    CHECK(high.code == 0);
    CHECK(high.out.find("n/a") != std::string::npos);
}

TEST_CASE("orbit export") {
    const auto moon = data_path("moons.csv");
    const auto r = run({"orbit", "--catalog", moon, "--body", "Moon", "--eta", "0.004",
                        "--samples", "16"});
    REQUIRE(r.code == 0);
    const auto js = nlohmann::json::parse(r.out);
    CHECK(js["body"] == "Moon");
    CHECK(double(js["bifurcation_residual"]) <= 1e-10);
    CHECK(js["samples"]["t"].size() == 16);

    const auto mercury = run({"orbit", "--catalog", data_path("mercury.csv"), "--body", "Mercury",
                              "--eta", "0.002"});
    CHECK(mercury.code == 1);
    CHECK(mercury.err.find("bifurcation condition") != std::string::npos);

    const auto phobos = run({"orbit", "--catalog", data_path("minor_bodies.csv"), "--body",
                             "Phobos"});
    CHECK(phobos.code == 1);
    CHECK(phobos.err.find("range condition") != std::string::npos);

    CHECK(run({"orbit", "--catalog", moon}).code == 2);
    CHECK(run({"orbit", "--catalog", moon, "--body", "Vulcan"}).code == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
    const auto args = std::vector<std::string>{"certify", "--catalog", data_path("moons.csv"),
                                               "--format", "md"};
    CHECK(run(args).out == run(args).out);

    const auto file = std::filesystem::temp_directory_path() / "spinorbit_cli_test.csv";
    const auto r = run({"certify", "--catalog", data_path("mercury.csv"), "--out", file.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("Mercury") != std::string::npos);
    std::filesystem::remove(file);
}
