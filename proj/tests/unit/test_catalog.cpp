#include <doctest.h>

#include <sstream>

#include "spinorbit/catalog.hpp"
#include "spinorbit/error.hpp"
#include "test_support.hpp"

using namespace spinorbit;
using test_support::data_path;

namespace {

std::vector<Body> parse_csv(const std::string &text) {
    return catalog::load_catalog(text, catalog::Format::Csv);
}

const char *kHeader = "name,primary,a_km,b_km,c_km,e,p,q\n";

int parse_error_line(const std::string &text) {
    try {
        parse_csv(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("oblateness") {
    CHECK(catalog::oblateness(1.0, 1.0) == 0.0);
    CHECK(catalog::oblateness(std::sqrt(3.0), 1.0) == doctest::Approx(0.75));
    CHECK_THROWS_AS(catalog::oblateness(1.0, 2.0), InvalidArgument);
    CHECK_THROWS_AS(catalog::oblateness(0.0, 0.0), InvalidArgument);
}

TEST_CASE("mean-motion ratio nu") {
    CHECK(catalog::nu_of_e(0.0) == 1.0);
    CHECK(catalog::nu_of_e(1e-3) - 1.0 ==
          doctest::Approx(6.0000003750216249649e-6).epsilon(1e-8));
    CHECK(catalog::nu_of_e(0.2056) == doctest::Approx(1.2558354581561656264).epsilon(1e-14));
    double prev = 1.0;
    for (int i = 1; i < 90; ++i) {
        const double e = i / 100.0;
        const double nu = catalog::nu_of_e(e);
        CHECK(nu > prev);
        CHECK(nu == doctest::Approx(catalog::n_of_e(e) / catalog::omega_of_e(e)).epsilon(1e-14));
        prev = nu;
    }
    CHECK_THROWS_AS(catalog::nu_of_e(1.0), InvalidArgument);
}

TEST_CASE("resonance parameters") {
    const auto r = ResonanceParams::make(3, 2, 0.2056, 8e-4, 1e-3, 1.25);
    CHECK(r.eta_hat == doctest::Approx(2e-3));
    CHECK(r.eps_hat == doctest::Approx(3.2e-3));
    CHECK(r.nu_hat == doctest::Approx(2 * 1.25 - 3));
    CHECK_THROWS_AS(ResonanceParams::make(2, 2, 0.1, 1e-3, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(ResonanceParams::make(1, 1, 0.1, -1e-3, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(ResonanceParams::make(1, 1, 0.1, 1e-3, -1.0, 1.0), InvalidArgument);
}

TEST_CASE("bundled catalogs") {
    const auto moons = catalog::load_catalog_file(data_path("moons.csv"));
    CHECK(moons.size() == 18);
    for (const auto &b : moons) {
        CHECK(b.p == 1);
        CHECK(b.q == 1);
    }
    const auto mercury = catalog::load_catalog_file(data_path("mercury.csv"));
    REQUIRE(mercury.size() == 1);
    CHECK(mercury[0].p == 3);
    CHECK(mercury[0].q == 2);
    CHECK(mercury[0].e == 0.2056);
    const auto minor = catalog::load_catalog_file(data_path("minor_bodies.csv"));
    CHECK(minor.size() == 5);

    const auto moon = test_support::find_body("moons.csv", "Moon");
    CHECK(catalog::oblateness(moon.a, moon.b_radius) ==
          doctest::Approx(5.0061856650e-4).epsilon(1e-9));
}

TEST_CASE("round trip is exact") {
    for (const char *file : {"moons.csv", "mercury.csv", "minor_bodies.csv"}) {
        const auto bodies = catalog::load_catalog_file(data_path(file));
        for (auto fmt : {catalog::Format::Csv, catalog::Format::Json}) {
            std::ostringstream first;
            catalog::write_catalog(first, bodies, fmt);
            const auto again = catalog::load_catalog(first.str(), fmt);
            CHECK(again == bodies);
            std::ostringstream second;
            catalog::write_catalog(second, again, fmt);
            CHECK(second.str() == first.str());
        }
    }
}

TEST_CASE("optional K column") {
    const auto bodies = parse_csv(
        "name,primary,a_km,b_km,c_km,e,p,q,K\n"
        "A,X,10,9,8,0.01,1,1,0.5\n"
        "B,X,10,9,8,0.01,1,1,\n");
    REQUIRE(bodies.size() == 2);
    CHECK(bodies[0].K == 0.5);
    CHECK(!bodies[1].K);
}

TEST_CASE("comments and blank lines are skipped") {
    const auto bodies =
        parse_csv(std::string("# source\n") + kHeader + "\nA,X,10,9,8,0.01,1,1\n# end\n");
    CHECK(bodies.size() == 1);
}

TEST_CASE("malformed catalogs report the offending line") {
    CHECK_THROWS_AS(parse_csv("name,a,b\nA,1,2\n"), ParseError);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,0.01,1\n") == 2);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,0.01,1,1\nB,X,ten,9,8,0.01,1,1\n") ==
          3);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,9,10,8,0.01,1,1\n") == 2);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,1.0,1,1\n") == 2);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,0.01,2,4\n") == 2);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,0.01,1,1\nA,X,10,9,8,0.01,1,1\n") ==
          3);
    CHECK(parse_error_line(std::string(kHeader) + "A,X,10,9,8,-0.1,1,1\n") == 2);
    CHECK_THROWS_AS(catalog::load_catalog("[{\"name\": 1}]", catalog::Format::Json), ParseError);
    CHECK_THROWS_AS(catalog::load_catalog("{not json", catalog::Format::Json), ParseError);
    CHECK_THROWS_AS(catalog::load_catalog_file(data_path("does_not_exist.csv")), Error);
}

TEST_CASE("format detection by extension") {
    const auto bodies = catalog::load_catalog_file(data_path("mercury.csv"));
    CHECK(bodies[0].name == "Mercury");
}
