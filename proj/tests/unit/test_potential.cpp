#include <doctest.h>

#include <random>

#include "spinorbit/error.hpp"
#include "spinorbit/kepler.hpp"
#include "spinorbit/potential.hpp"
#include "test_support.hpp"

using namespace spinorbit;
using test_support::kPi;

TEST_CASE("potential derivatives") {
    CHECK(potential::potential_fx(0.0, kPi / 4, 0.0) == doctest::Approx(1.0));
    CHECK(potential::potential_fx(0.0, 0.9, 0.9) == doctest::Approx(0.0));
    CHECK(potential::potential_fxx(0.0, 0.9, 0.9) == doctest::Approx(2.0));
    CHECK(std::abs(potential::potential_fxx(0.0, 0.9 + kPi / 4, 0.9)) < 1e-15);
    // mpmath composition of bisection Kepler + direct formula
    CHECK(std::abs(potential::potential_fx(0.0549, 0.3, 0.7) - -0.92071643312841646321) < 1e-12);
    CHECK(std::abs(potential::potential_fxx(0.2056, 1.1, 2.3) - -1.2616489322274617574) < 1e-12);
}

TEST_CASE("potential_fx is the x-derivative of f") {
    const double h = 1e-5;
    for (double x : {0.2, 1.7, 4.0}) {
        const double fd = (potential::potential_f(0.3, x + h, 1.2) -
                           potential::potential_f(0.3, x - h, 1.2)) / (2 * h);
        CHECK(potential::potential_fx(0.3, x, 1.2) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("sup |f_xx| on a dense torus grid stays below 2/(1-e)^3") {
    const double e = 0.2056;
    double sup = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto orbit = kepler::anomalies(e, 2 * kPi * i / 1000);
        for (int k = 0; k < 1000; ++k)
            sup = std::max(sup, std::abs(potential::potential_fxx(orbit, 2 * kPi * k / 1000)));
    }
    CHECK(sup <= potential::fxx_sup_bound(e));
    CHECK(sup >= 0.999 * potential::fxx_sup_bound(e));
}

TEST_CASE("fourier coefficients at e = 0") {
    CHECK(potential::fourier_coefficient(0.0, 2) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(potential::fourier_coefficient(0.0, 3)) < 1e-14);
    for (int j = -10; j <= 10; ++j)
        if (j != 0 && j != 2) CHECK(std::abs(potential::fourier_coefficient(0.0, j)) <= 1e-12);
}

TEST_CASE("fourier coefficients match high-precision quadrature") {
    struct Ref {
        double e;
        int j;
        double alpha;
    };
    // mpmath quadrature of G_e in the mean anomaly (tests/oracles/freeze_values.py)
    const Ref refs[] = {{0.1, 1, 0.024968815495188685177},     {0.1, 2, -0.48754056419202211585},
                        {0.1, 3, -0.17117530856165050686},     {0.1, 5, -0.0085920196673059307775},
                        {0.2056, 1, 0.051130860646903284816},  {0.2056, 2, -0.4478821105657190275},
                        {0.2056, 3, -0.32708909668190275279},  {0.2056, 5, -0.068978172589323448868},
                        {0.5, 1, 0.12133506026875146564},      {0.5, 2, -0.21191584659882204058},
                        {0.5, 3, -0.45093360285772328281},     {0.5, 5, -0.55820501826501648052}};
    for (const auto &r : refs) {
        CAPTURE(r.e);
        CAPTURE(r.j);
        CHECK(std::abs(potential::fourier_coefficient(r.e, r.j) - r.alpha) < 1e-12);
    }
}

TEST_CASE("real and complex quadrature routes agree") {
    for (double e : {0.05, 0.2056, 0.5}) {
        for (int j = -3; j <= 10; ++j) {
            if (j == 0) continue;
            const auto z = potential::fourier_coefficient_complex(e, j);
            CHECK(std::abs(z.imag()) <= 1e-12);
            CHECK(std::abs(z.real() - potential::fourier_coefficient(e, j)) <= 1e-10);
        }
    }
}

TEST_CASE("coefficients are bounded by sup |G_e|") {
    for (double b : {0.462678, 0.768368}) {
        for (double e : {0.01, 0.2, 0.4}) {
            if (e >= kepler::contraction_radius(b)) continue;
            const double bound = potential::g_sup_bound(e, b);
            for (int j = 1; j <= 10; ++j)
                CHECK(std::abs(potential::fourier_coefficient(e, j)) <= bound);
        }
    }
}

TEST_CASE("fourier_coefficient errors") {
    CHECK_THROWS_AS(potential::fourier_coefficient(0.1, 0), InvalidArgument);
    CHECK_THROWS_AS(potential::fourier_coefficient(0.1, 2, 62), InvalidArgument);
    CHECK_THROWS_AS(potential::fourier_coefficient(0.1, 2, 65), InvalidArgument);
    CHECK_THROWS_AS(potential::fourier_coefficient(1.0, 2), InvalidArgument);
    // strongly peaked integrand at high eccentricity is not resolved by 64 nodes
    CHECK_THROWS_AS(potential::fourier_coefficient(0.95, 2, 64), ConvergenceError);
}

TEST_CASE("alpha series values") {
    CHECK(potential::alpha_series(2, 0.0) == -0.5);
    CHECK(potential::alpha_series(3, 0.0) == 0.0);
    CHECK(potential::alpha_series(2, 0.1) == doctest::Approx(-0.487540625).epsilon(1e-16));
    // exact rational evaluation at e = 0.2056
    CHECK(std::abs(potential::alpha_series(3, 0.2056) - -0.32708909668190275354) < 1e-16);
    CHECK_THROWS_AS(potential::alpha_series(4, 0.1), InvalidArgument);
}

TEST_CASE("alpha series data") {
    const auto &a2 = potential::alpha_series_data(2);
    CHECK(a2.order == 4);
    CHECK(a2.coefficients.size() == 5);
    CHECK(a2.coefficients[4].num == -13);
    CHECK(a2.coefficients[4].den == 32);
    const auto &a3 = potential::alpha_series_data(3);
    CHECK(a3.order == 21);
    REQUIRE(a3.coefficients.size() == 22);
    for (std::size_t k = 0; k < a3.coefficients.size(); k += 2) CHECK(a3.coefficients[k].num == 0);
    CHECK(a3.coefficients[1].num == -7);
    CHECK(a3.coefficients[21].num == 467145991400853);
    CHECK(a3.coefficients[21].den == 92599494901760000);
}

TEST_CASE("remainder bound") {
    CHECK(potential::remainder_bound({0.462678, 4, 0.0}) == 0.0);
    CHECK(potential::remainder_bound({0.462678, 4, 0.02}) >
          potential::remainder_bound({0.462678, 4, 0.01}));
    CHECK(potential::remainder_bound({0.768368, 21, 0.2056}) ==
          doctest::Approx(0.045001464780043992655).epsilon(1e-12));
    CHECK(potential::remainder_bound({0.462678, 4, 0.1}) ==
          doctest::Approx(1.527936446177189677).epsilon(1e-12));
    CHECK_THROWS_AS(potential::remainder_bound({0.462678, 4, 0.42}), InvalidArgument);
    CHECK_THROWS_AS(potential::remainder_bound({1.2, 4, 0.1}), InvalidArgument);
    // monotone along a grid
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double r = potential::remainder_bound({0.768368, 21, 0.58 * i / 100});
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("series, quadrature and remainder are consistent") {
    // double-precision quadrature cannot resolve remainders far below machine epsilon
    const double roundoff = 1e-15;
    const double e = 0.1;
    const double quad = potential::fourier_coefficient(e, 2);
    CHECK(std::abs(quad - potential::alpha_series(2, e)) <=
          potential::remainder_bound({0.462678, 4, e}));
    for (int i = 1; i <= 20; ++i) {
        const double e3 = 0.58 * i / 21;
        CHECK(std::abs(potential::fourier_coefficient(e3, 3) - potential::alpha_series(3, e3)) <=
              potential::remainder_bound({0.768368, 21, e3}) + roundoff);
    }
}

TEST_CASE("alpha lower bound") {
    CHECK(potential::alpha_lower_bound(2, 0.0) == 0.5);
    CHECK(potential::alpha_lower_bound(3, 0.0) == 0.0);
    CHECK(potential::alpha_lower_bound(2, 0.0549) == doctest::Approx(0.4547526525).epsilon(1e-9));
    CHECK(potential::alpha_lower_bound(3, 0.2056) == doctest::Approx(0.2820876319).epsilon(1e-9));
    CHECK_THROWS_AS(potential::alpha_lower_bound(2, 0.45), InvalidArgument);
    CHECK_THROWS_AS(potential::alpha_lower_bound(3, 0.6), InvalidArgument);
    // a lower bound indeed
    for (double e : {0.01, 0.0549, 0.1}) CHECK(potential::alpha_lower_bound(2, e) <= std::abs(potential::fourier_coefficient(e, 2)));
    CHECK(potential::alpha_lower_bound(3, 0.2056) <= std::abs(potential::fourier_coefficient(0.2056, 3)));
}
