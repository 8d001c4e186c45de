#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "spinorbit/catalog.hpp"
#include "spinorbit/periodic.hpp"

namespace test_support {

inline constexpr double kPi = std::numbers::pi;

inline std::string data_path(const std::string &name) {
    return std::string(SPINORBIT_DATA_DIR) + "/" + name;
}

inline spinorbit::Body find_body(const std::string &file, const std::string &name) {
    for (auto &b : spinorbit::catalog::load_catalog_file(data_path(file)))
        if (b.name == name) return b;
    throw std::runtime_error("no body " + name);
}

// Random real zero-mean trigonometric polynomial with coefficients decaying like 1/k.
inline spinorbit::PeriodicFunction random_trig(std::mt19937_64 &rng, int degree) {
    std::normal_distribution<double> n01;
    spinorbit::PeriodicFunction f(degree);
    for (int k = 1; k <= degree; ++k) f.set_coefficient(k, {n01(rng) / k, n01(rng) / k});
    return f;
}

// Bisection on g(u) = u - e sin u - t, independent of the library solver.
inline double kepler_bisection(double e, double t) {
    double lo = t - 1.0;
    double hi = t + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid - e * std::sin(mid) - t > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace test_support
