#include "spinorbit/potential.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinorbit/detail/summation.hpp"
#include "spinorbit/error.hpp"

namespace spinorbit::potential {

namespace {

constexpr double kPi = std::numbers::pi;

void check_physical(double e) {
    if (!(e >= 0.0 && e < 1.0))
        throw InvalidArgument("potential: eccentricity must satisfy 0 <= e < 1");
}

void check_quadrature(int j, int n_quad) {
    if (j == 0) throw InvalidArgument("potential: alpha_0 is not defined (no j = 0 term)");
    if (n_quad < 64 || n_quad % 2 != 0)
        throw InvalidArgument("potential: n_quad must be even and at least 64");
}

// Bracket of the u-integrand divided by rho^2 (w^2 + 1)^2.
double alpha_integrand(double e, int j, double k, double u) {
    const double rho = 1.0 - e * std::cos(u);
    const double phase = j * (u - e * std::sin(u));
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double half_sin = std::sin(0.5 * u);
    const double half_cos = std::cos(0.5 * u);
    double bracket;
    if (std::abs(half_sin) <= std::abs(half_cos)) {
        const double w = k * half_sin / half_cos;
        const double w2 = w * w;
        const double den = (w2 + 1.0) * (w2 + 1.0);
        bracket = ((w2 * w2 - 6.0 * w2 + 1.0) * c - 4.0 * w * (w2 - 1.0) * s) / den;
    } else {
        // z = 1/w; vanishes at u = π
        const double z = half_cos / (k * half_sin);
        const double z2 = z * z;
        const double den = (1.0 + z2) * (1.0 + z2);
        bracket = ((1.0 - 6.0 * z2 + z2 * z2) * c - 4.0 * (z - z * z2) * s) / den;
    }
    return bracket / (rho * rho);
}

const AlphaSeries kAlpha2{2, 4, {{-1, 2}, {0, 1}, {5, 4}, {0, 1}, {-13, 32}}};

const AlphaSeries kAlpha3{3, 21,
                          {{0, 1},
                           {-7, 4},
                           {0, 1},
                           {123, 32},
                           {0, 1},
                           {-489, 256},
                           {0, 1},
                           {1763, 4096},
                           {0, 1},
                           {-13527, 327680},
                           {0, 1},
                           {180369, 13107200},
                           {0, 1},
                           {5986093, 734003200},
                           {0, 1},
                           {24606987, 3355443200},
                           {0, 1},
                           {33790034193, 5261334937600},
                           {0, 1},
                           {1193558821627, 210453397504000},
                           {0, 1},
                           {467145991400853, 92599494901760000}}};

}  // namespace

double potential_f(double e, double x, double t) {
    check_physical(e);
    const auto orbit = kepler::anomalies(e, t);
    return -std::cos(2.0 * x - 2.0 * orbit.f) / (2.0 * orbit.rho * orbit.rho * orbit.rho);
}

double potential_fx(const kepler::AnomalyTriple &orbit, double x) {
    return std::sin(2.0 * x - 2.0 * orbit.f) / (orbit.rho * orbit.rho * orbit.rho);
}

double potential_fxx(const kepler::AnomalyTriple &orbit, double x) {
    return 2.0 * std::cos(2.0 * x - 2.0 * orbit.f) / (orbit.rho * orbit.rho * orbit.rho);
}

double potential_fx(double e, double x, double t) {
    check_physical(e);
    return potential_fx(kepler::anomalies(e, t), x);
}

double potential_fxx(double e, double x, double t) {
    check_physical(e);
    return potential_fxx(kepler::anomalies(e, t), x);
}

double fx_sup_bound(double e) {
    check_physical(e);
    return 1.0 / std::pow(1.0 - e, 3);
}

double fxx_sup_bound(double e) { return 2.0 * fx_sup_bound(e); }

double fourier_coefficient(double e, int j, int n_quad) {
    check_physical(e);
    check_quadrature(j, n_quad);
    const double k = std::sqrt((1.0 + e) / (1.0 - e));
    detail::CompensatedSum<double> even;
    detail::CompensatedSum<double> odd;
    for (int m = 0; m < n_quad; ++m) {
        const double u = 2.0 * kPi * m / n_quad;
        const double v = alpha_integrand(e, j, k, u);
        (m % 2 == 0 ? even : odd).add(v);
    }
    // alpha = -(1/4π) ∫ = -(1/2) mean
    const double fine = -0.5 * (even.value() + odd.value()) / n_quad;
    const double coarse = -0.5 * even.value() / (n_quad / 2);
    if (std::abs(fine - coarse) > 1e-10)
        throw ConvergenceError("potential: quadrature unresolved for e=" + std::to_string(e) +
                               ", j=" + std::to_string(j) + "; increase n_quad");
    return fine;
}

std::complex<double> fourier_coefficient_complex(double e, int j, int n_quad) {
    check_physical(e);
    check_quadrature(j, n_quad);
    detail::ComplexCompensatedSum acc;
    for (int m = 0; m < n_quad; ++m) {
        const double t = 2.0 * kPi * m / n_quad;
        const auto orbit = kepler::anomalies(e, t);
        const double rho3 = orbit.rho * orbit.rho * orbit.rho;
        const std::complex<double> g = -std::polar(1.0, 2.0 * orbit.f) / (2.0 * rho3);
        acc.add(g * std::polar(1.0, -j * t));
    }
    return acc.value() / static_cast<double>(n_quad);
}

const AlphaSeries &alpha_series_data(int j) {
    if (j == 2) return kAlpha2;
    if (j == 3) return kAlpha3;
    throw InvalidArgument("potential: Taylor series stored only for j = 2, 3");
}

double alpha_series(int j, double e) {
    const AlphaSeries &series = alpha_series_data(j);
    if (!(e >= 0.0)) throw InvalidArgument("potential: series needs e >= 0");
    const long double x = e;
    long double acc = 0.0L;
    for (auto it = series.coefficients.rbegin(); it != series.coefficients.rend(); ++it)
        acc = acc * x + static_cast<long double>(it->num) / static_cast<long double>(it->den);
    return static_cast<double>(acc);
}

CanonicalRemainder canonical_remainder(int j) {
    if (j == 2) return {4, 0.462678};
    if (j == 3) return {21, 0.768368};
    throw InvalidArgument("potential: canonical remainder only for j = 2, 3");
}

double remainder_bound(const RemainderParams &p) {
    if (!(p.b > 0.0 && p.b < 1.0)) throw InvalidArgument("remainder_bound: b must lie in (0, 1)");
    if (p.h < 0) throw InvalidArgument("remainder_bound: order must be non-negative");
    const double e_star = kepler::contraction_radius(p.b);
    if (!(p.e >= 0.0 && p.e < e_star))
        throw InvalidArgument("remainder_bound: e=" + std::to_string(p.e) +
                              " outside the disk e < b/cosh(b)=" + std::to_string(e_star));
    const double ch = std::cosh(p.b);
    const double amp = (1.0 + e_star - p.e) * (1.0 + ch) + 1.0 - p.b;
    const double prefactor = 2.0 / std::pow(1.0 - p.b, 5) * amp * amp;
    return prefactor * std::pow(p.e / (e_star - p.e), p.h + 1);
}

double alpha_lower_bound(int j, double e) {
    const CanonicalRemainder c = canonical_remainder(j);
    return std::abs(alpha_series(j, e)) - remainder_bound({c.b, c.h, e});
}

double g_sup_bound(std::complex<double> e, double b) {
    if (!(b > 0.0 && b < 1.0)) throw InvalidArgument("g_sup_bound: b must lie in (0, 1)");
    const double amp = std::abs(1.0 - e) * (1.0 + std::cosh(b)) + 1.0 - b;
    return 2.0 / std::pow(1.0 - b, 5) * amp * amp;
}

}  // namespace spinorbit::potential
