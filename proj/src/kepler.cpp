#include "spinorbit/kepler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinorbit/error.hpp"

namespace spinorbit::kepler {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_tol(double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("kepler: tolerance must be positive");
}

// Solves u - e sin u = t for t in [-π, π].
double solve_reduced(double e, double t, double tol) {
    double lo = t - e;
    double hi = t + e;
    double u = t + e * std::sin(t);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double g = u - e * std::sin(u) - t;
        if (std::abs(g) <= tol) return u;
        if (g > 0.0) hi = u; else lo = u;
        const double dg = 1.0 - e * std::cos(u);
        double next = u - g / dg;
        // stagnation or a step leaving the bracket falls back to bisection
        if (!(next > lo && next < hi) || next == u) next = 0.5 * (lo + hi);
        if (next == u) break;  // bracket exhausted at this tolerance
        u = next;
    }
    throw ConvergenceError("kepler: no convergence for e=" + std::to_string(e) +
                           ", t=" + std::to_string(t));
}

}  // namespace

double contraction_radius(double b) { return b / std::cosh(b); }

double holomorphy_argmax() {
    double y = 1.2;
    for (int it = 0; it < 50; ++it) {
        const double th = std::tanh(y);
        const double g = y * th - 1.0;
        const double dg = th + y * (1.0 - th * th);
        const double step = g / dg;
        y -= step;
        if (std::abs(step) < 1e-16) break;
    }
    return y;
}

double holomorphy_radius() {
    const double y = holomorphy_argmax();
    return y / std::cosh(y);
}

double eccentric_anomaly(double e, double t, double tol) {
    check_tol(tol);
    if (!(e >= 0.0 && e < 1.0))
        throw InvalidArgument("kepler: real eccentricity must satisfy 0 <= e < 1, got " +
                              std::to_string(e));
    if (!std::isfinite(t)) throw InvalidArgument("kepler: non-finite mean anomaly");
    const double k = std::round(t / kTwoPi);
    const double reduced = t - kTwoPi * k;
    if (e == 0.0) return t;
    return solve_reduced(e, reduced, tol) + kTwoPi * k;
}

std::complex<double> eccentric_anomaly(std::complex<double> e, double t, double b, double tol) {
    check_tol(tol);
    if (!(b > 0.0 && b < 1.0)) throw InvalidArgument("kepler: b must lie in (0, 1)");
    if (!(std::abs(e) < contraction_radius(b)))
        throw InvalidArgument("kepler: |e| must be below b/cosh(b)");
    std::complex<double> v{0.0, 0.0};
    for (int it = 0; it < kMaxIterations; ++it) {
        const std::complex<double> next = e * std::sin(v + t);
        const double step = std::abs(next - v);
        v = next;
        if (step <= tol) return v + t;
    }
    throw ConvergenceError("kepler: complex contraction did not converge");
}

double true_anomaly(double e, double u) {
    const double beta = e / (1.0 + std::sqrt(1.0 - e * e));
    return u + 2.0 * std::atan2(beta * std::sin(u), 1.0 - beta * std::cos(u));
}

AnomalyTriple anomalies(double e, double t, double tol) {
    const double u = eccentric_anomaly(e, t, tol);
    return {u, 1.0 - e * std::cos(u), true_anomaly(e, u)};
}

ComplexAnomalies anomalies(std::complex<double> e, double t, double b, double tol) {
    const std::complex<double> u = eccentric_anomaly(e, t, b, tol);
    const std::complex<double> rho = 1.0 - e * std::cos(u);
    if (std::abs(rho) <= tol) throw InvalidArgument("kepler: degenerate orbital radius");
    return {u, rho};
}

}  // namespace spinorbit::kepler
