// Kepler equation t = u - e sin(u) for real and complex eccentricity.
#pragma once

#include <complex>

namespace spinorbit::kepler {

inline constexpr double kDefaultTol = 1e-13;
inline constexpr int kMaxIterations = 200;

/// Eccentric anomaly u, normalized orbital radius rho = 1 - e cos u and the
/// true anomaly f, continued so that f(t) - t is 2π-periodic and f(0) = 0.
struct AnomalyTriple {
    double u;
    double rho;
    double f;
};

struct ComplexAnomalies {
    std::complex<double> u;
    std::complex<double> rho;
};

/// Radius e_* = b / cosh(b) of the eccentricity disk on which the contraction
/// v -> e sin(v + t) maps the ball |v| <= b into itself.
double contraction_radius(double b);

/// y_* solving y tanh(y) = 1, the maximizer of y / cosh(y).
double holomorphy_argmax();

/// r_* = max_y y / cosh(y), the radius of holomorphy of e -> u_e(t).
double holomorphy_radius();

/// Real eccentric anomaly for 0 <= e < 1. Newton seeded at t + e sin t with a
/// bisection fallback on the bracket [t - e, t + e].
double eccentric_anomaly(double e, double t, double tol = kDefaultTol);

/// Complex eccentric anomaly via the contraction v <- e sin(v + t); requires
/// |e| < b / cosh(b) with 0 < b < 1. The result satisfies |u - t| <= b.
std::complex<double> eccentric_anomaly(std::complex<double> e, double t, double b,
                                       double tol = kDefaultTol);

AnomalyTriple anomalies(double e, double t, double tol = kDefaultTol);

/// Complex u and rho; throws when |rho| falls within tol of zero.
ComplexAnomalies anomalies(std::complex<double> e, double t, double b,
                           double tol = kDefaultTol);

/// True anomaly from the eccentric anomaly, continuous in u and equal to u at
/// u = kπ.
double true_anomaly(double e, double u);

}  // namespace spinorbit::kepler
