// Newtonian potential f(x, t) = -cos(2x - 2 f_e(t)) / (2 rho_e(t)^3), its Fourier
// coefficients alpha_j(e) and certified lower bounds on |alpha_2|, |alpha_3|.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "spinorbit/kepler.hpp"

namespace spinorbit::potential {

inline constexpr int kDefaultQuadrature = 2048;

struct Rational {
    std::int64_t num;
    std::int64_t den;
};

/// Taylor polynomial of alpha_j in the eccentricity; coefficients[k] multiplies e^k.
struct AlphaSeries {
    int j;
    int order;
    std::vector<Rational> coefficients;
};

struct RemainderParams {
    double b;
    int h;
    double e;
};

/// Truncation order h and disk parameter b used for the lower bound on |alpha_j|.
struct CanonicalRemainder {
    int h;
    double b;
};

double potential_f(double e, double x, double t);
double potential_fx(double e, double x, double t);
double potential_fxx(double e, double x, double t);

// Same as above with the orbital quantities already evaluated.
double potential_fx(const kepler::AnomalyTriple &orbit, double x);
double potential_fxx(const kepler::AnomalyTriple &orbit, double x);

/// sup over the torus of |f_x| (attained at perihelion).
double fx_sup_bound(double e);
/// sup over the torus of |f_xx|.
double fxx_sup_bound(double e);

/// alpha_j(e) by the periodic trapezoid rule in the eccentric anomaly.
///
/// The integrand is written in w = sqrt((1+e)/(1-e)) tan(u/2); where |tan(u/2)| > 1
/// numerator and denominator are divided by w^4 so that u = π is evaluated as the
/// finite limit. The value is checked against the half-resolution rule sharing the
/// even nodes; a disagreement above 1e-10 raises ConvergenceError.
double fourier_coefficient(double e, int j, int n_quad = kDefaultQuadrature);

/// alpha_j(e) as the j-th Fourier coefficient of G_e(t) = -exp(2i f_e(t)) / (2 rho_e(t)^3),
/// sampled uniformly in the mean anomaly. The imaginary part vanishes analytically.
std::complex<double> fourier_coefficient_complex(double e, int j,
                                                 int n_quad = kDefaultQuadrature);

const AlphaSeries &alpha_series_data(int j);

/// Horner evaluation of the stored series in extended precision, rounded once.
double alpha_series(int j, double e);

CanonicalRemainder canonical_remainder(int j);

/// Cauchy-estimate bound on |alpha_j(e) - series_h(e)| valid on 0 <= e < b/cosh(b).
double remainder_bound(const RemainderParams &p);

/// |series(e)| - remainder with the canonical (h, b) for j. Non-positive means no
/// certificate.
double alpha_lower_bound(int j, double e);

/// Upper bound on sup_t |G_e(t)| over the complex disk |e| < b/cosh(b).
double g_sup_bound(std::complex<double> e, double b);

}  // namespace spinorbit::potential
