// Existence conditions for 1:1 and 3:2 spin-orbit resonances.
//
// A body is certified when four inequalities hold: the Green-operator bound on
// the dissipation, the contraction ("range") condition on the oblateness, the
// non-emptiness of the guaranteed range [-a_pq, a_pq] of the bifurcation function,
// and the bifurcation condition bounding eta. All |alpha_q| values used here are
// the certified lower bounds from potential::alpha_lower_bound.
#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "spinorbit/catalog.hpp"

namespace spinorbit::certification {

inline constexpr double kUnconstrained = std::numeric_limits<double>::infinity();

struct CertificationReport {
    std::string body_name;
    int p = 1;
    int q = 1;
    double alpha_lower = 0.0;      // lower bound on |alpha_q(e)|
    double range_margin = 0.0;     // RHS - LHS of the range condition
    double nonempty_margin = 0.0;  // RHS - LHS of the non-empty condition
    double eta_bif_max = 0.0;      // RHS of the bifurcation condition (+inf if unconstrained)
    double eta_green_max = 0.0;    // dissipation cap from the Green operator bound
    double eta_admissible = 0.0;   // min(eta_bif_max, eta_green_max)
    bool certified = false;

    /// certified and eta within the admissible range.
    bool admits(double eta) const { return certified && eta >= 0.0 && eta <= eta_admissible; }
};

/// Fourier index j = 2p/q selecting alpha_j; only (1,1) and (3,2) are supported.
int resonance_index(int p, int q);

/// Bound on the sup-norm of the inverse of u'' + eta_hat u' on zero-mean functions.
double green_norm_bound(double eta_hat);

/// Largest eta_hat for which green_norm_bound(eta_hat) <= 5/4.
double green_eta_hat_cap();

/// green_eta_hat_cap() / q.
double green_eta_cap(int q);

/// M_1 = 5 / (1 - e)^6, the bound on the first-order correction of the bifurcation function.
double correction_bound(double e);

double range_margin(double e, double eps, int p, int q);
double nonempty_margin(double e, double eps, int p, int q);

/// RHS of the bifurcation condition. Returns kUnconstrained when q nu = p and 0 when
/// the bracket 2|alpha_q| - q^2 eps M_1 is negative.
double eta_max(double e, double eps, double nu, int p, int q);

/// a_pq = 2 |alpha_q| - eps_hat M_1 with the certified lower bound for |alpha_q|.
double guaranteed_half_width(const ResonanceParams &params);

CertificationReport certify(const std::string &name, int p, int q, double e, double eps,
                            double nu);
CertificationReport certify(const Body &body);

/// Certifies bodies concurrently; output order follows input order.
std::vector<CertificationReport> certify_all(const std::vector<Body> &bodies);

enum class ReportFormat { Csv, Json, Markdown };

void write_reports(std::ostream &out, const std::vector<CertificationReport> &reports,
                   ReportFormat format);

/// A row of a reference table (columns 2-5) to compare against.
struct ReferenceRow {
    std::string body_name;
    double alpha_lower;
    double range_margin;
    double nonempty_margin;
    double eta_bif_max;
};

/// True when a and b agree once both are rounded to `digits` significant digits.
bool agree_to_significant_digits(double a, double b, int digits);

/// Names of the rows whose four columns do not agree to `digits` significant digits
/// (or that have no matching report).
std::vector<std::string> compare_with_reference(const std::vector<CertificationReport> &reports,
                                                const std::vector<ReferenceRow> &reference,
                                                int digits);

std::vector<ReferenceRow> load_reference(std::istream &in);

}  // namespace spinorbit::certification
