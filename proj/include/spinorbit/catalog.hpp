// Physical parameters of resonant bodies and the derived model parameters.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinorbit {

struct Body {
    std::string name;
    std::string primary_name;
    double a = 0.0;         // km, maximal equatorial radius
    double b_radius = 0.0;  // km, minimal equatorial radius
    double c = 0.0;         // km, polar radius (stored, not used by the model)
    double e = 0.0;
    int p = 1;
    int q = 1;
    std::optional<double> K;  // rigidity constant, informational

    friend bool operator==(const Body &, const Body &) = default;
};

/// Parameters of the spin-orbit equation x'' + eta (x' - nu) + eps f_x(x, t) = 0 for a
/// p:q resonance, together with the rescaled (hat) parameters of the periodic problem.
struct ResonanceParams {
    int p = 1;
    int q = 1;
    double e = 0.0;
    double eps = 0.0;
    double eta = 0.0;
    double nu = 1.0;
    double eta_hat = 0.0;  // q eta
    double nu_hat = 0.0;   // q nu - p
    double eps_hat = 0.0;  // q^2 eps

    static ResonanceParams make(int p, int q, double e, double eps, double eta, double nu);
};

namespace catalog {

enum class Format { Csv, Json };

/// (3/2)(a^2 - b^2)/(a^2 + b^2).
double oblateness(double a, double b_radius);

double omega_of_e(double e);
double n_of_e(double e);
/// N_e / Omega_e, the drift of the averaged tidal torque.
double nu_of_e(double e);

/// Model parameters for a body at dissipation eta, with eps and nu derived from the
/// body's shape and eccentricity.
ResonanceParams resonance_params(const Body &body, double eta = 0.0);

/// Checks the Body invariants, throwing InvalidArgument on violation.
void validate(const Body &body);

std::vector<Body> load_catalog(std::istream &in, Format format);
std::vector<Body> load_catalog(std::string_view text, Format format);
/// Format chosen by extension (.json, otherwise CSV).
std::vector<Body> load_catalog_file(const std::filesystem::path &path);

void write_catalog(std::ostream &out, const std::vector<Body> &bodies, Format format);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

}  // namespace catalog
}  // namespace spinorbit
