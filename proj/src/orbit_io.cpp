#include "spinorbit/orbit_io.hpp"

#include <numbers>
#include <ostream>

#include <nlohmann/json.hpp>

#include "spinorbit/error.hpp"

namespace spinorbit {

void write_orbit_json(std::ostream &out, const std::string &body_name,
                      const solver::ResonantOrbit &orbit, int grid_points,
                      const OrbitDiagnostics &diagnostics) {
    if (grid_points < 1) throw InvalidArgument("write_orbit_json: grid needs at least one point");
    const auto &prm = orbit.params;
    nlohmann::ordered_json doc;
    doc["body"] = body_name;
    doc["p"] = prm.p;
    doc["q"] = prm.q;
    doc["e"] = prm.e;
    doc["eps"] = prm.eps;
    doc["eta"] = prm.eta;
    doc["nu"] = prm.nu;
    doc["xi_star"] = orbit.xi_star;
    doc["xi_normalized"] = orbit.xi_normalized;
    doc["target"] = orbit.target;
    doc["bifurcation_residual"] = orbit.bifurcation_residual;
    doc["orbit_residual"] = diagnostics.orbit_residual;
    doc["resonance_residual"] = diagnostics.resonance_residual;
    if (diagnostics.integration_deviation)
        doc["integration_deviation"] = *diagnostics.integration_deviation;
    auto roots = nlohmann::ordered_json::array();
    for (const auto &b : orbit.sign_changes) roots.push_back({b.lo, b.hi});
    doc["sign_changes"] = roots;

    auto modes = nlohmann::ordered_json::array();
    for (int k = 1; k <= orbit.u.order(); ++k) {
        const auto c = orbit.u.coefficient(k);
        modes.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    }
    doc["u_coefficients"] = modes;

    const double span = 2.0 * std::numbers::pi * prm.q;
    auto t = nlohmann::ordered_json::array();
    auto x = nlohmann::ordered_json::array();
    for (int m = 0; m < grid_points; ++m) {
        const double s = span * m / grid_points;
        t.push_back(s);
        x.push_back(orbit.x(s));
    }
    doc["samples"] = {{"t", t}, {"x", x}};
    out << doc.dump(2) << '\n';
}

}  // namespace spinorbit
