// JSON export of constructed orbits.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "spinorbit/solver.hpp"

namespace spinorbit {

struct OrbitDiagnostics {
    double orbit_residual = 0.0;
    double resonance_residual = 0.0;
    std::optional<double> integration_deviation;  // RK4 vs reconstruction over one period
};

/// Writes parameters, xi*, the Fourier coefficients of u and x(s) sampled on
/// `grid_points` uniform nodes of [0, 2πq).
void write_orbit_json(std::ostream &out, const std::string &body_name,
                      const solver::ResonantOrbit &orbit, int grid_points,
                      const OrbitDiagnostics &diagnostics);

}  // namespace spinorbit
