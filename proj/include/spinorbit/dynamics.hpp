// Direct integration of x'' + eta (x' - nu) + eps f_x(x, t) = 0, used as an
// independent check of the constructed resonant orbits.
#pragma once

#include <iosfwd>
#include <vector>

#include "spinorbit/catalog.hpp"
#include "spinorbit/solver.hpp"

namespace spinorbit::dynamics {

/// x is kept on the real line (no reduction mod 2π).
struct SpinState {
    double x = 0.0;
    double v = 0.0;
    double t = 0.0;
};

struct Derivative {
    double dx;
    double dv;
};

inline constexpr double kDefaultStep = 6.283185307179586 / 4096.0;

Derivative rhs(const SpinState &state, const ResonanceParams &params);

/// Classical RK4 from initial.t to t_end; the step is shrunk uniformly so the last
/// node lands on t_end. The returned trajectory includes the initial state.
std::vector<SpinState> integrate(const SpinState &initial, double t_end,
                                 const ResonanceParams &params, double step = kDefaultStep);

/// sup over trajectory nodes t with t + 2πq inside the span of
/// |x(t + 2πq) - x(t) - 2πp|, interpolating with cubic Hermite polynomials.
double check_resonance(const std::vector<SpinState> &trajectory, int p, int q);

/// Same identity evaluated on the orbit reconstruction at n_samples points.
double check_resonance(const solver::ResonantOrbit &orbit, int n_samples = 256);

/// sup-norm of u'' + eta_hat (u' - nu_hat) + eps_hat f_x(xi + p t + u(t), q t) on
/// n_samples uniform nodes, derivatives taken spectrally.
double orbit_residual(const solver::ResonantOrbit &orbit, int n_samples = 1024);

/// Initial state on the reconstructed orbit at s = 0.
SpinState initial_state(const solver::ResonantOrbit &orbit);

/// sup over the trajectory of |x_traj(t) - x_orbit(t)|.
double deviation_from_orbit(const std::vector<SpinState> &trajectory,
                            const solver::ResonantOrbit &orbit);

void write_trajectory_csv(std::ostream &out, const std::vector<SpinState> &trajectory);

}  // namespace spinorbit::dynamics
