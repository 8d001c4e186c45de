#include "spinorbit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "spinorbit/catalog.hpp"
#include "spinorbit/error.hpp"
#include "spinorbit/kepler.hpp"
#include "spinorbit/potential.hpp"

namespace spinorbit::dynamics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double hermite(const SpinState &a, const SpinState &b, double t) {
    const double h = b.t - a.t;
    const double s = (t - a.t) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * a.x + (s3 - 2 * s2 + s) * h * a.v + (-2 * s3 + 3 * s2) * b.x +
           (s3 - s2) * h * b.v;
}

double interpolate(const std::vector<SpinState> &traj, double t) {
    auto it = std::lower_bound(traj.begin(), traj.end(), t,
                               [](const SpinState &s, double value) { return s.t < value; });
    if (it == traj.end()) it = traj.end() - 1;
    if (it == traj.begin()) ++it;
    return hermite(*(it - 1), *it, t);
}

}  // namespace

Derivative rhs(const SpinState &state, const ResonanceParams &params) {
    const double force = params.eps == 0.0 ? 0.0 : potential::potential_fx(params.e, state.x, state.t);
    return {state.v, -params.eta * (state.v - params.nu) - params.eps * force};
}

std::vector<SpinState> integrate(const SpinState &initial, double t_end,
                                 const ResonanceParams &params, double step) {
    if (!(step > 0.0)) throw InvalidArgument("integrate: step must be positive");
    if (!(t_end > initial.t)) throw InvalidArgument("integrate: t_end must exceed the start time");
    const auto n = static_cast<long>(std::ceil((t_end - initial.t) / step - 1e-9));
    const double h = (t_end - initial.t) / n;
    std::vector<SpinState> traj;
    traj.reserve(static_cast<std::size_t>(n) + 1);
    traj.push_back(initial);
    SpinState s = initial;
    for (long i = 0; i < n; ++i) {
        const double t0 = initial.t + i * h;
        s.t = t0;
        const Derivative k1 = rhs(s, params);
        const Derivative k2 = rhs({s.x + 0.5 * h * k1.dx, s.v + 0.5 * h * k1.dv, t0 + 0.5 * h}, params);
        const Derivative k3 = rhs({s.x + 0.5 * h * k2.dx, s.v + 0.5 * h * k2.dv, t0 + 0.5 * h}, params);
        const Derivative k4 = rhs({s.x + h * k3.dx, s.v + h * k3.dv, t0 + h}, params);
        s.x += h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
        s.v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
        s.t = i + 1 == n ? t_end : initial.t + (i + 1) * h;
        if (!std::isfinite(s.x) || !std::isfinite(s.v))
            throw ConvergenceError("integrate: non-finite state at t=" + std::to_string(s.t));
        traj.push_back(s);
    }
    return traj;
}

double check_resonance(const std::vector<SpinState> &trajectory, int p, int q) {
    if (trajectory.size() < 2) throw InvalidArgument("check_resonance: trajectory too short");
    const double period = kTwoPi * q;
    const double end = trajectory.back().t;
    if (end - trajectory.front().t < period * (1.0 - 1e-12))
        throw InvalidArgument("check_resonance: trajectory spans less than 2πq");
    double worst = 0.0;
    for (const auto &s : trajectory) {
        const double later = s.t + period;
        if (later > end * (1.0 + 1e-15) + 1e-12) break;
        worst = std::max(worst, std::abs(interpolate(trajectory, std::min(later, end)) - s.x -
                                         kTwoPi * p));
    }
    return worst;
}

double check_resonance(const solver::ResonantOrbit &orbit, int n_samples) {
    const int q = orbit.params.q;
    double worst = 0.0;
    for (int m = 0; m < n_samples; ++m) {
        const double s = kTwoPi * q * m / n_samples;
        worst = std::max(worst,
                         std::abs(orbit.x(s + kTwoPi * q) - orbit.x(s) - kTwoPi * orbit.params.p));
    }
    return worst;
}

double orbit_residual(const solver::ResonantOrbit &orbit, int n_samples) {
    const ResonanceParams &prm = orbit.params;
    if (orbit.u.order() == 0) {
        // u = 0: the residual reduces to the forcing term alone
        double worst = 0.0;
        for (int m = 0; m < n_samples; ++m) {
            const double t = kTwoPi * m / n_samples;
            const double fx = prm.eps_hat == 0.0
                                  ? 0.0
                                  : potential::potential_fx(prm.e, orbit.xi_star + prm.p * t, prm.q * t);
            worst = std::max(worst, std::abs(-prm.eta_hat * prm.nu_hat + prm.eps_hat * fx));
        }
        return worst;
    }
    const auto du = orbit.u.derivative();
    const auto u = orbit.u.sample(n_samples);
    const auto u1 = du.sample(n_samples);
    const auto u2 = du.derivative().sample(n_samples);
    double worst = 0.0;
    for (int m = 0; m < n_samples; ++m) {
        const double t = kTwoPi * m / n_samples;
        const auto anomalies = kepler::anomalies(prm.e, prm.q * t);
        const double fx = potential::potential_fx(anomalies, orbit.xi_star + prm.p * t + u[m]);
        const double r = u2[m] + prm.eta_hat * (u1[m] - prm.nu_hat) + prm.eps_hat * fx;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

SpinState initial_state(const solver::ResonantOrbit &orbit) {
    return {orbit.x(0.0), orbit.x_dot(0.0), 0.0};
}

double deviation_from_orbit(const std::vector<SpinState> &trajectory,
                            const solver::ResonantOrbit &orbit) {
    double worst = 0.0;
    for (const auto &s : trajectory) worst = std::max(worst, std::abs(s.x - orbit.x(s.t)));
    return worst;
}

void write_trajectory_csv(std::ostream &out, const std::vector<SpinState> &trajectory) {
    out << "t,x,v\n";
    for (const auto &s : trajectory)
        out << catalog::format_number(s.t) << ',' << catalog::format_number(s.x) << ','
            << catalog::format_number(s.v) << '\n';
}

}  // namespace spinorbit::dynamics
