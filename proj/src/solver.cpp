#include "spinorbit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spinorbit/certification.hpp"
#include "spinorbit/error.hpp"
#include "spinorbit/kepler.hpp"

namespace spinorbit::solver {

namespace {

constexpr double kPi = std::numbers::pi;

int default_nodes(int modes) {
    int n = 1;
    while (n < 4 * modes || n < 2 * modes + 1) n <<= 1;
    return n;
}

double sup_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

SolverOptions default_options(const ResonanceParams &params) {
    SolverOptions o;
    o.modes = params.q == 1 ? 64 : 128;
    return o;
}

PeriodicFunction green_apply(const PeriodicFunction &g, double eta_hat) {
    if (!(eta_hat >= 0.0)) throw InvalidArgument("green_apply: eta_hat must be non-negative");
    PeriodicFunction u(g.order());
    for (int k = 1; k <= g.order(); ++k)
        u.set_coefficient(k, g.coefficient(k) / std::complex<double>(-double(k) * k, eta_hat * k));
    return u;
}

PeriodicFunction green_apply(std::span<const double> g, int order, double eta_hat) {
    double mean = 0.0;
    PeriodicFunction coeffs = PeriodicFunction::from_samples(g, order, &mean);
    if (std::abs(mean) > 1e-12 * std::max(1.0, sup_abs(g)))
        throw InvalidArgument("green_apply: input has nonzero mean " + std::to_string(mean));
    return green_apply(coeffs, eta_hat);
}

double ball_radius(const ResonanceParams &params) {
    return 2.5 * params.eps_hat / std::pow(1.0 - params.e, 3);
}

double contraction_bound(const ResonanceParams &params) {
    return 5.0 * params.eps_hat / std::pow(1.0 - params.e, 3);
}

double ResonantOrbit::x(double s) const {
    const double ratio = static_cast<double>(params.p) / params.q;
    return ratio * s + xi_star + u(s / params.q);
}

double ResonantOrbit::x_dot(double s) const {
    const double ratio = static_cast<double>(params.p) / params.q;
    return ratio + u.derivative()(s / params.q) / params.q;
}

ResonanceSolver::ResonanceSolver(const ResonanceParams &params, SolverOptions options)
    : params_(params), options_(options) {
    if (options_.modes < 1) throw InvalidArgument("solver: need at least one Fourier mode");
    if (!(params_.e >= 0.0 && params_.e < 1.0))
        throw InvalidArgument("solver: eccentricity must satisfy 0 <= e < 1");
    nodes_ = options_.collocation > 0 ? options_.collocation : default_nodes(options_.modes);
    if (nodes_ < 2 * options_.modes + 1)
        throw InvalidArgument("solver: collocation grid needs at least 2N+1 nodes");
    two_f_.resize(nodes_);
    inv_rho3_.resize(nodes_);
    for (int m = 0; m < nodes_; ++m) {
        const double t = 2.0 * kPi * m / nodes_;
        const auto orbit = kepler::anomalies(params_.e, params_.q * t);
        two_f_[m] = 2.0 * orbit.f;
        inv_rho3_[m] = 1.0 / (orbit.rho * orbit.rho * orbit.rho);
    }
}

PhiHatResult ResonanceSolver::phi_hat(double xi, const PeriodicFunction &u) const {
    if (u.order() > options_.modes)
        throw InvalidArgument("solver: iterate has more modes than the solver retains");
    const std::vector<double> uv =
        u.order() > 0 ? u.sample(nodes_) : std::vector<double>(nodes_, 0.0);
    std::vector<std::complex<double>> spectrum(nodes_);
    std::vector<double> values(nodes_);
    for (int m = 0; m < nodes_; ++m) {
        const double t = 2.0 * kPi * m / nodes_;
        const double x = xi + params_.p * t + uv[m];
        values[m] = -std::sin(2.0 * x - two_f_[m]) * inv_rho3_[m];
        spectrum[m] = values[m];
    }
    fft::transform(spectrum, false);
    double total = std::norm(spectrum[0]);
    double tail = 0.0;
    const int cutoff = (2 * options_.modes) / 3;
    for (int k = 1; k <= nodes_ / 2; ++k) {
        const double energy = std::norm(spectrum[k]);
        total += energy;
        if (k > cutoff) tail += energy;
    }
    if (total > 1e-30 && tail > 1e-8 * total)
        throw ConvergenceError("solver: spectrum of the nonlinearity not resolved with N=" +
                               std::to_string(options_.modes) + "; increase the number of modes");
    PhiHatResult r;
    r.removed_mean = spectrum[0].real() / nodes_;
    r.value = PeriodicFunction(options_.modes);
    for (int k = 1; k <= options_.modes; ++k)
        r.value.set_coefficient(k, spectrum[k] / static_cast<double>(nodes_));
    return r;
}

void ResonanceSolver::check_preconditions() const {
    const double cap = certification::green_eta_hat_cap();
    if (!(params_.eta_hat >= 0.0) || params_.eta_hat > cap * (1.0 + 1e-14))
        throw PreconditionError("solver: Green condition violated (eta_hat=" +
                                std::to_string(params_.eta_hat) + " > " + std::to_string(cap) +
                                ")");
    if (!(contraction_bound(params_) < 1.0))
        throw PreconditionError("solver: range condition violated (contraction bound " +
                                std::to_string(contraction_bound(params_)) + " >= 1)");
}

RangeSolution ResonanceSolver::solve_range(double xi, const PeriodicFunction &initial) const {
    check_preconditions();
    RangeSolution sol;
    sol.xi = xi;
    sol.u = PeriodicFunction(options_.modes);
    if (initial.order() > 0) sol.u += initial;
    if (params_.eps_hat == 0.0) {
        sol.u = PeriodicFunction(options_.modes);
        sol.iterations = 1;
        sol.increments.push_back(0.0);
        return sol;
    }
    for (int it = 1; it <= options_.max_iterations; ++it) {
        PeriodicFunction next = params_.eps_hat * green_apply(phi_hat(xi, sol.u).value,
                                                              params_.eta_hat);
        const double inc = sup_abs((next - sol.u).sample(nodes_));
        sol.u = std::move(next);
        sol.increments.push_back(inc);
        sol.iterations = it;
        if (inc <= options_.tol_fixed_point) {
            sol.sup_norm = sol.u.sup_norm();
            return sol;
        }
    }
    throw ConvergenceError("solver: range iteration cap reached (N=" +
                           std::to_string(options_.modes) +
                           ", tol=" + std::to_string(options_.tol_fixed_point) + ")");
}

ResonanceSolver::Evaluation ResonanceSolver::evaluate(double xi,
                                                      const PeriodicFunction &warm) const {
    RangeSolution range = solve_range(xi, warm);
    const double phi = -phi_hat(xi, range.u).removed_mean;
    return {phi, std::move(range)};
}

double ResonanceSolver::phi_mean(double xi) const { return evaluate(xi, {}).phi; }

ResonantOrbit ResonanceSolver::solve_bifurcation() const {
    check_preconditions();
    if (!(params_.eps_hat > 0.0))
        throw PreconditionError("solver: bifurcation equation needs positive oblateness");
    const double target = params_.eta_hat * params_.nu_hat / params_.eps_hat;
    const double half_width = certification::guaranteed_half_width(params_);
    if (!(half_width > 0.0) || std::abs(target) > half_width * (1.0 + 1e-12))
        throw PreconditionError("solver: |eta_hat nu_hat / eps_hat| = " +
                                std::to_string(std::abs(target)) +
                                " exceeds the guaranteed range a_pq = " +
                                std::to_string(half_width));

    const double tol = options_.tol_bifurcation;
    const int n_scan = std::max(options_.scan_points, 4);
    std::vector<double> xs(n_scan + 1);
    std::vector<double> hs(n_scan + 1);
    std::vector<PeriodicFunction> us(n_scan + 1);
    PeriodicFunction warm;
    int total_iterations = 0;
    for (int i = 0; i <= n_scan; ++i) {
        xs[i] = kPi * i / n_scan;
        auto ev = evaluate(xs[i], warm);
        total_iterations += ev.range.iterations;
        hs[i] = ev.phi - target;
        us[i] = ev.range.u;
        warm = ev.range.u;
    }

    ResonantOrbit orbit;
    orbit.params = params_;
    orbit.target = target;
    int chosen = -1;
    for (int i = 0; i < n_scan; ++i) {
        const bool root_here = std::abs(hs[i]) <= tol;
        if (root_here || hs[i] * hs[i + 1] < 0.0) {
            orbit.sign_changes.push_back(root_here ? Bracket{xs[i], xs[i]}
                                                   : Bracket{xs[i], xs[i + 1]});
            if (chosen < 0 && xs[i + (root_here ? 0 : 1)] <= 0.5 * kPi + 1e-15)
                chosen = static_cast<int>(orbit.sign_changes.size()) - 1;
        }
    }

    double lo;
    double hi;
    double h_lo;
    PeriodicFunction u_lo;
    if (chosen >= 0) {
        lo = orbit.sign_changes[chosen].lo;
        hi = orbit.sign_changes[chosen].hi;
        const int i = static_cast<int>(std::lround(lo / kPi * n_scan));
        h_lo = hs[i];
        u_lo = us[i];
    } else {
        // phi(π/4) and phi(3π/4) straddle [-a_pq, a_pq] with opposite signs
        auto a = evaluate(0.25 * kPi, warm);
        auto b = evaluate(0.75 * kPi, a.range.u);
        total_iterations += a.range.iterations + b.range.iterations;
        if ((a.phi - target) * (b.phi - target) > 0.0)
            throw ConvergenceError("solver: no sign change of the bifurcation function found");
        lo = 0.25 * kPi;
        hi = 0.75 * kPi;
        h_lo = a.phi - target;
        u_lo = a.range.u;
    }

    double xi = lo;
    double residual = std::abs(h_lo);
    PeriodicFunction u = u_lo;
    for (int it = 0; residual > tol; ++it) {
        if (it > 200 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * kPi)
            throw ConvergenceError("solver: bisection stagnated with residual " +
                                   std::to_string(residual));
        const double mid = 0.5 * (lo + hi);
        auto ev = evaluate(mid, u_lo);
        total_iterations += ev.range.iterations;
        const double h_mid = ev.phi - target;
        xi = mid;
        residual = std::abs(h_mid);
        u = ev.range.u;
        if ((h_mid < 0.0) == (h_lo < 0.0)) {
            lo = mid;
            h_lo = h_mid;
            u_lo = ev.range.u;
        } else {
            hi = mid;
        }
    }

    orbit.xi_star = xi;
    orbit.u = std::move(u);
    orbit.bifurcation_residual = residual;
    orbit.range_iterations = total_iterations;
    // normalized phase (1/2π) ∫ (x(q t) - p t) dt on the collocation grid
    const auto uv = orbit.u.sample(nodes_);
    double acc = 0.0;
    for (double v : uv) acc += v;
    orbit.xi_normalized = orbit.xi_star + acc / nodes_;
    return orbit;
}

PhiHatResult phi_hat(double xi, const PeriodicFunction &u, const ResonanceParams &params,
                     int n_coll) {
    SolverOptions o;
    o.modes = std::max(u.order(), 1);
    o.collocation = n_coll;
    return ResonanceSolver(params, o).phi_hat(xi, u);
}

RangeSolution solve_range(double xi, const ResonanceParams &params, int modes, double tol) {
    SolverOptions o;
    o.modes = modes;
    o.tol_fixed_point = tol;
    return ResonanceSolver(params, o).solve_range(xi);
}

double phi_mean(double xi, const ResonanceParams &params, int modes, double tol) {
    SolverOptions o;
    o.modes = modes;
    o.tol_fixed_point = tol;
    return ResonanceSolver(params, o).phi_mean(xi);
}

ResonantOrbit solve_bifurcation(const ResonanceParams &params, int modes, double tol) {
    SolverOptions o;
    o.modes = modes;
    o.tol_fixed_point = tol;
    return ResonanceSolver(params, o).solve_bifurcation();
}

}  // namespace spinorbit::solver
