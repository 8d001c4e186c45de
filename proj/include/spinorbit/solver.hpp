// Constructive p:q resonant orbits.
//
// Writing x(s) = (p/q) s + xi + u(s/q) turns the spin-orbit equation into
//     u'' + eta_hat (u' - nu_hat) + eps_hat f_x(xi + p t + u(t), q t) = 0,  <u> = 0.
// For fixed xi the zero-mean part is solved by iterating the contraction
//     u <- eps_hat G(Phi_hat_xi(u)),   G = (d^2/dt^2 + eta_hat d/dt)^{-1},
// in a truncated Fourier basis with collocation of the nonlinearity. The remaining
// scalar equation phi_u(xi) = eta_hat nu_hat / eps_hat is solved for xi by bisection.
#pragma once

#include <span>
#include <vector>

#include "spinorbit/catalog.hpp"
#include "spinorbit/periodic.hpp"

namespace spinorbit::solver {

struct SolverOptions {
    int modes = 64;           // truncation order N
    int collocation = 0;      // nodes; 0 = smallest power of two >= 4N
    double tol_fixed_point = 1e-12;
    double tol_bifurcation = 1e-10;
    int max_iterations = 20000;
    int scan_points = 64;
};

/// 64 modes for q = 1, 128 otherwise.
SolverOptions default_options(const ResonanceParams &params);

/// Solves u'' + eta_hat u' = g for zero-mean u: u_k = g_k / (-k^2 + i eta_hat k).
PeriodicFunction green_apply(const PeriodicFunction &g, double eta_hat);

/// Same for uniformly sampled g; rejects samples whose mean is not zero.
PeriodicFunction green_apply(std::span<const double> g, int order, double eta_hat);

/// (5/2) eps_hat sup|f_x|, the radius of the ball holding the range solution.
double ball_radius(const ResonanceParams &params);

/// (5/2) eps_hat sup|f_xx|; the range condition asks for this to be below 1.
double contraction_bound(const ResonanceParams &params);

struct PhiHatResult {
    PeriodicFunction value;  // zero-mean part of -f_x(xi + p t + u(t), q t)
    double removed_mean;     // mean of -f_x(...), i.e. -phi_u(xi)
};

struct RangeSolution {
    double xi = 0.0;
    PeriodicFunction u;
    double sup_norm = 0.0;
    int iterations = 0;
    std::vector<double> increments;  // sup-norm of successive updates
};

struct Bracket {
    double lo;
    double hi;
};

struct ResonantOrbit {
    ResonanceParams params;
    double xi_star = 0.0;
    PeriodicFunction u;
    double target = 0.0;                // eta_hat nu_hat / eps_hat
    double bifurcation_residual = 0.0;  // |phi_u(xi_star) - target|
    double xi_normalized = 0.0;         // (1/2π) ∫ (x(q t) - p t) dt
    std::vector<Bracket> sign_changes;  // scan of [0, π]
    int range_iterations = 0;

    /// Rotation angle at mean anomaly s.
    double x(double s) const;
    double x_dot(double s) const;
};

class ResonanceSolver {
public:
    ResonanceSolver(const ResonanceParams &params, SolverOptions options);

    const ResonanceParams &params() const { return params_; }
    const SolverOptions &options() const { return options_; }
    int collocation_nodes() const { return nodes_; }

    PhiHatResult phi_hat(double xi, const PeriodicFunction &u) const;

    /// Unique fixed point in the ball of radius ball_radius(); starts from `initial`
    /// (zero when empty). Throws PreconditionError unless the Green and range
    /// conditions hold.
    RangeSolution solve_range(double xi, const PeriodicFunction &initial = {}) const;

    /// phi_u(xi) = <f_x(xi + p t + u(t; xi), q t)>.
    double phi_mean(double xi) const;

    ResonantOrbit solve_bifurcation() const;

private:
    struct Evaluation {
        double phi;
        RangeSolution range;
    };
    Evaluation evaluate(double xi, const PeriodicFunction &warm) const;
    void check_preconditions() const;

    ResonanceParams params_;
    SolverOptions options_;
    int nodes_;
    std::vector<double> two_f_;     // 2 f_e(q t_m)
    std::vector<double> inv_rho3_;  // rho_e(q t_m)^-3
};

PhiHatResult phi_hat(double xi, const PeriodicFunction &u, const ResonanceParams &params,
                     int n_coll);
RangeSolution solve_range(double xi, const ResonanceParams &params, int modes, double tol);
double phi_mean(double xi, const ResonanceParams &params, int modes, double tol);
ResonantOrbit solve_bifurcation(const ResonanceParams &params, int modes, double tol);

}  // namespace spinorbit::solver
