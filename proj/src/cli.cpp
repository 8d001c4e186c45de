#include "spinorbit/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spinorbit/catalog.hpp"
#include "spinorbit/certification.hpp"
#include "spinorbit/dynamics.hpp"
#include "spinorbit/error.hpp"
#include "spinorbit/kepler.hpp"
#include "spinorbit/orbit_io.hpp"
#include "spinorbit/potential.hpp"
#include "spinorbit/solver.hpp"

namespace spinorbit::cli {

namespace {

struct RunConfig {
    std::vector<std::string> catalog_paths;
    std::vector<std::string> bodies;
    std::optional<double> eta;
    std::string format = "csv";
    int quadrature_n = potential::kDefaultQuadrature;
    int fourier_modes = 0;  // 0 = per-resonance default
    double tol_fixed_point = 1e-12;
    double tol_bifurcation = 1e-10;
    std::string out_path;
    // fourier
    double e = 0.0;
    int j_max = 4;
    // orbit
    int samples = 256;
    std::string trajectory_path;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<Body> load_bodies(const RunConfig &cfg) {
    std::vector<std::string> paths = cfg.catalog_paths;
    if (paths.empty()) {
        if (const char *env = std::getenv("RESONANCE_CATALOG"); env && *env) paths.emplace_back(env);
    }
    if (paths.empty()) throw UsageError("no catalog given (use --catalog or RESONANCE_CATALOG)");
    std::vector<Body> all;
    std::set<std::string> names;
    for (const auto &p : paths) {
        for (auto &b : catalog::load_catalog_file(p)) {
            if (!names.insert(b.name).second)
                throw ParseError("duplicate body name '" + b.name + "' across catalogs");
            all.push_back(std::move(b));
        }
    }
    if (cfg.bodies.empty()) return all;
    std::vector<Body> selected;
    for (const auto &b : all)
        for (const auto &want : cfg.bodies)
            if (b.name == want) selected.push_back(b);
    for (const auto &want : cfg.bodies)
        if (!names.count(want)) throw UsageError("unknown body '" + want + "'");
    return selected;
}

template <class Fn>
void with_output(const RunConfig &cfg, std::ostream &out, Fn &&fn) {
    if (cfg.out_path.empty()) {
        fn(out);
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    fn(file);
}

certification::ReportFormat report_format(const std::string &f) {
    if (f == "csv") return certification::ReportFormat::Csv;
    if (f == "json") return certification::ReportFormat::Json;
    return certification::ReportFormat::Markdown;
}

int cmd_certify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const auto bodies = load_bodies(cfg);
    if (bodies.empty()) {
        err << "error: no bodies selected\n";
        return kExitUsage;
    }
    const auto reports = certification::certify_all(bodies);
    with_output(cfg, out, [&](std::ostream &o) {
        certification::write_reports(o, reports, report_format(cfg.format));
    });
    bool all_ok = true;
    for (const auto &r : reports) {
        const bool ok = cfg.eta ? r.admits(*cfg.eta) : r.certified;
        if (!ok) {
            err << r.body_name << ": not certified"
                << (cfg.eta ? " at eta=" + catalog::format_number(*cfg.eta) : std::string()) << '\n';
            all_ok = false;
        }
    }
    return all_ok ? kExitOk : kExitNotCertified;
}

std::string cell(const std::optional<double> &v) {
    return v ? catalog::format_number(*v) : std::string("n/a");
}

int cmd_fourier(const RunConfig &cfg, std::ostream &out) {
    if (!(cfg.e >= 0.0 && cfg.e < 1.0)) throw UsageError("--e must satisfy 0 <= e < 1");
    if (cfg.j_max < 1) throw UsageError("--jmax must be at least 1");
    struct Row {
        int j;
        double quad;
        std::optional<double> series;
        std::optional<double> bound;
    };
    std::vector<Row> rows;
    for (int j = 1; j <= cfg.j_max; ++j) {
        Row r{j, potential::fourier_coefficient(cfg.e, j, cfg.quadrature_n), {}, {}};
        if (j == 2 || j == 3) {
            const auto c = potential::canonical_remainder(j);
            if (cfg.e < kepler::contraction_radius(c.b)) {
                r.series = potential::alpha_series(j, cfg.e);
                r.bound = potential::remainder_bound({c.b, c.h, cfg.e});
            }
        }
        rows.push_back(r);
    }
    with_output(cfg, out, [&](std::ostream &o) {
        if (cfg.format == "json") {
            auto arr = nlohmann::ordered_json::array();
            for (const auto &r : rows) {
                nlohmann::ordered_json j{{"j", r.j}, {"alpha_quadrature", r.quad}};
                j["alpha_series"] = r.series ? nlohmann::ordered_json(*r.series) : nlohmann::ordered_json();
                j["remainder_bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json();
                if (r.series)
                    j["within_bound"] = std::abs(r.quad - *r.series) <= *r.bound;
                arr.push_back(j);
            }
            o << nlohmann::ordered_json{{"e", cfg.e}, {"n_quad", cfg.quadrature_n}, {"rows", arr}}
                     .dump(2)
              << '\n';
            return;
        }
        const bool md = cfg.format == "md";
        if (md)
            o << "| j | alpha (quadrature) | alpha (series) | remainder bound | within bound |\n"
                 "|---|---|---|---|---|\n";
        else
            o << "j,alpha_quadrature,alpha_series,remainder_bound,within_bound\n";
        for (const auto &r : rows) {
            const std::string within =
                r.series ? (std::abs(r.quad - *r.series) <= *r.bound ? "true" : "false") : "n/a";
            if (md)
                o << "| " << r.j << " | " << catalog::format_number(r.quad) << " | "
                  << cell(r.series) << " | " << cell(r.bound) << " | " << within << " |\n";
            else
                o << r.j << ',' << catalog::format_number(r.quad) << ',' << cell(r.series) << ','
                  << cell(r.bound) << ',' << within << '\n';
        }
    });
    return kExitOk;
}

std::string failing_conditions(const certification::CertificationReport &r, double eta) {
    std::vector<std::string> why;
    if (!(r.alpha_lower > 0.0)) why.push_back("no positive lower bound on |alpha_q|");
    if (!(r.range_margin > 0.0)) why.push_back("range condition");
    if (!(r.nonempty_margin > 0.0)) why.push_back("non-empty condition");
    if (!(eta <= r.eta_bif_max) || !(r.eta_bif_max > 0.0))
        why.push_back("bifurcation condition (eta_max=" + catalog::format_number(r.eta_bif_max) + ")");
    if (!(eta <= r.eta_green_max))
        why.push_back("Green condition (eta_max=" + catalog::format_number(r.eta_green_max) + ")");
    std::string s;
    for (const auto &w : why) s += (s.empty() ? "" : ", ") + w;
    return s;
}

int cmd_orbit(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.bodies.size() != 1) throw UsageError("orbit needs exactly one --body");
    const auto bodies = load_bodies(cfg);
    const Body &body = bodies.front();
    const double eta = cfg.eta.value_or(0.0);
    if (eta < 0.0) throw UsageError("--eta must be non-negative");
    const auto report = certification::certify(body);
    if (!report.admits(eta)) {
        err << body.name << ": not certified at eta=" << catalog::format_number(eta)
            << "; failing: " << failing_conditions(report, eta) << '\n';
        return kExitNotCertified;
    }
    const ResonanceParams params = catalog::resonance_params(body, eta);
    solver::SolverOptions opts = solver::default_options(params);
    if (cfg.fourier_modes > 0) opts.modes = cfg.fourier_modes;
    opts.tol_fixed_point = cfg.tol_fixed_point;
    opts.tol_bifurcation = cfg.tol_bifurcation;
    solver::ResonantOrbit orbit;
    try {
        orbit = solver::ResonanceSolver(params, opts).solve_bifurcation();
    } catch (const ConvergenceError &ex) {
        err << body.name << ": " << ex.what() << '\n';
        return kExitNotCertified;
    }
    OrbitDiagnostics diag;
    diag.orbit_residual = dynamics::orbit_residual(orbit);
    diag.resonance_residual = dynamics::check_resonance(orbit);
    const auto traj = dynamics::integrate(dynamics::initial_state(orbit),
                                          2.0 * std::numbers::pi * params.q, params);
    diag.integration_deviation = dynamics::deviation_from_orbit(traj, orbit);
    with_output(cfg, out, [&](std::ostream &o) {
        write_orbit_json(o, body.name, orbit, cfg.samples, diag);
    });
    if (!cfg.trajectory_path.empty()) {
        std::ofstream file(cfg.trajectory_path);
        if (!file) throw UsageError("cannot write '" + cfg.trajectory_path + "'");
        dynamics::write_trajectory_csv(file, traj);
    }
    return kExitOk;
}

void add_common(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    cmd->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_catalog(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--catalog", cfg.catalog_paths,
                    "Catalog file(s), CSV or .json (default: $RESONANCE_CATALOG)");
    cmd->add_option("--body", cfg.bodies, "Restrict to these body names");
    cmd->add_option("--eta", cfg.eta, "Dissipation parameter eta");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Certify and construct spin-orbit resonances of Solar-system bodies",
                 "spinorbit"};
    app.require_subcommand(1);

    auto *certify = app.add_subcommand("certify", "Evaluate the existence conditions per body");
    add_catalog(certify, cfg);
    add_common(certify, cfg);

    auto *fourier = app.add_subcommand("fourier", "Fourier coefficients alpha_j(e) of the potential");
    fourier->add_option("--e", cfg.e, "Eccentricity")->required();
    fourier->add_option("--jmax", cfg.j_max, "Largest index j");
    fourier->add_option("--nquad", cfg.quadrature_n, "Quadrature nodes (even, >= 64)");
    add_common(fourier, cfg);

    auto *orbit = app.add_subcommand("orbit", "Construct the resonant orbit of one body");
    add_catalog(orbit, cfg);
    add_common(orbit, cfg);
    orbit->add_option("--modes", cfg.fourier_modes, "Fourier modes N of the periodic correction");
    orbit->add_option("--tol-fixed-point", cfg.tol_fixed_point, "Range iteration tolerance");
    orbit->add_option("--tol-bifurcation", cfg.tol_bifurcation, "Bifurcation residual tolerance");
    orbit->add_option("--samples", cfg.samples, "Number of x(t) samples in the export");
    orbit->add_option("--trajectory", cfg.trajectory_path, "Also write the RK4 trajectory (CSV)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }

    try {
        if (certify->parsed()) return cmd_certify(cfg, out, err);
        if (fourier->parsed()) return cmd_fourier(cfg, out);
        return cmd_orbit(cfg, out, err);
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument &ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << '\n';
        return kExitNotCertified;
    }
}

}  // namespace spinorbit::cli
