#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "spinorbit/catalog.hpp"
#include "spinorbit/certification.hpp"
#include "spinorbit/dynamics.hpp"
#include "spinorbit/error.hpp"
#include "spinorbit/kepler.hpp"
#include "spinorbit/potential.hpp"
#include "spinorbit/solver.hpp"

namespace py = pybind11;
using namespace spinorbit;

PYBIND11_MODULE(spinorbit, m) {
    m.doc() = "Spin-orbit resonance certification and orbit construction";

    py::register_exception<Error>(m, "Error");

    py::class_<kepler::AnomalyTriple>(m, "AnomalyTriple")
        .def_readonly("u", &kepler::AnomalyTriple::u)
        .def_readonly("rho", &kepler::AnomalyTriple::rho)
        .def_readonly("f", &kepler::AnomalyTriple::f);

    m.def("eccentric_anomaly", py::overload_cast<double, double, double>(&kepler::eccentric_anomaly),
          py::arg("e"), py::arg("t"), py::arg("tol") = kepler::kDefaultTol);
    m.def("anomalies", py::overload_cast<double, double, double>(&kepler::anomalies), py::arg("e"),
          py::arg("t"), py::arg("tol") = kepler::kDefaultTol);

    m.def("potential_fx", py::overload_cast<double, double, double>(&potential::potential_fx));
    m.def("potential_fxx", py::overload_cast<double, double, double>(&potential::potential_fxx));
    m.def("fourier_coefficient", &potential::fourier_coefficient, py::arg("e"), py::arg("j"),
          py::arg("n_quad") = potential::kDefaultQuadrature);
    m.def("alpha_series", &potential::alpha_series, py::arg("j"), py::arg("e"));
    m.def("remainder_bound",
          [](double b, int h, double e) { return potential::remainder_bound({b, h, e}); },
          py::arg("b"), py::arg("h"), py::arg("e"));
    m.def("alpha_lower_bound", &potential::alpha_lower_bound, py::arg("j"), py::arg("e"));

    py::class_<Body>(m, "Body")
        .def(py::init<>())
        .def_readwrite("name", &Body::name)
        .def_readwrite("primary_name", &Body::primary_name)
        .def_readwrite("a", &Body::a)
        .def_readwrite("b_radius", &Body::b_radius)
        .def_readwrite("c", &Body::c)
        .def_readwrite("e", &Body::e)
        .def_readwrite("p", &Body::p)
        .def_readwrite("q", &Body::q)
        .def("__repr__", [](const Body &b) { return "<Body " + b.name + ">"; });

    py::class_<ResonanceParams>(m, "ResonanceParams")
        .def_static("make", &ResonanceParams::make, py::arg("p"), py::arg("q"), py::arg("e"),
                    py::arg("eps"), py::arg("eta"), py::arg("nu"))
        .def_readonly("p", &ResonanceParams::p)
        .def_readonly("q", &ResonanceParams::q)
        .def_readonly("e", &ResonanceParams::e)
        .def_readonly("eps", &ResonanceParams::eps)
        .def_readonly("eta", &ResonanceParams::eta)
        .def_readonly("nu", &ResonanceParams::nu)
        .def_readonly("eta_hat", &ResonanceParams::eta_hat)
        .def_readonly("nu_hat", &ResonanceParams::nu_hat)
        .def_readonly("eps_hat", &ResonanceParams::eps_hat);

    m.def("oblateness", &catalog::oblateness);
    m.def("nu_of_e", &catalog::nu_of_e);
    m.def("resonance_params", &catalog::resonance_params, py::arg("body"), py::arg("eta") = 0.0);
    m.def("load_catalog", &catalog::load_catalog_file, py::arg("path"));

    py::class_<certification::CertificationReport>(m, "CertificationReport")
        .def_readonly("body_name", &certification::CertificationReport::body_name)
        .def_readonly("alpha_lower", &certification::CertificationReport::alpha_lower)
        .def_readonly("range_margin", &certification::CertificationReport::range_margin)
        .def_readonly("nonempty_margin", &certification::CertificationReport::nonempty_margin)
        .def_readonly("eta_bif_max", &certification::CertificationReport::eta_bif_max)
        .def_readonly("eta_green_max", &certification::CertificationReport::eta_green_max)
        .def_readonly("eta_admissible", &certification::CertificationReport::eta_admissible)
        .def_readonly("certified", &certification::CertificationReport::certified);

    m.def("certify", py::overload_cast<const Body &>(&certification::certify));
    m.def("green_norm_bound", &certification::green_norm_bound);

    py::class_<solver::ResonantOrbit>(m, "ResonantOrbit")
        .def_readonly("params", &solver::ResonantOrbit::params)
        .def_readonly("xi_star", &solver::ResonantOrbit::xi_star)
        .def_readonly("bifurcation_residual", &solver::ResonantOrbit::bifurcation_residual)
        .def_property_readonly("u_coefficients",
                               [](const solver::ResonantOrbit &o) {
                                   return std::vector<std::complex<double>>(o.u.modes().begin(),
                                                                            o.u.modes().end());
                               })
        .def("x", &solver::ResonantOrbit::x)
        .def("x_dot", &solver::ResonantOrbit::x_dot);

    m.def(
        "solve_orbit",
        [](const Body &body, double eta, int modes) {
            const auto params = catalog::resonance_params(body, eta);
            auto opts = solver::default_options(params);
            if (modes > 0) opts.modes = modes;
            return solver::ResonanceSolver(params, opts).solve_bifurcation();
        },
        py::arg("body"), py::arg("eta") = 0.0, py::arg("modes") = 0);
    m.def("orbit_residual", &dynamics::orbit_residual, py::arg("orbit"),
          py::arg("n_samples") = 1024);
    m.def(
        "integrate",
        [](double x0, double v0, double t_end, const ResonanceParams &params, double step) {
            const auto traj = dynamics::integrate({x0, v0, 0.0}, t_end, params, step);
            std::vector<std::tuple<double, double, double>> out;
            out.reserve(traj.size());
            for (const auto &s : traj) out.emplace_back(s.t, s.x, s.v);
            return out;
        },
        py::arg("x0"), py::arg("v0"), py::arg("t_end"), py::arg("params"),
        py::arg("step") = dynamics::kDefaultStep);
}
