import math
import os
from pathlib import Path

import pytest

import spinorbit

DATA = Path(os.environ.get("SPINORBIT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return spinorbit.load_catalog(str(DATA / name))


def test_kepler():
    u = spinorbit.eccentric_anomaly(0.0549, 1.0)
    assert abs(u - 1.0475545924186343985) < 1e-13
    a = spinorbit.anomalies(0.2056, math.pi / 2)
    assert abs(a.f - 1.9710518910207232002) < 1e-13
    with pytest.raises(spinorbit.Error):
        spinorbit.eccentric_anomaly(1.0, 0.3)


def test_fourier():
    assert spinorbit.fourier_coefficient(0.0, 2) == pytest.approx(-0.5)
    assert abs(spinorbit.fourier_coefficient(0.1, 2) - -0.48754056419202211585) < 1e-12
    e = 0.2056
    diff = abs(spinorbit.fourier_coefficient(e, 3) - spinorbit.alpha_series(3, e))
    assert diff <= spinorbit.remainder_bound(0.768368, 21, e)


def test_certify():
    moons = load("moons.csv")
    assert len(moons) == 18
    assert all(spinorbit.certify(b).certified for b in moons)
    mercury = spinorbit.certify(load("mercury.csv")[0])
    assert mercury.certified
    assert mercury.eta_admissible >= 0.001
    minor = {b.name: spinorbit.certify(b).certified for b in load("minor_bodies.csv")}
    assert {n for n, ok in minor.items() if ok} == {"Janus", "Epimetheus"}


def test_orbit():
    moon = next(b for b in load("moons.csv") if b.name == "Moon")
    orbit = spinorbit.solve_orbit(moon, eta=0.004)
    assert orbit.bifurcation_residual <= 1e-10
    assert spinorbit.orbit_residual(orbit) <= 1e-9
    assert orbit.x(2 * math.pi) == pytest.approx(orbit.x(0.0) + 2 * math.pi)
    traj = spinorbit.integrate(orbit.x(0.0), orbit.x_dot(0.0), 2 * math.pi, orbit.params)
    t, x, _ = traj[-1]
    assert abs(x - orbit.x(t)) < 1e-6
