import numpy as np
import pytest

from heatwitness import (
    GROUND_ENERGY_XX,
    Model,
    ModelSpec,
    NumericalError,
    katsura_heat_capacity,
    spectrum_of,
    thermo_from_spectrum,
    xx_internal_energy,
    xx_lowT_energy,
)


def ed_capacity_curve(n, B, ts):
    spectrum = spectrum_of(ModelSpec(Model.TRANSVERSE_ISING, n, B=B))
    return thermo_from_spectrum(spectrum, ts).c_per_site


def test_high_temperature_limit():
    assert katsura_heat_capacity(1.0, 1e3) < 1e-3


def test_gapped_low_temperature_decay():
    # B=2 dispersion is gapped (min f = 1): C dies exponentially
    assert katsura_heat_capacity(2.0, 0.05) < 1e-6


def test_zero_field_reduces_to_classical_ring():
    # at B=0 the integral collapses to the classical result sech^2(1/T)/T^2
    for T in (0.3, 1.0, 4.0):
        expected = 1.0 / (T * np.cosh(1.0 / T)) ** 2
        assert katsura_heat_capacity(0.0, T) == pytest.approx(expected, rel=1e-10)


def test_field_sign_symmetry():
    for B, T in [(0.5, 0.7), (2.0, 1.3), (3.5, 4.0)]:
        a = katsura_heat_capacity(B, T)
        b = katsura_heat_capacity(-B, T)
        assert abs(a - b) <= 1e-9


def test_nonnegative_on_grid():
    for B in np.linspace(0.0, 4.0, 20):
        for T in np.geomspace(0.05, 5.0, 20):
            assert katsura_heat_capacity(B, T) >= 0.0


def test_squared_dispersion_is_the_variant_matching_diagonalization():
    # the linear-dispersion numerator fails the finite-ring cross-check by a
    # large factor while the squared one converges to it
    from scipy import integrate

    ts = np.geomspace(0.5, 5.0, 25)
    ed = ed_capacity_curve(10, 2.0, ts)

    def linear_variant(T):
        val, _ = integrate.quad(
            lambda w: np.sqrt(1 - 4 * np.cos(w) + 4)
            / np.cosh(np.sqrt(1 - 4 * np.cos(w) + 4) / T) ** 2,
            0, np.pi, epsabs=1e-12, epsrel=1e-10)
        return val / (np.pi * T * T)

    squared = np.array([katsura_heat_capacity(2.0, t) for t in ts])
    linear = np.array([linear_variant(t) for t in ts])
    err_squared = np.max(np.abs(ed - squared) / squared)
    err_linear = np.max(np.abs(ed - linear) / linear)
    assert err_squared < 0.005
    assert err_linear > 0.2


def test_finite_size_curves_approach_the_integral():
    ts = np.geomspace(0.5, 5.0, 25)
    reference = np.array([katsura_heat_capacity(2.0, t) for t in ts])
    errs = [np.max(np.abs(ed_capacity_curve(n, 2.0, ts) - reference)) for n in (6, 8, 10)]
    assert errs[0] > errs[1] > errs[2]


def test_crossing_against_finite_ring_curve():
    # where the infinite curve meets 0.4197/T^2, the N=10 ring agrees closely
    a = 0.4197

    def margin_infinite(t):
        return a / t ** 2 - katsura_heat_capacity(2.0, t)

    lo, hi = 0.5, 5.0
    assert margin_infinite(lo) > 0 > margin_infinite(hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if margin_infinite(mid) > 0:
            lo = mid
        else:
            hi = mid
    tc = 0.5 * (lo + hi)
    assert 0.5 < tc < 2.0

    ts = np.geomspace(0.5, 5.0, 200)
    ed = ed_capacity_curve(10, 2.0, ts)
    margins = a / ts ** 2 - ed
    idx = np.where(np.sign(margins[:-1]) != np.sign(margins[1:]))[0]
    tc_ed = ts[idx[-1]]
    assert tc_ed == pytest.approx(tc, rel=0.02)


def test_xx_energy_limits():
    assert xx_internal_energy(1e-3) == pytest.approx(GROUND_ENERGY_XX, abs=1e-6)
    assert abs(xx_internal_energy(1e4)) < 1e-3
    assert xx_lowT_energy(0.0) == pytest.approx(-4 / np.pi, abs=1e-15)


def test_xx_low_temperature_form_inside_window():
    # T = 0.1 sits well inside the quadratic window
    assert abs(xx_lowT_energy(0.1) - xx_internal_energy(0.1)) < 5e-4
    for T in np.linspace(0.005, 0.19, 20):
        assert abs(xx_lowT_energy(T) - xx_internal_energy(T)) < 1e-3


def test_xx_low_temperature_form_window_edge():
    # the quadratic form drifts past 1e-3 exactly at the nominal window edge:
    # the true T^2 coefficient is pi/24, the expansion carries 1/(3 pi)
    diff = abs(xx_lowT_energy(0.2) - xx_internal_energy(0.2))
    assert 1.0e-3 < diff < 1.1e-3


def test_xx_lowT_warns_outside_window():
    with pytest.warns(UserWarning, match="validity window"):
        xx_lowT_energy(0.35)


def test_xx_energy_monotone_in_temperature():
    ts = np.geomspace(0.02, 20.0, 40)
    us = [xx_internal_energy(t) for t in ts]
    assert np.all(np.diff(us) >= -1e-12)


def test_quadrature_failure_raises():
    # a single panel cannot resolve the sharp thermal edge at tiny T
    with pytest.raises(NumericalError):
        katsura_heat_capacity(1.0, 0.002, max_subdivisions=1)


def test_temperature_validation():
    with pytest.raises(ValueError):
        katsura_heat_capacity(1.0, 0.0)
    with pytest.raises(ValueError):
        xx_internal_energy(-0.3)
