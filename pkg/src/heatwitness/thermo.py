"""Thermodynamics of a finite spectrum: Z, U, and C per site on a temperature grid.

Heat capacity is computed from the variance identity

    C = (<H^2> - <H>^2) / (k T^2),      k = 1,

which is exact for a given spectrum; the numeric derivative dU/dT is used only
as an independent oracle in the tests.  All Boltzmann sums are shifted by the
ground-state energy so that nothing overflows at low temperature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .models import DIM_CAP_DEFAULT, ModelSpec, build_hamiltonian


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues of a Hamiltonian, with the site count they came from."""

    energies: np.ndarray
    n_sites: int

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float)
        if e.size == 0:
            raise ValueError("spectrum is empty")
        if np.any(np.diff(e) < 0):
            raise ValueError("energies must be sorted ascending")
        object.__setattr__(self, "energies", e)


@dataclass(frozen=True)
class ThermoCurve:
    """U, C and log Z per site, aligned with a strictly increasing T grid."""

    temperatures: np.ndarray
    u_per_site: np.ndarray
    c_per_site: np.ndarray
    log_z_per_site: np.ndarray


def spectrum_of(spec: ModelSpec, dim_cap: int = DIM_CAP_DEFAULT) -> Spectrum:
    """Exact diagonalization: the full sorted spectrum of ``spec``."""
    H = build_hamiltonian(spec, dim_cap=dim_cap)
    return Spectrum(np.linalg.eigvalsh(H), spec.n_sites)


def temperature_grid(tmin: float, tmax: float, points: int | None = None) -> np.ndarray:
    """Geometric temperature grid; defaults to 200 points per decade spanned."""
    if tmin <= 0 or tmax <= tmin:
        raise ValueError("need 0 < tmin < tmax")
    if points is None:
        decades = np.log10(tmax / tmin)
        points = max(2, int(np.ceil(200 * decades)) + 1)
    if points < 2:
        raise ValueError("grid needs at least 2 points")
    return np.geomspace(tmin, tmax, points)


def gibbs_weights(spectrum: Spectrum, temperature: float) -> np.ndarray:
    """Normalized Boltzmann weights at ``temperature`` (> 0)."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    e = spectrum.energies
    w = np.exp(-(e - e[0]) / temperature)
    return w / w.sum()


def thermal_variance(spectrum: Spectrum, temperature: float) -> float:
    """<H^2> - <H>^2 under Gibbs weights; equals k T^2 C (total, not per site)."""
    w = gibbs_weights(spectrum, temperature)
    e = spectrum.energies
    mean = float(w @ e)
    # summing (e - mean)^2 rather than e^2 - mean^2 keeps the result
    # nonnegative and accurate when mean is large
    return float(w @ (e - mean) ** 2)


def thermo_from_spectrum(spectrum: Spectrum, temperatures) -> ThermoCurve:
    """Evaluate U, C and log Z per site on ``temperatures`` (all > 0, increasing).

    Fixed summation order within each grid point, so results are deterministic
    regardless of how callers parallelize over the grid.
    """
    ts = np.asarray(temperatures, dtype=float)
    if ts.ndim != 1 or ts.size == 0:
        raise ValueError("temperature grid must be a nonempty 1-d array")
    if np.any(ts <= 0):
        raise ValueError("temperatures must be positive")
    if np.any(np.diff(ts) <= 0):
        raise ValueError("temperatures must be strictly increasing")
    e = spectrum.energies
    n = spectrum.n_sites
    e0 = e[0]
    shifted = e - e0
    w = np.exp(-shifted[None, :] / ts[:, None])
    z = w.sum(axis=1)
    log_z = np.log(z) - e0 / ts
    u = (w @ e) / z
    # variance per grid point; broadcasting (e - u_t)^2 row-wise
    diff = e[None, :] - u[:, None]
    var = np.einsum("te,te->t", w, diff * diff) / z
    c = var / ts ** 2
    return ThermoCurve(ts, u / n, c / n, log_z / n)
