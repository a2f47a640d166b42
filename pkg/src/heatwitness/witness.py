"""Entanglement witness bounds on heat capacity, and critical temperatures.

Three bound families, each a curve b(T) that every separable state must stay
above; measured or computed C(T) falling below b(T) certifies entanglement.

* variance:  b(T) = a / T^2 with a the minimal per-site Hamiltonian variance
  over product states (see :mod:`heatwitness.sepbound`);
* gapless:   b(T) = gamma (E_B - E_0) / T, from the low-T expansion
  U = E_0 + c0 T^gamma of gapless chains and the separable energy bound E_B;
* gapped:    b(T) = gap * (E_B - E_0) / T^2 for chains with an excitation gap.

The energy-based bounds inherit the validity window of the low-temperature
expansion they rely on; reports are marked accordingly.  The critical
temperature is the largest zero of the margin b(T) - C(T): the bound diverges
as T -> 0 while C must vanish, so the margin is positive at low T and the
largest crossing closes the certified region from above.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .analytic import katsura_heat_capacity
from .models import Model, ModelSpec
from .sepbound import minimize_variance
from .thermo import ThermoCurve

#: default validity window (in T) for the low-temperature expansions behind
#: the gapless/gapped bounds
DEFAULT_VALID_BELOW = 0.1

_BISECTION_STEPS = 80


class CurveSource(enum.Enum):
    EXACT_DIAG = "ed"
    INFINITE_CHAIN = "katsura"
    USER_DATA = "file"
    MODEL_FORM = "model"


class Validity(enum.Enum):
    EXACT = "exact"
    WITHIN_WINDOW = "within-approximation-window"
    APPROXIMATION_LIMITED = "approximation-limited"


@dataclass(frozen=True)
class WitnessBound:
    """A separable-state bound constant / T^exponent."""

    kind: str  # "variance" | "gapless" | "gapped"
    constant: float
    exponent: int
    inputs: dict

    def __post_init__(self):
        if self.constant < 0:
            raise ValueError("bound constant must be nonnegative")

    def value_at(self, T):
        return self.constant / np.asarray(T, dtype=float) ** self.exponent

    @property
    def vacuous(self) -> bool:
        return self.constant == 0.0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "constant": self.constant,
            "exponent": self.exponent,
            "inputs": dict(self.inputs),
        }


def variance_bound(min_variance_per_site: float) -> WitnessBound:
    return WitnessBound("variance", float(min_variance_per_site), 2,
                        {"min_variance_per_site": float(min_variance_per_site)})


def gapless_bound(E0: float, EB: float, gamma: float) -> WitnessBound:
    """gamma (E_B - E_0) / T.  gamma > 1 so that C -> 0 as T -> 0 stays possible."""
    if EB < E0:
        raise ValueError("separable energy bound below ground energy: inconsistent inputs")
    if gamma <= 1:
        raise ValueError("gamma must exceed 1")
    return WitnessBound("gapless", gamma * (EB - E0), 1,
                        {"E0_per_site": E0, "EB_per_site": EB, "gamma": gamma})


def gapped_bound(E0: float, EB: float, gap: float) -> WitnessBound:
    """gap * (E_B - E_0) / T^2 (k = 1)."""
    if EB < E0:
        raise ValueError("separable energy bound below ground energy: inconsistent inputs")
    if gap <= 0:
        raise ValueError("gap must be positive")
    return WitnessBound("gapped", gap * (EB - E0), 2,
                        {"E0_per_site": E0, "EB_per_site": EB, "gap": gap})


@dataclass(frozen=True)
class WitnessReport:
    bound: WitnessBound
    critical_temperature: float | None
    curve_source: CurveSource
    entangled_region: tuple  # (T, margin) samples; entangled where margin > 0
    validity: Validity
    warning: str | None = None

    def to_dict(self) -> dict:
        return {
            "bound": self.bound.to_dict(),
            "T_c": self.critical_temperature,
            "curve_source": self.curve_source.value,
            "region": [[t, m] for t, m in self.entangled_region],
            "validity": self.validity.value,
            "warning": self.warning,
        }


def _margin_zeros(ts: np.ndarray, margins: np.ndarray):
    """All zeros of the piecewise-linear interpolant of the sampled margin,
    located by bisection; returns them ascending."""
    interp = lambda t: np.interp(t, ts, margins)
    zeros = []
    for i in range(len(ts) - 1):
        a, b = margins[i], margins[i + 1]
        if a == 0.0:
            zeros.append(float(ts[i]))
            continue
        if a * b < 0:
            lo, hi = float(ts[i]), float(ts[i + 1])
            flo = a
            for _ in range(_BISECTION_STEPS):
                mid = 0.5 * (lo + hi)
                fmid = interp(mid)
                if fmid == 0.0:
                    lo = hi = mid
                    break
                if np.sign(fmid) == np.sign(flo):
                    lo, flo = mid, fmid
                else:
                    hi = mid
            zeros.append(0.5 * (lo + hi))
    if margins[-1] == 0.0:
        zeros.append(float(ts[-1]))
    return zeros


def _build_report(bound: WitnessBound, curve: ThermoCurve, source: CurveSource,
                  valid_below: float | None) -> WitnessReport:
    ts = np.asarray(curve.temperatures, dtype=float)
    margins = bound.value_at(ts) - np.asarray(curve.c_per_site, dtype=float)
    region = tuple((float(t), float(m)) for t, m in zip(ts, margins))
    warning = None
    if bound.vacuous:
        return WitnessReport(bound, None, source, region, Validity.EXACT,
                             warning="vacuous bound (constant = 0): nothing is certified")
    zeros = _margin_zeros(ts, margins)
    tc = zeros[-1] if zeros else None
    if tc is None:
        warning = "no crossing inside the temperature grid; widen the range"
    if valid_below is None:
        validity = Validity.EXACT
    elif tc is not None and tc <= valid_below:
        validity = Validity.WITHIN_WINDOW
    else:
        validity = Validity.APPROXIMATION_LIMITED
    return WitnessReport(bound, tc, source, region, validity, warning)


def variance_witness(bound_value: float, curve: ThermoCurve,
                     source: CurveSource = CurveSource.EXACT_DIAG) -> WitnessReport:
    """Compare C(T) against bound_value/T^2; flag T with C below as entangled."""
    return _build_report(variance_bound(bound_value), curve, source, valid_below=None)


def gapless_witness(E0: float, EB: float, gamma: float, curve: ThermoCurve,
                    valid_below: float = DEFAULT_VALID_BELOW,
                    source: CurveSource = CurveSource.MODEL_FORM) -> WitnessReport:
    return _build_report(gapless_bound(E0, EB, gamma), curve, source, valid_below)


def gapped_witness(E0: float, EB: float, gap: float, curve: ThermoCurve,
                   valid_below: float = DEFAULT_VALID_BELOW,
                   source: CurveSource = CurveSource.MODEL_FORM) -> WitnessReport:
    return _build_report(gapped_bound(E0, EB, gap), curve, source, valid_below)


def gapped_energy_consistency(c_prime: float, delta_exp: float, gap: float,
                              T: float) -> float:
    """U(T) - E_0 of a gapped chain from the asymptotic form
    c' T^(delta+2) e^(-gap/T) / gap (k = 1).

    Valid for T well below the gap; the tests integrate the underlying
    C = c' T^delta e^(-gap/T) numerically from 0 to T as the oracle.
    """
    if T <= 0:
        return 0.0
    if T > gap / 2:
        import warnings

        warnings.warn(
            f"asymptotic gapped energy evaluated at T={T:g}, not small against "
            f"the gap {gap:g}",
            stacklevel=2,
        )
    return c_prime * T ** (delta_exp + 2) * np.exp(-gap / T) / gap


def witness_from_measurements(data, bound: WitnessBound,
                              valid_below: float | None = None) -> WitnessReport:
    """Apply a bound to measured (T, C) or (T, C, sigma_C) points.

    Conservative verdict: a point counts as entangled only if its measured C
    plus its uncertainty still lies below the bound; the margin is evaluated
    on the piecewise-linear interpolation of the data, with no smoothing.
    """
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 2 or arr.shape[1] not in (2, 3):
        raise ValueError("need at least two (T, C) or (T, C, sigma) rows")
    ts = arr[:, 0]
    if np.any(ts <= 0):
        raise ValueError("temperatures must be positive")
    if np.any(np.diff(ts) <= 0):
        raise ValueError("temperatures must be sorted and deduplicated")
    sigma = arr[:, 2] if arr.shape[1] == 3 else np.zeros_like(ts)
    if np.any(sigma < 0):
        raise ValueError("uncertainties must be nonnegative")
    conservative = ThermoCurve(ts, np.full_like(ts, np.nan),
                               arr[:, 1] + sigma, np.full_like(ts, np.nan))
    return _build_report(bound, conservative, CurveSource.USER_DATA, valid_below)


def critical_temperature_curve(b_values, t_grid=None, period: int = 2,
                               restarts: int = 8, map_fn=map):
    """(B, T_c) line: infinite-chain C(T) against the minimized variance bound.

    Returns one (B, T_c) pair per field value; T_c is nan when no crossing
    falls inside the search grid.  ``map_fn`` lets callers parallelize over B
    (results keep input order).
    """
    if t_grid is None:
        t_grid = np.geomspace(0.02, 20.0, 300)
    t_grid = np.asarray(t_grid, dtype=float)

    def solve(B):
        spec = ModelSpec(Model.TRANSVERSE_ISING, n_sites=4, B=float(B))
        a = minimize_variance(spec, period=period, restarts=restarts).value_per_site
        cs = np.array([katsura_heat_capacity(B, t) for t in t_grid])
        curve = ThermoCurve(t_grid, np.full_like(t_grid, np.nan), cs,
                            np.full_like(t_grid, np.nan))
        report = variance_witness(a, curve, source=CurveSource.INFINITE_CHAIN)
        tc = report.critical_temperature
        return float(B), (float(tc) if tc is not None else np.nan)

    return list(map_fn(solve, list(b_values)))
