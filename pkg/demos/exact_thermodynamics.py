"""Exact thermodynamics of small spin rings.

Builds the three supported chains, diagonalizes them, and walks through the
per-site internal energy and heat capacity curves, including the two limits
every finite spectrum must satisfy (C -> 0 both for T -> 0 and T -> infinity).
"""

import numpy as np

from heatwitness import (
    Model,
    ModelSpec,
    spectrum_of,
    temperature_grid,
    thermo_from_spectrum,
)

specs = [
    ModelSpec(Model.TRANSVERSE_ISING, 8, B=2.0),
    ModelSpec(Model.HEISENBERG_XXX, 8, spin=0.5),
    ModelSpec(Model.XX, 8),
]

for spec in specs:
    spectrum = spectrum_of(spec)
    e = spectrum.energies
    print(f"\n=== {spec.model.value} ring, N = {spec.n_sites} ===")
    print(f"ground energy per site: {e[0] / spec.n_sites:+.6f}")
    print(f"spectral width:         {e[-1] - e[0]:.4f}")

    ts = temperature_grid(0.05, 20.0, points=9)
    curve = thermo_from_spectrum(spectrum, ts)
    print("      T      U/site     C/site")
    for T, u, c in zip(curve.temperatures, curve.u_per_site, curve.c_per_site):
        print(f"  {T:7.3f}  {u:+9.5f}  {c:9.6f}")

    # the heat capacity must die out at both ends of the temperature axis
    gap = np.min(e[e > e[0] + 1e-12]) - e[0]
    lo = thermo_from_spectrum(spectrum, np.array([gap / 50])).c_per_site[0]
    hi = thermo_from_spectrum(spectrum, np.array([100 * (e[-1] - e[0])])).c_per_site[0]
    print(f"  C at T = gap/50:      {lo:.2e}")
    print(f"  C at T = 100*width:   {hi:.2e}")

print("\nTwo-level sanity check (energies -1, +1):")
from heatwitness import Spectrum

two = Spectrum(np.array([-1.0, 1.0]), n_sites=1)
T = 1.0
c = thermo_from_spectrum(two, np.array([T])).c_per_site[0]
print(f"  C(T=1) = {c:.6f}   closed form sech^2(1) = {1 / np.cosh(1) ** 2:.6f}")
