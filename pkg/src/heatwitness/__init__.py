"""Exact thermodynamics of small spin rings, separable-state bounds on heat
capacity and internal energy, and the temperature regions those bounds certify
as entangled."""

from .analytic import (
    GROUND_ENERGY_XX,
    katsura_heat_capacity,
    xx_internal_energy,
    xx_lowT_energy,
)
from .eigencheck import EigencheckReport, eigencheck_ising, max_product_overlap
from .errors import NumericalError
from .models import (
    DIM_CAP_DEFAULT,
    Model,
    ModelSpec,
    bloch_state,
    build_hamiltonian,
    local_expectations,
    product_state_vector,
    shift_permutation,
    spin_matrices,
)
from .sepbound import (
    BoundKind,
    ConvexityResult,
    ProductAnsatz,
    SeparableBound,
    convexity_check,
    minimize_energy,
    minimize_variance,
    pattern_variance_per_site,
    variance_dense_per_site,
    variance_product_state,
)
from .thermo import (
    Spectrum,
    ThermoCurve,
    gibbs_weights,
    spectrum_of,
    temperature_grid,
    thermal_variance,
    thermo_from_spectrum,
)
from .witness import (
    CurveSource,
    Validity,
    WitnessBound,
    WitnessReport,
    critical_temperature_curve,
    gapless_bound,
    gapless_witness,
    gapped_bound,
    gapped_energy_consistency,
    gapped_witness,
    variance_bound,
    variance_witness,
    witness_from_measurements,
)

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "ConvexityResult",
    "CurveSource",
    "DIM_CAP_DEFAULT",
    "EigencheckReport",
    "GROUND_ENERGY_XX",
    "Model",
    "ModelSpec",
    "NumericalError",
    "ProductAnsatz",
    "SeparableBound",
    "Spectrum",
    "ThermoCurve",
    "Validity",
    "WitnessBound",
    "WitnessReport",
    "bloch_state",
    "build_hamiltonian",
    "convexity_check",
    "critical_temperature_curve",
    "eigencheck_ising",
    "gapless_bound",
    "gapless_witness",
    "gapped_bound",
    "gapped_energy_consistency",
    "gapped_witness",
    "gibbs_weights",
    "katsura_heat_capacity",
    "local_expectations",
    "max_product_overlap",
    "minimize_energy",
    "minimize_variance",
    "pattern_variance_per_site",
    "product_state_vector",
    "shift_permutation",
    "spectrum_of",
    "spin_matrices",
    "temperature_grid",
    "thermal_variance",
    "thermo_from_spectrum",
    "variance_bound",
    "variance_dense_per_site",
    "variance_product_state",
    "variance_witness",
    "witness_from_measurements",
    "xx_internal_energy",
    "xx_lowT_energy",
]
