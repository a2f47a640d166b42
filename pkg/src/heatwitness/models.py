"""Dense Hamiltonians and local operators for small spin rings.

Supported models, all with periodic boundary conditions on N sites:

* transverse Ising,   H = J sum_i sz_i sz_{i+1} + B sum_i sx_i   (Pauli matrices)
* Heisenberg xxx,     H = J sum_i s_i . s_{i+1}                  (spin-s operators)
* xx chain,           H = J sum_i (sx_i sx_{i+1} + sy_i sy_{i+1}) (Pauli matrices)

Everything here is a pure function of its inputs; matrices are built once and
returned dense. Basis convention: site 0 is the most significant digit of the
computational-basis index, so |a_0 a_1 ... a_{N-1}> sits at index
sum_j a_j d^(N-1-j). This fixes golden files bit-exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

#: Reject Hilbert spaces larger than this by default (N = 14 at spin-1/2).
DIM_CAP_DEFAULT = 2 ** 14

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

_SQ2 = np.sqrt(2.0)
SPIN1_X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQ2
SPIN1_Y = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / _SQ2
SPIN1_Z = np.diag([1.0, 0.0, -1.0]).astype(complex)


class Model(enum.Enum):
    TRANSVERSE_ISING = "ising"
    HEISENBERG_XXX = "xxx"
    XX = "xx"


def spin_matrices(spin: float):
    """Return (sx, sy, sz) spin operators of magnitude ``spin`` (1/2 or 1)."""
    if spin == 0.5:
        return PAULI_X / 2, PAULI_Y / 2, PAULI_Z / 2
    if spin == 1.0:
        return SPIN1_X, SPIN1_Y, SPIN1_Z
    raise ValueError(f"unsupported spin magnitude {spin!r}; expected 1/2 or 1")


@dataclass(frozen=True)
class ModelSpec:
    """Which chain to build.

    J is the coupling and B the transverse field, both in the working energy
    unit (J = k = 1 by default everywhere in this package; unit rescaling is
    an I/O-layer concern, never applied inside the math).  B is ignored unless
    the model is the transverse Ising chain.
    """

    model: Model
    n_sites: int
    J: float = 1.0
    B: float = 0.0
    spin: float = 0.5

    def validate(self) -> None:
        if not isinstance(self.model, Model):
            raise ValueError(f"unknown model {self.model!r}")
        if self.n_sites < 2:
            raise ValueError("n_sites must be at least 2")
        if self.spin not in (0.5, 1.0):
            raise ValueError("spin must be 1/2 or 1")
        if self.model in (Model.TRANSVERSE_ISING, Model.XX) and self.spin != 0.5:
            raise ValueError(f"{self.model.value} model is defined in Pauli form; spin must be 1/2")

    @property
    def local_dim(self) -> int:
        return int(round(2 * self.spin + 1))

    @property
    def dim(self) -> int:
        return self.local_dim ** self.n_sites


def _kron_chain(site_ops) -> sp.csr_matrix:
    m = sp.identity(1, format="csr", dtype=complex)
    for op in site_ops:
        m = sp.kron(m, op, format="csr")
    return m


def _embedded(op, site, n_sites, local_dim) -> sp.csr_matrix:
    ops = [sp.identity(local_dim, format="csr", dtype=complex)] * n_sites
    ops[site] = sp.csr_matrix(op)
    return _kron_chain(ops)


def build_hamiltonian(spec: ModelSpec, dim_cap: int = DIM_CAP_DEFAULT) -> np.ndarray:
    """Dense Hamiltonian matrix of ``spec`` with periodic boundary.

    Returns a real symmetric (dim x dim) float64 array; all three models are
    real in the computational basis (the sy sy bond terms are real products).
    Raises ValueError when the spec is invalid or the Hilbert-space dimension
    exceeds ``dim_cap``.
    """
    spec.validate()
    if spec.dim > dim_cap:
        raise ValueError(
            f"Hilbert dimension {spec.dim} exceeds cap {dim_cap}; "
            "raise dim_cap explicitly if you really want this"
        )
    n, d = spec.n_sites, spec.local_dim
    H = sp.csr_matrix((spec.dim, spec.dim), dtype=complex)
    if spec.model is Model.TRANSVERSE_ISING:
        for i in range(n):
            j = (i + 1) % n
            H = H + spec.J * (_embedded(PAULI_Z, i, n, d) @ _embedded(PAULI_Z, j, n, d))
            H = H + spec.B * _embedded(PAULI_X, i, n, d)
    elif spec.model is Model.HEISENBERG_XXX:
        ops = spin_matrices(spec.spin)
        for i in range(n):
            j = (i + 1) % n
            for op in ops:
                H = H + spec.J * (_embedded(op, i, n, d) @ _embedded(op, j, n, d))
    elif spec.model is Model.XX:
        for i in range(n):
            j = (i + 1) % n
            for op in (PAULI_X, PAULI_Y):
                H = H + spec.J * (_embedded(op, i, n, d) @ _embedded(op, j, n, d))
    dense = H.toarray()
    # exact cancellation of imaginary parts is guaranteed analytically
    assert np.abs(dense.imag).max() < 1e-12
    return np.ascontiguousarray(dense.real)


def bloch_state(theta: float, phi: float = 0.0) -> np.ndarray:
    """Single-qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def product_state_vector(site_states) -> np.ndarray:
    """Kronecker product of per-site state vectors (site 0 most significant)."""
    v = np.array([1.0 + 0.0j])
    for s in site_states:
        v = np.kron(v, np.asarray(s, dtype=complex))
    return v


def local_expectations(angles, spec: ModelSpec):
    """Per-site Bloch vectors (<sx>, <sy>, <sz>) of a product state.

    ``angles`` is one (theta, phi) pair per site; the xz-plane ansatz used in
    the variance bounds corresponds to phi = 0.  Exactly
    (sin t cos p, sin t sin p, cos t) per site; angles wrap modulo 2 pi.
    """
    if len(angles) != spec.n_sites:
        raise ValueError(f"expected {spec.n_sites} angle pairs, got {len(angles)}")
    out = []
    for theta, phi in angles:
        out.append((np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)))
    return out


def shift_permutation(n_sites: int, local_dim: int = 2) -> np.ndarray:
    """Matrix of the one-site cyclic shift |a_0 ... a_{N-1}> -> |a_{N-1} a_0 ...>.

    All supported Hamiltonians commute with it (translation symmetry of the ring).
    """
    dim = local_dim ** n_sites
    idx = np.arange(dim)
    digits = np.empty((dim, n_sites), dtype=np.int64)
    rem = idx.copy()
    for j in range(n_sites - 1, -1, -1):
        digits[:, j] = rem % local_dim
        rem //= local_dim
    shifted = np.roll(digits, 1, axis=1)
    target = np.zeros(dim, dtype=np.int64)
    for j in range(n_sites):
        target = target * local_dim + shifted[:, j]
    S = np.zeros((dim, dim))
    S[target, idx] = 1.0
    return S
