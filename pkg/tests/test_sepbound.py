import numpy as np
import pytest

from heatwitness import (
    Model,
    ModelSpec,
    ProductAnsatz,
    build_hamiltonian,
    convexity_check,
    minimize_energy,
    minimize_variance,
    pattern_variance_per_site,
    product_state_vector,
    variance_dense_per_site,
    variance_product_state,
)


def ising(n, B):
    return ModelSpec(Model.TRANSVERSE_ISING, n, B=B)


def xz_ansatz(*thetas):
    return ProductAnsatz(len(thetas), tuple((t, 0.0) for t in thetas))


def test_neel_state_is_zero_variance_at_zero_field():
    # z1 = 1, z2 = -1, x = 0: a classical eigenstate of the zz chain
    assert variance_product_state(ising(4, 0.0), xz_ansatz(0.0, np.pi)) == pytest.approx(0.0, abs=1e-14)


def test_field_aligned_state_keeps_unit_interaction_variance():
    # all spins along x: the field term is sharp, each zz bond contributes 1
    for B in (0.5, 2.0, 50.0):
        v = variance_product_state(ising(4, B), xz_ansatz(np.pi / 2, np.pi / 2))
        assert v == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_closed_form_equals_dense_route(n):
    rng = np.random.default_rng(11)
    spec = ising(n, 1.7)
    for _ in range(5):
        t1, t2 = rng.uniform(0, 2 * np.pi, 2)
        closed = pattern_variance_per_site([t1, t2], [0.0, 0.0], 1.7)
        dense = variance_dense_per_site(spec, [t1, t2], [0.0, 0.0])
        assert dense == pytest.approx(float(closed), rel=1e-9)


def test_per_site_variance_independent_of_ring_size():
    t1, t2 = 0.9, 2.4
    values = [variance_dense_per_site(ising(n, 1.7), [t1, t2], [0.0, 0.0])
              for n in (4, 6, 8)]
    assert np.ptp(values) < 1e-12


def test_pattern_route_exact_for_general_angles():
    # arbitrary per-site angles, phi included; dense contraction as oracle
    rng = np.random.default_rng(7)
    for n in (4, 5, 6, 8):
        spec = ising(n, 1.7)
        thetas = rng.uniform(0, np.pi, n)
        phis = rng.uniform(0, 2 * np.pi, n)
        closed = float(pattern_variance_per_site(thetas, phis, 1.7))
        dense = variance_dense_per_site(spec, thetas, phis)
        assert dense == pytest.approx(closed, rel=1e-12, abs=1e-12)


def test_minimum_at_b2_matches_reported_value():
    bound = minimize_variance(ising(4, 2.0))
    assert bound.value_per_site == pytest.approx(0.4197, abs=5e-4)
    assert bound.converged


def test_minimum_at_zero_field_vanishes():
    assert minimize_variance(ising(4, 0.0)).value_per_site <= 1e-9


def test_minimum_at_b6_against_fine_grid_scan():
    # 1-degree grid over both angles as the independent oracle
    axis = np.deg2rad(np.arange(360.0))
    t1, t2 = np.meshgrid(axis, axis, indexing="ij")
    stack = np.stack([t1, t2], axis=-1)
    oracle = pattern_variance_per_site(stack, np.zeros_like(stack), 6.0).min()
    got = minimize_variance(ising(4, 6.0)).value_per_site
    assert got <= oracle + 1e-9
    assert got == pytest.approx(float(oracle), abs=1e-3)
    assert got == pytest.approx(1.0, abs=1e-3)  # the strong-field asymptote


@pytest.mark.parametrize("B", [0.5, 1.0, 2.0, 3.0])
def test_period4_reproduces_period2(B):
    v2 = minimize_variance(ising(4, B), period=2).value_per_site
    v4 = minimize_variance(ising(8, B), period=4).value_per_site
    assert v4 <= v2 + 1e-12  # period-2 patterns embed into period-4
    assert v4 == pytest.approx(v2, abs=1e-4)


def test_random_product_states_respect_the_bound():
    # 500 random product states on a 12-ring, phi unrestricted
    rng = np.random.default_rng(42)
    bound = minimize_variance(ising(12, 1.3)).value_per_site
    thetas = np.arccos(rng.uniform(-1, 1, size=(500, 12)))
    phis = rng.uniform(0, 2 * np.pi, size=(500, 12))
    values = pattern_variance_per_site(thetas, phis, 1.3)
    assert values.min() >= bound - 1e-6


def test_minimize_variance_reports_canonical_angles():
    b = minimize_variance(ising(4, 2.0))
    thetas = tuple(b.arg_angles.thetas)
    # the simultaneous z-flip theta -> pi - theta leaves the objective invariant;
    # the canonical representative is the lexicographically smallest tuple
    flipped = np.mod(np.pi - np.array(thetas), 2 * np.pi)
    assert thetas == min(thetas, tuple(np.round(flipped, 12)))
    assert thetas == min(thetas, thetas[::-1])
    v_flip = float(pattern_variance_per_site(flipped, [0.0, 0.0], 2.0))
    assert v_flip == pytest.approx(b.value_per_site, rel=1e-9)


def test_variance_op_input_validation():
    with pytest.raises(ValueError):
        variance_product_state(ModelSpec(Model.XX, 4), xz_ansatz(0.0, 0.0))
    with pytest.raises(ValueError):
        variance_product_state(ising(6, 1.0), xz_ansatz(0.0, np.pi, 0.0, np.pi))
    with pytest.raises(ValueError):
        minimize_variance(ising(6, 1.0), period=3)
    with pytest.raises(ValueError):
        minimize_variance(ising(4, 1.0), restarts=0)
    with pytest.raises(ValueError):
        ProductAnsatz(2, ((0.0, 0.0),))
    with pytest.raises(ValueError):
        ProductAnsatz(2, ((0.0, 0.3), (0.0, 0.0)), restrict_xz=True)


def test_energy_minimum_heisenberg_spin_half():
    bound = minimize_energy(ModelSpec(Model.HEISENBERG_XXX, 6, spin=0.5))
    assert bound.value_per_site == pytest.approx(-0.25, abs=1e-6)


def test_energy_minimum_heisenberg_spin_one():
    bound = minimize_energy(ModelSpec(Model.HEISENBERG_XXX, 4, spin=1.0))
    assert bound.value_per_site == pytest.approx(-1.0, abs=1e-6)


def test_energy_minimum_xx_chain():
    bound = minimize_energy(ModelSpec(Model.XX, 6))
    assert bound.value_per_site == pytest.approx(-1.0, abs=1e-6)


def test_energy_minimum_rejects_ising():
    with pytest.raises(ValueError):
        minimize_energy(ising(4, 1.0))


def test_random_product_energies_respect_the_bound():
    # <H>/N >= -J s^2 for 500 random product states, dense route
    rng = np.random.default_rng(3)
    spec = ModelSpec(Model.HEISENBERG_XXX, 6, spin=0.5)
    H = build_hamiltonian(spec)
    for _ in range(500):
        sites = rng.normal(size=(6, 2)) + 1j * rng.normal(size=(6, 2))
        sites /= np.linalg.norm(sites, axis=1, keepdims=True)
        v = product_state_vector(sites)
        energy = np.vdot(v, H @ v).real / 6
        assert energy >= -0.25 - 1e-9


def test_convexity_single_state_is_equality():
    res = convexity_check([xz_ansatz(0.3, 2.1)], [1.0], ising(4, 1.3))
    assert res.passed
    assert res.mixture_variance == pytest.approx(res.weighted_variance_sum, rel=1e-12)


def test_convexity_two_states_strict_when_means_differ():
    res = convexity_check(
        [xz_ansatz(0.0, np.pi), xz_ansatz(np.pi / 2, np.pi / 2)],
        [0.5, 0.5],
        ising(4, 1.3),
    )
    assert res.passed
    assert res.mixture_variance > res.weighted_variance_sum + 1e-3


def test_convexity_randomized_mixtures():
    rng = np.random.default_rng(1234)
    spec = ising(6, 1.3)
    for _ in range(200):
        states = [
            ProductAnsatz(2, ((rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)),
                              (rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))),
                          restrict_xz=False)
            for _ in range(5)
        ]
        w = rng.dirichlet(np.ones(5))
        assert convexity_check(states, w, spec).passed


def test_convexity_weight_validation():
    with pytest.raises(ValueError):
        convexity_check([xz_ansatz(0.0, 0.0)], [0.7], ising(4, 1.0))
    with pytest.raises(ValueError):
        convexity_check([xz_ansatz(0.0, 0.0)], [1.0, 0.0], ising(4, 1.0))
