import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gatetime.bipartite import (
    CanonicalParams,
    canonical_gate,
    canonical_gate_unchecked,
    nonlocal_content,
    params_from_phi,
    phase_candidates,
    phi_from_params,
    spin_flip,
    su4_representatives,
)
from gatetime.exceptions import AmbiguousBoundary, NotUnitary, OrderingViolation, WrongDimension
from gatetime.linalg import exp_i_hermitian
from gatetime.paulis import XX, YY, ZZ, X

from oracles import CNOT, lapack_spectrum_uu, random_su2, random_unitary, weyl_sample

Q = math.pi / 4


def _same_multiset(a, b, atol):
    a, b = list(a), list(b)
    for z in a:
        j = int(np.argmin([abs(z - w) for w in b]))
        if abs(z - b[j]) > atol:
            return False
        b.pop(j)
    return True


# spin flip ---------------------------------------------------------------


def test_spin_flip_identity():
    np.testing.assert_array_equal(spin_flip(np.eye(4)), np.eye(4))


def test_spin_flip_minus_xx():
    m = -np.kron(X, X)
    np.testing.assert_allclose(spin_flip(m), m)
    np.testing.assert_allclose(m @ spin_flip(m), np.eye(4))


def test_spin_flip_local_unit_determinant(rng):
    for _ in range(50):
        m = np.kron(random_su2(rng), random_su2(rng))
        assert np.max(np.abs(m @ spin_flip(m) - np.eye(4))) <= 1e-10


def test_spin_flip_involution_and_antihomomorphism(rng):
    a, b = random_unitary(rng, 4), random_unitary(rng, 4)
    np.testing.assert_allclose(spin_flip(spin_flip(a)), a, atol=1e-15)
    np.testing.assert_allclose(spin_flip(a @ b), spin_flip(b) @ spin_flip(a), atol=1e-14)


def test_spin_flip_wrong_dimension():
    with pytest.raises(WrongDimension):
        spin_flip(np.eye(2))


# representatives ---------------------------------------------------------


def test_su4_representatives_contains_unit_det_input(rng):
    u = canonical_gate(weyl_sample(rng))
    assert any(np.allclose(r, u, atol=1e-12) for r in su4_representatives(u))


def test_su4_representatives_phase():
    u = np.exp(1j * math.pi / 7) * np.eye(4)
    for r in su4_representatives(u):
        assert abs(np.linalg.det(r) - 1) <= 1e-12
        assert np.max(np.abs(r @ r.conj().T - np.eye(4))) <= 1e-10


def test_su4_representatives_random(rng):
    for r in su4_representatives(random_unitary(rng, 4)):
        assert abs(np.linalg.det(r) - 1) <= 1e-10
        assert np.max(np.abs(r @ r.conj().T - np.eye(4))) <= 1e-10


def test_su4_representatives_not_unitary():
    with pytest.raises(NotUnitary):
        su4_representatives(np.ones((4, 4)))


# canonical gate ----------------------------------------------------------


def test_canonical_gate_identity():
    np.testing.assert_allclose(canonical_gate((0, 0, 0)), np.eye(4), atol=1e-15)


def test_canonical_gate_matches_exponential(rng):
    for _ in range(20):
        th = weyl_sample(rng)
        ref = exp_i_hermitian(th[0] * XX + th[1] * YY + th[2] * ZZ, 1.0)
        np.testing.assert_allclose(canonical_gate(th), ref, atol=1e-12)


def test_canonical_gate_commutes_with_yy(rng):
    u = canonical_gate(weyl_sample(rng))
    assert np.max(np.abs(u @ YY - YY @ u)) <= 1e-10


def test_canonical_gate_rejects_outside_chamber():
    with pytest.raises(OrderingViolation):
        canonical_gate((0.1, 0.2, 0.0))
    with pytest.raises(OrderingViolation):
        canonical_gate((1.0, 0.0, 0.0))


# phi <-> theta -----------------------------------------------------------


def test_params_from_phi_cases():
    assert params_from_phi([0, 0, 0, 0]).as_array() == pytest.approx([0, 0, 0])
    assert params_from_phi([Q, Q, -Q, -Q]).as_array() == pytest.approx([Q, 0, 0], abs=1e-15)
    assert params_from_phi([Q, Q, Q, -3 * Q]).as_array() == pytest.approx([Q, Q, Q])


@pytest.mark.parametrize("theta", [(Q, 0, 0), (Q, Q, Q), (0.3, 0.2, -0.1)])
def test_phi_forward_map_inverts(theta):
    phi = phi_from_params(CanonicalParams(*theta))
    assert phi.sum() == pytest.approx(0, abs=1e-15)
    assert params_from_phi(phi).as_array() == pytest.approx(theta)


def test_params_from_phi_ordering_violation():
    # theta_x = 3pi/8 > pi/4
    with pytest.raises(OrderingViolation):
        params_from_phi([3 * Q / 2 + 0.1, 3 * Q / 2 - 0.1, -3 * Q / 2, -3 * Q / 2])


# nonlocal content --------------------------------------------------------


def test_nonlocal_content_identity():
    np.testing.assert_allclose(nonlocal_content(np.eye(4)).phi, 0, atol=1e-15)


def test_nonlocal_content_cnot():
    # oracle: spectrum of U U~ for CNOT matches the one for U_c(pi/4, 0, 0)
    ref = canonical_gate((Q, 0, 0))
    assert _same_multiset(lapack_spectrum_uu(CNOT), lapack_spectrum_uu(ref), 1e-12)
    content = nonlocal_content(CNOT)
    np.testing.assert_allclose(content.phi, [Q, Q, -Q, -Q], atol=1e-12)
    np.testing.assert_allclose(content.theta.as_array(), [Q, 0, 0], atol=1e-12)
    assert not content.ambiguous


def test_nonlocal_content_swap_class():
    content = nonlocal_content(canonical_gate((Q, Q, Q)))
    np.testing.assert_allclose(content.phi, [Q, Q, Q, -3 * Q], atol=1e-12)
    assert content.ambiguous
    with pytest.raises(AmbiguousBoundary):
        nonlocal_content(canonical_gate((Q, Q, Q)), strict=True)


def test_nonlocal_content_round_trip(rng):
    for _ in range(200):
        th = weyl_sample(rng)
        content = nonlocal_content(canonical_gate(th))
        np.testing.assert_allclose(content.theta.as_array(), th, atol=1e-9)


def test_nonlocal_content_spectral_consistency(rng):
    for _ in range(100):
        u = random_unitary(rng, 4)
        content = nonlocal_content(u)
        phi = content.phi
        assert abs(phi.sum()) <= 1e-10
        assert np.all(np.diff(phi) <= 1e-15)
        assert 2 * phi[0] <= 1.5 * math.pi + 1e-10 and 2 * phi[3] >= -1.5 * math.pi - 1e-10
        # phi belongs to the representative i^k U, whose U U~ carries a factor (-1)^k
        assert _same_multiset(np.exp(2j * phi), (-1) ** content.phase * lapack_spectrum_uu(u), 1e-8)


def test_phase_candidates_pair_up(rng):
    cands = phase_candidates(random_unitary(rng, 4))
    assert [k for k, _ in cands] == [0, 1, 2, 3]
    np.testing.assert_array_equal(cands[0][1], cands[2][1])
    np.testing.assert_array_equal(cands[1][1], cands[3][1])
    for _, phi in cands:
        assert abs(phi.sum()) <= 1e-10
        assert phi[0] - phi[3] <= math.pi + 1e-10


def test_boundary_faces():
    for theta in [(Q, Q, Q), (Q, Q, -Q), (Q, 0, 0), (Q, 0.3, 0.1), (0.4, 0.4, 0.4), (0.5, 0.2, -0.2)]:
        content = nonlocal_content(canonical_gate(theta))
        np.testing.assert_allclose(content.theta.as_array(), theta, atol=1e-9)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_local_and_phase_invariance(seed):
    r = np.random.default_rng(seed)
    u = random_unitary(r, 4)
    a1, b1, a2, b2 = (random_su2(r) for _ in range(4))
    dressed = np.kron(a1, b1) @ u @ np.kron(a2, b2) * np.exp(1j * r.uniform(0, 2 * math.pi))
    np.testing.assert_allclose(nonlocal_content(dressed).phi, nonlocal_content(u).phi, atol=1e-8)


def test_general_angles_reduce_into_chamber(rng):
    for _ in range(100):
        th = rng.uniform(-3, 3, size=3)
        theta = nonlocal_content(canonical_gate_unchecked(*th)).theta
        assert theta.in_weyl_chamber(1e-9)
