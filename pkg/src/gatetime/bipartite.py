"""Nonlocal invariants of two-qubit gates.

A two-qubit unitary is locally equivalent to

    U_c = exp(i (tx XX + ty YY + tz ZZ)),    pi/4 >= tx >= ty >= |tz|,

and its nonlocal content is the spectrum of tx XX + ty YY + tz ZZ:

    phi = (tx + ty - tz, tx - ty + tz, -tx + ty + tz, -tx - ty - tz).

The spectrum of U U~ (spin flip, below) is exp(2 i phi). Taking the
argument on a single branch loses track of which phi_j wrapped around;
:func:`nonlocal_content` undoes the wrap by counting how many half-angles
must be shifted down by pi (the half-angles of a zero-sum vector add to
an integer multiple of pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import AmbiguousBoundary, NoCanonicalRepresentative, NumericalFailure, OrderingViolation
from .linalg import branch_arg, unitary_eig
from .paulis import XX, YY, ZZ
from .validation import check_matrix, check_unitary

_YY_REAL = YY.real.copy()

# Columns are the magic basis: (|00>+|11>)/r2, i(|00>-|11>)/r2, i(|01>+|10>)/r2, (|01>-|10>)/r2
MAGIC = np.array(
    [
        [1, 1j, 0, 0],
        [0, 0, 1j, 1],
        [0, 0, 1j, -1],
        [1, -1j, 0, 0],
    ],
    dtype=complex,
) / math.sqrt(2)


@dataclass(frozen=True)
class CanonicalParams:
    theta_x: float
    theta_y: float
    theta_z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.theta_x, self.theta_y, self.theta_z])

    def in_weyl_chamber(self, slack: float = 1e-10) -> bool:
        tx, ty, tz = self.theta_x, self.theta_y, self.theta_z
        return (
            tx <= math.pi / 4 + slack
            and ty <= tx + slack
            and abs(tz) <= ty + slack
        )

    def phi(self) -> np.ndarray:
        return phi_from_params(self)


@dataclass(frozen=True)
class NonlocalContent:
    """Nonincreasing, zero-sum 4-vector phi.

    ``ambiguous`` is set when two distinct phase representatives both land
    in the Weyl chamber (only on the face theta_x = pi/4); ``phase`` is the
    k of the representative i^k U / det(U)^(1/4) the value came from.
    """

    phi: np.ndarray
    ambiguous: bool = False
    phase: int = 0
    _theta: CanonicalParams | None = field(default=None, repr=False, compare=False)

    @property
    def theta(self) -> CanonicalParams:
        return self._theta if self._theta is not None else params_from_phi(self)


def spin_flip(M) -> np.ndarray:
    """(Y x Y) M^T (Y x Y), the transpose in the magic basis."""
    m = check_matrix(M, 4)
    return _YY_REAL @ m.T @ _YY_REAL


def su4_representatives(U, tol: Tolerances | None = None) -> list[np.ndarray]:
    """The four unit-determinant matrices i^k U / det(U)^(1/4), k = 0..3 (principal root)."""
    u = check_unitary(U, 4, tol)
    det = np.linalg.det(u)
    root = abs(det) ** 0.25 * np.exp(1j * np.angle(det) / 4)
    base = u / root
    return [(1j**k) * base for k in range(4)]


def _phi_candidate(eigenvalues: np.ndarray, tol: Tolerances) -> np.ndarray:
    half = branch_arg(eigenvalues, tol.branch_snap) / 2
    turns = half.sum() / math.pi
    n = round(turns)
    if abs(turns - n) > tol.integer_slack:
        raise NumericalFailure(f"half-angle sum {turns:.3g}*pi is not an integer multiple of pi")
    if not 0 <= n <= 3:
        raise NumericalFailure(f"wrap count {n} outside 0..3")
    s = np.sort(half, kind="stable")[::-1].copy()
    s[:n] -= math.pi
    return np.sort(s)[::-1]


def phase_candidates(U, tol: Tolerances | None = None) -> list[tuple[int, np.ndarray]]:
    """Wrap-corrected phi for each SU(4) representative, in k order.

    Representatives with even k share U U~; odd k flip its sign. Each
    candidate is zero-sum, nonincreasing and spans at most pi.
    """
    tol = resolve(tol)
    reps = su4_representatives(U, tol)
    base = reps[0] @ spin_flip(reps[0])
    values = unitary_eig(base, tol).values
    return [(k, _phi_candidate(values * (-1) ** k, tol)) for k in range(len(reps))]


def _theta_array(phi: np.ndarray) -> np.ndarray:
    return np.array([(phi[0] + phi[1]) / 2, (phi[0] + phi[2]) / 2, (phi[1] + phi[2]) / 2])


def nonlocal_content(U, tol: Tolerances | None = None, strict: bool = False) -> NonlocalContent:
    """Nonlocal content phi(U), invariant under global phase and local unitaries.

    With ``strict=True`` a Weyl-chamber boundary tie raises
    AmbiguousBoundary instead of returning the first representative.
    """
    tol = resolve(tol)
    passing: list[tuple[int, np.ndarray]] = []
    for k, phi in phase_candidates(U, tol):
        theta = CanonicalParams(*_theta_array(phi))
        if not theta.in_weyl_chamber(tol.phi_slack):
            continue
        if any(np.allclose(phi, other, rtol=0, atol=tol.phi_slack) for _, other in passing):
            continue
        passing.append((k, phi))
    if not passing:
        raise NoCanonicalRepresentative("no phase representative lands in the Weyl chamber")
    if len(passing) > 1 and strict:
        raise AmbiguousBoundary(f"{len(passing)} representatives on the Weyl-chamber boundary")
    k, phi = passing[0]
    return NonlocalContent(phi, ambiguous=len(passing) > 1, phase=k)


def params_from_phi(phi, tol: Tolerances | None = None) -> CanonicalParams:
    """Invert phi -> (theta_x, theta_y, theta_z); raise OrderingViolation outside the chamber."""
    tol = resolve(tol)
    vec = np.asarray(phi.phi if isinstance(phi, NonlocalContent) else phi, dtype=float)
    if vec.shape != (4,):
        raise ValueError("phi must be a 4-vector")
    params = CanonicalParams(*(float(t) for t in _theta_array(vec)))
    if not params.in_weyl_chamber(tol.phi_slack):
        raise OrderingViolation(f"theta {params.as_array()} outside the Weyl chamber")
    return params


def phi_from_params(p: CanonicalParams) -> np.ndarray:
    tx, ty, tz = p.theta_x, p.theta_y, p.theta_z
    return np.array([tx + ty - tz, tx - ty + tz, -tx + ty + tz, -tx - ty - tz])


def canonical_gate(p: CanonicalParams | tuple, tol: Tolerances | None = None) -> np.ndarray:
    """exp(i(tx XX + ty YY + tz ZZ)), built diagonally in the magic basis."""
    tol = resolve(tol)
    if not isinstance(p, CanonicalParams):
        p = CanonicalParams(*map(float, p))
    if not p.in_weyl_chamber(tol.chamber_slack):
        raise OrderingViolation(f"theta {p.as_array()} outside the Weyl chamber")
    return canonical_gate_unchecked(p.theta_x, p.theta_y, p.theta_z)


def canonical_gate_unchecked(tx: float, ty: float, tz: float) -> np.ndarray:
    """Same as :func:`canonical_gate` for arbitrary angles."""
    # eigenvalue of tx XX + ty YY + tz ZZ on each magic basis vector
    diag = np.array([tx - ty + tz, -tx + ty + tz, tx + ty - tz, -tx - ty - tz])
    return (MAGIC * np.exp(1j * diag)) @ MAGIC.conj().T


def interaction_hamiltonian(p: CanonicalParams) -> np.ndarray:
    return p.theta_x * XX + p.theta_y * YY + p.theta_z * ZZ
