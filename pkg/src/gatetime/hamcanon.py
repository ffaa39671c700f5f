"""Canonical form of two-qubit Hamiltonians.

Any two-qubit H expands as sum_jk h_jk s_j (x) s_k over Pauli matrices.
Dropping the identity and single-qubit terms leaves a part whose spectrum
fixes (h_x, h_y, h_z) of the locally equivalent h_x XX + h_y YY + h_z ZZ.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import OrderingViolation
from .linalg import hermitian_eig
from .paulis import PAULIS
from .validation import check_hermitian

_BASIS = np.array([[np.kron(a, b) for b in PAULIS] for a in PAULIS])  # (4, 4, 4, 4)


@dataclass(frozen=True)
class HamParams:
    h_x: float
    h_y: float
    h_z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.h_x, self.h_y, self.h_z])

    def spectrum(self) -> np.ndarray:
        """Eigenvalues of h_x XX + h_y YY + h_z ZZ, descending."""
        hx, hy, hz = self.h_x, self.h_y, self.h_z
        return np.sort([hx + hy - hz, hx - hy + hz, -hx + hy + hz, -hx - hy - hz])[::-1]


def pauli_expand(H, tol: Tolerances | None = None) -> np.ndarray:
    """Real 4x4 array h with h[j, k] = Tr[(s_j (x) s_k) H] / 4."""
    h = check_hermitian(H, 4, resolve(tol))
    coeffs = np.einsum("jkab,ba->jk", _BASIS, h) / 4
    return coeffs.real


def pauli_reconstruct(coeffs) -> np.ndarray:
    return np.einsum("jk,jkab->ab", np.asarray(coeffs, dtype=complex), _BASIS)


def strip_local(H, tol: Tolerances | None = None) -> np.ndarray:
    """Keep only the s_j (x) s_k terms with j, k != 0."""
    coeffs = pauli_expand(H, tol)
    coeffs[0, :] = 0.0
    coeffs[:, 0] = 0.0
    return pauli_reconstruct(coeffs)


def ham_canonical_params(H, tol: Tolerances | None = None) -> HamParams:
    tol = resolve(tol)
    mu = hermitian_eig(strip_local(H, tol), want_vectors=False, tol=tol).values
    params = HamParams((mu[0] + mu[1]) / 2, (mu[0] + mu[2]) / 2, (mu[1] + mu[2]) / 2)
    slack = tol.chamber_slack * max(1.0, abs(mu[0]))
    if not (params.h_x + slack >= params.h_y and params.h_y + slack >= abs(params.h_z)):
        raise OrderingViolation(f"canonical Hamiltonian parameters {params.as_array()} out of order")
    return params


def is_entangling(H, tol: Tolerances | None = None) -> bool:
    tol = resolve(tol)
    return bool(ham_canonical_params(H, tol).h_x > tol.entangling)
