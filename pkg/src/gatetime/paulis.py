"""Pauli matrices and tensor-product helpers."""

from __future__ import annotations

from functools import reduce

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (I2, X, Y, Z)

XX = np.kron(X, X)
YY = np.kron(Y, Y)
ZZ = np.kron(Z, Z)


def kron(*factors: np.ndarray) -> np.ndarray:
    return reduce(np.kron, factors)


def y_string(n: int) -> np.ndarray:
    """Y tensored n times."""
    return kron(*([Y] * n))


def embed(op: np.ndarray, site: int, n: int) -> np.ndarray:
    """Single-qubit ``op`` acting on qubit ``site`` of an n-qubit register."""
    factors = [I2] * n
    factors[site] = op
    return kron(*factors)
