"""Input validation helpers in the spirit of ``sklearn.utils.validation``."""

from __future__ import annotations

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import InvalidInput, NotHermitian, NotUnitary, OddN, WrongDimension


def check_matrix(a, dim: int | None = None, name: str = "matrix") -> np.ndarray:
    """Return ``a`` as a finite square complex array, optionally of size ``dim``."""
    try:
        m = np.asarray(a, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"{name} is not numeric: {exc}") from exc
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise WrongDimension(f"{name} must be a non-empty square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise WrongDimension(f"{name} must be {dim}x{dim}, got {m.shape[0]}x{m.shape[1]}")
    if not np.all(np.isfinite(m)):
        raise InvalidInput(f"{name} has non-finite entries")
    return m


def hermiticity_defect(a: np.ndarray) -> float:
    return float(np.max(np.abs(a - a.conj().T)))


def unitarity_defect(a: np.ndarray) -> float:
    return float(np.max(np.abs(a @ a.conj().T - np.eye(a.shape[0]))))


def is_hermitian(a, tol: Tolerances | None = None) -> bool:
    return hermiticity_defect(np.asarray(a, dtype=complex)) <= resolve(tol).herm


def is_unitary(a, tol: Tolerances | None = None) -> bool:
    return unitarity_defect(np.asarray(a, dtype=complex)) <= resolve(tol).unit


def check_hermitian(a, dim: int | None = None, tol: Tolerances | None = None, name: str = "matrix") -> np.ndarray:
    m = check_matrix(a, dim, name)
    defect = hermiticity_defect(m)
    if defect > resolve(tol).herm:
        raise NotHermitian(f"{name} not Hermitian (defect {defect:.3g})")
    return m


def check_unitary(a, dim: int | None = None, tol: Tolerances | None = None, name: str = "matrix") -> np.ndarray:
    m = check_matrix(a, dim, name)
    defect = unitarity_defect(m)
    if defect > resolve(tol).unit:
        raise NotUnitary(f"{name} not unitary (defect {defect:.3g})")
    return m


def qubit_count(m: np.ndarray, even: bool = False) -> int:
    """Number of qubits n with dim = 2**n; ``even`` enforces even n."""
    dim = m.shape[0]
    n = dim.bit_length() - 1
    if dim < 2 or 2**n != dim:
        raise WrongDimension(f"dimension {dim} is not a power of two")
    if even and n % 2:
        raise OddN("odd qubit count unsupported")
    return n


def check_gate_batch(X, dim: int = 4, name: str = "X") -> np.ndarray:
    """Accept one matrix, a stack (n, dim, dim), or flattened rows (n, dim*dim)."""
    arr = np.asarray(X, dtype=complex)
    if arr.ndim == 2 and arr.shape == (dim, dim):
        arr = arr[None]
    elif arr.ndim == 2 and arr.shape[1] == dim * dim:
        arr = arr.reshape(-1, dim, dim)
    if arr.ndim != 3 or arr.shape[1:] != (dim, dim):
        raise WrongDimension(f"{name} must have shape (n, {dim}, {dim}) or (n, {dim * dim}), got {np.shape(X)}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput(f"{name} has non-finite entries")
    return arr
