"""Lower bound on simulation time for gates on an even number of qubits.

The generalized spin flip M -> Y^n M^T Y^n maps every unit-determinant
local unitary to its inverse, so the phase-tracking argument used for two
qubits goes through: for some integer vector m,

    arg(spec(U U~)) / 2 + pi m  majorized by  t * spec(-H'),

with H' = (H + H~)/2 minus its trace part.

Choosing m. The set {v + pi m : sum = 0} has a least element in the
majorization order. Moving pi from an entry to one more than pi below it
is a T-transform, so an optimum has spread at most pi; when v itself spans
less than pi this forces every m_j into {c, c + 1}, the count of c + 1
entries is fixed by the sum, and putting them on the smallest v_j is again
reached by T-transforms. :func:`flattest_shift` builds that element, which
makes the bound exact over all of Z^D, not just the searched window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import NotEntangling, NumericalFailure, WrongDimension
from .linalg import branch_arg, hermitian_eig, unitary_eig
from .majorize import prefix_time
from .paulis import y_string
from .validation import check_hermitian, check_matrix, check_unitary, qubit_count

MAX_QUBITS = 6
EXHAUSTIVE_MAX_DIM = 8


@dataclass(frozen=True)
class NBoundResult:
    t_lower: float
    m: np.ndarray
    searched_window: int
    active_k: int = 1
    phase: int = 0
    v: np.ndarray | None = None


def generalized_spin_flip(M, n: int | None = None) -> np.ndarray:
    """Y^n M^T Y^n for an even number n of qubits."""
    m = check_matrix(M)
    nq = qubit_count(m, even=True)
    if n is not None and n != nq:
        raise WrongDimension(f"matrix acts on {nq} qubits, not {n}")
    ys = y_string(nq).real  # real for even n
    return ys @ m.T @ ys


def _integer_sum(v: np.ndarray, tol: Tolerances) -> int:
    turns = v.sum() / math.pi
    n = round(turns)
    if abs(turns - n) > tol.integer_slack:
        raise NumericalFailure(f"phase sum {turns:.3g}*pi is not an integer multiple of pi")
    return n


def flattest_shift(v, tol: Tolerances | None = None) -> np.ndarray:
    """Integer m making v + pi m zero-sum and least in the majorization order."""
    tol = resolve(tol)
    v = np.asarray(v, dtype=float)
    base = -np.floor((v - v.min()) / math.pi)
    w = v + math.pi * base
    c, r = divmod(-_integer_sum(w, tol), len(v))
    m = base.astype(int) + c
    m[np.argsort(w, kind="stable")[:r]] += 1
    return m


def _search_window(v: np.ndarray, lam: np.ndarray, window: int, tol: Tolerances):
    """Depth-first search of zero-sum-compatible m in [-window, window]^D with pruning."""
    dim = len(v)
    target = -_integer_sum(v, tol)
    best: list = [math.inf, None, 1]
    m = np.zeros(dim, dtype=int)

    def visit(i: int, acc: int, hi: float, lo: float) -> None:
        # x_max <= t*lam_1 and -x_min <= -t*lam_D bound t from below
        bound = max(hi / lam[0], -lo / -lam[-1], 0.0)
        if bound >= best[0]:
            return
        rem = dim - i
        if not -window * rem <= target - acc <= window * rem:
            return
        if i == dim:
            t, k = prefix_time(v + math.pi * m, lam)
            if t < best[0]:
                best[:] = [t, m.copy(), k]
            return
        for mi in range(-window, window + 1):
            m[i] = mi
            x = v[i] + math.pi * mi
            visit(i + 1, acc + mi, max(hi, x), min(lo, x))
        m[i] = 0

    visit(0, 0, -math.inf, math.inf)
    return best


def nqubit_bound(U, H, window: int = 1, exhaustive: bool = False, tol: Tolerances | None = None) -> NBoundResult:
    """Lower bound on the time to simulate U with H and fast local unitaries.

    Minimizes over the 2^n/2 distinct phase classes of U and over integer
    shifts m with entries in [-window, window]. For window >= 1 the closed
    form of :func:`flattest_shift` is used (it always lies in window 1);
    ``exhaustive`` runs the pruned search instead (dimension <= 8 only).
    """
    tol = resolve(tol)
    if window < 0:
        raise ValueError("window must be >= 0")
    u = check_unitary(U, tol=tol, name="gate")
    nq = qubit_count(u, even=True)
    if nq > MAX_QUBITS:
        raise WrongDimension(f"at most {MAX_QUBITS} qubits supported")
    dim = 2**nq
    h = check_hermitian(H, dim, tol, "Hamiltonian")
    if exhaustive and dim > EXHAUSTIVE_MAX_DIM:
        raise ValueError(f"exhaustive search limited to dimension {EXHAUSTIVE_MAX_DIM}")

    sym = (h + generalized_spin_flip(h)) / 2
    sym -= np.trace(sym).real / dim * np.eye(dim)
    mu = hermitian_eig(sym, want_vectors=False, tol=tol).values
    lam = -mu[::-1]
    if lam[0] <= tol.entangling:
        raise NotEntangling("not entangling")

    det = np.linalg.det(u)
    u0 = u / (abs(det) ** (1 / dim) * np.exp(1j * np.angle(det) / dim))
    values = unitary_eig(u0 @ generalized_spin_flip(u0), tol).values

    best: NBoundResult | None = None
    for k in range(dim // 2):
        # (w^k U)(w^k U)~ = w^{2k} U U~ with w = exp(2 pi i / dim)
        v = branch_arg(values * np.exp(4j * math.pi * k / dim), tol.branch_snap) / 2
        if exhaustive:
            t, m, active = _search_window(v, lam, window, tol)
            if m is None:
                continue
        else:
            m = flattest_shift(v, tol)
            if np.abs(m).max() > window:
                t, m, active = _search_window(v, lam, window, tol)
                if m is None:
                    continue
            else:
                t, active = prefix_time(v + math.pi * m, lam)
        if best is None or t < best.t_lower:
            best = NBoundResult(t, np.asarray(m), window, active, k, v)
    if best is None:
        raise NumericalFailure(f"no shift within window {window} balances the phases")
    return best
