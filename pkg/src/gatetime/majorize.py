"""Majorization and the minimal simulation time of two-qubit gates.

x is majorized by y when every descending prefix sum of x is at most the
matching prefix sum of y and the totals agree. The time needed to reach a
gate with nonlocal content phi under a Hamiltonian whose (stripped)
generator has spectrum lam is the least t with

    phi + pi m  majorized by  t * lam

for some integer vector m. Because prefix sums of a descending zero-sum
lam are positive, the least t is a maximum of prefix ratios.

Sign convention: evolution is exp(-iHt), so the accumulated generator is
-H and ``lam`` is the spectrum of -H', H' being H with local terms removed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._config import Tolerances, resolve
from .bipartite import phase_candidates
from .exceptions import Infeasible, LengthMismatch, NotEntangling
from .hamcanon import strip_local
from .linalg import hermitian_eig
from .validation import check_hermitian, check_unitary

DEFAULT_M_SET = (np.zeros(4, dtype=int), np.array([1, 1, -1, -1]))


@dataclass(frozen=True)
class BoundResult:
    """Minimal time with the integer shift and prefix index that attain it.

    ``phi`` is the nonlocal vector the shift applies to and ``phase`` the
    SU(4) representative it came from (0 when called on a bare phi).
    """

    t_min: float
    m: np.ndarray
    active_k: int
    phi: np.ndarray | None = None
    phase: int = 0


def majorizes(y, x, tol: Tolerances | None = None) -> bool:
    """True iff x is majorized by y."""
    tol = resolve(tol)
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.shape != y.shape:
        raise LengthMismatch(f"lengths differ: {x.size} vs {y.size}")
    if x.size == 0:
        raise LengthMismatch("vectors must be non-empty")
    px = np.cumsum(np.sort(x)[::-1])
    py = np.cumsum(np.sort(y)[::-1])
    if abs(px[-1] - py[-1]) > tol.sum_slack:
        return False
    return bool(np.all(px[:-1] <= py[:-1] + tol.prefix_slack))


def prefix_time(x, lam) -> tuple[float, int]:
    """Least t >= 0 with x majorized by t*lam, and the 1-based prefix that binds.

    ``lam`` must be descending and zero-sum; ``x`` zero-sum. Raises
    Infeasible when a positive prefix of x meets a nonpositive prefix of lam.
    """
    xs = np.sort(np.asarray(x, dtype=float))[::-1]
    px = np.cumsum(xs)[:-1]
    pl = np.cumsum(lam)[:-1]
    ratios = np.zeros(len(px))
    for i, (num, den) in enumerate(zip(px, pl)):
        if den > 0:
            ratios[i] = num / den
        elif num > 0:
            raise Infeasible(f"prefix {i + 1} of x is positive but lam's is not")
    k = int(np.argmax(ratios))
    return max(0.0, float(ratios[k])), k + 1


def zero_sum_shifts(dim: int, window: int = 1) -> list[np.ndarray]:
    """All integer vectors with entries in [-window, window] summing to zero."""
    rng = range(-window, window + 1)
    return [np.array(m) for m in itertools.product(rng, repeat=dim) if sum(m) == 0]


def _check_lam(lam, tol: Tolerances) -> np.ndarray:
    lam = np.asarray(lam, dtype=float)
    if np.any(np.diff(lam) > tol.sum_slack):
        raise ValueError("lam must be nonincreasing")
    if abs(lam.sum()) > tol.sum_slack * max(1.0, np.abs(lam).max()):
        raise ValueError("lam must sum to zero")
    if lam[0] <= tol.entangling:
        raise NotEntangling("Hamiltonian has no entangling part")
    return lam


def min_time(phi, lam, m_set=None, exhaustive: bool = False, tol: Tolerances | None = None) -> BoundResult:
    """Least t with sort(phi + pi*m) majorized by t*lam over the given shifts m.

    ``m_set`` defaults to {(0,0,0,0), (1,1,-1,-1)}; ``exhaustive`` searches
    every zero-sum m in {-1,0,1}^4 instead. m is added to phi in descending
    order.
    """
    tol = resolve(tol)
    phi = np.sort(np.asarray(getattr(phi, "phi", phi), dtype=float))[::-1]
    lam = _check_lam(lam, tol)
    if phi.shape != lam.shape:
        raise LengthMismatch("phi and lam lengths differ")
    if exhaustive:
        m_set = zero_sum_shifts(len(phi))
    elif m_set is None:
        m_set = DEFAULT_M_SET
    if len(m_set) == 0:
        raise ValueError("m_set is empty")
    best = None
    for m in m_set:
        m = np.asarray(m, dtype=int)
        if m.sum() != 0:
            raise ValueError(f"shift {m.tolist()} does not sum to zero")
        try:
            t, k = prefix_time(phi + math.pi * m, lam)
        except Infeasible:
            continue
        if best is None or t < best.t_min:
            best = BoundResult(t, m, k, phi)
    if best is None:
        raise Infeasible("no shift gives a finite time")
    return best


def generator_spectrum(H, tol: Tolerances | None = None) -> np.ndarray:
    """Descending spectrum of -H' where H' is H without local or identity terms."""
    tol = resolve(tol)
    mu = hermitian_eig(strip_local(H, tol), want_vectors=False, tol=tol).values
    return -mu[::-1]


def min_time_gate_ham(U, H, exhaustive: bool = False, tol: Tolerances | None = None) -> BoundResult:
    """Minimal time to simulate U (up to global phase) with H and fast local unitaries.

    U and iU are the same physical gate but sit in different SU(4) classes,
    so the time is minimized over the phase representatives as well as m.
    """
    tol = resolve(tol)
    check_unitary(U, 4, tol, "gate")
    check_hermitian(H, 4, tol, "Hamiltonian")
    lam = generator_spectrum(H, tol)
    if lam[0] <= tol.entangling:
        raise NotEntangling("not entangling")
    best = None
    seen: list[np.ndarray] = []
    for k, phi in phase_candidates(U, tol):
        if any(np.array_equal(phi, s) for s in seen):
            continue
        seen.append(phi)
        res = min_time(phi, lam, exhaustive=exhaustive, tol=tol)
        if best is None or res.t_min < best.t_min:
            best = BoundResult(res.t_min, res.m, res.active_k, phi, k)
    return best
