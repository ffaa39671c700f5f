"""Piecewise protocols: Hamiltonian evolution interleaved with local unitaries.

A protocol with segments (t_1, V_1), ..., (t_k, -) stands for

    U = exp(-iH t_1) V_1 exp(-iH t_2) V_2 ... V_{k-1} exp(-iH t_k),

with V_j the tensor product of the segment's single-qubit unitaries. The
last segment carries no local layer. Its cost is t_1 + ... + t_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import InvalidProtocol, NotEntangling
from .linalg import exp_from_spectrum, exp_i_hermitian, hermitian_eig
from .majorize import min_time_gate_ham
from .nbound import nqubit_bound
from .paulis import kron
from .validation import check_hermitian, is_unitary, qubit_count


@dataclass(frozen=True)
class Segment:
    duration: float
    locals: tuple[np.ndarray, ...] | None = None  # one 2x2 unitary per qubit, or None

    @property
    def left(self) -> np.ndarray | None:
        return None if self.locals is None else self.locals[0]

    @property
    def right(self) -> np.ndarray | None:
        return None if self.locals is None else self.locals[-1]


@dataclass(frozen=True)
class Protocol:
    segments: tuple[Segment, ...] = field(default_factory=tuple)

    @property
    def total_time(self) -> float:
        return float(sum(s.duration for s in self.segments))

    def __len__(self) -> int:
        return len(self.segments)

    @classmethod
    def from_pairs(cls, items) -> "Protocol":
        """Build from ``(t,)`` or ``(t, left, right)`` tuples (two-qubit shorthand)."""
        segs = []
        for item in items:
            t, *loc = item
            segs.append(Segment(float(t), tuple(np.asarray(a, dtype=complex) for a in loc) or None))
        return cls(tuple(segs))


@dataclass(frozen=True)
class VerifyReport:
    t_total: float
    t_min: float
    slack: float
    passed: bool


def _validate(p: Protocol, n_qubits: int, tol: Tolerances) -> None:
    for j, seg in enumerate(p.segments):
        if not (seg.duration >= 0 and math.isfinite(seg.duration)):
            raise InvalidProtocol(f"segment {j}: duration must be finite and >= 0")
        if seg.locals is None:
            continue
        if j == len(p.segments) - 1:
            if not all(np.allclose(a, np.eye(2), atol=tol.unit) for a in seg.locals):
                raise InvalidProtocol("the last segment cannot carry local unitaries")
            continue
        if len(seg.locals) != n_qubits:
            raise InvalidProtocol(f"segment {j}: expected {n_qubits} local unitaries, got {len(seg.locals)}")
        for a in seg.locals:
            if np.shape(a) != (2, 2) or not is_unitary(a, tol):
                raise InvalidProtocol(f"segment {j}: local operation is not a 2x2 unitary")


def compose_protocol(H, p: Protocol, tol: Tolerances | None = None) -> np.ndarray:
    tol = resolve(tol)
    h = check_hermitian(H, tol=tol, name="Hamiltonian")
    nq = qubit_count(h)
    _validate(p, nq, tol)
    spec = hermitian_eig(h, tol=tol)
    u = np.eye(h.shape[0], dtype=complex)
    last = len(p.segments) - 1
    for j, seg in enumerate(p.segments):
        u = u @ exp_from_spectrum(spec, -seg.duration)
        if j < last and seg.locals is not None:
            u = u @ kron(*seg.locals)
    return u


def verify_protocol(H, p: Protocol, tol: Tolerances | None = None) -> VerifyReport:
    """Compare a protocol's duration with the lower bound for the gate it produces.

    Two-qubit Hamiltonians use the exact minimal time; larger even-qubit
    ones use :func:`nqubit_bound` with window 1.
    """
    tol = resolve(tol)
    u = compose_protocol(H, p, tol)
    if u.shape[0] == 4:
        t_min = min_time_gate_ham(u, H, tol=tol).t_min
    else:
        t_min = nqubit_bound(u, H, window=1, tol=tol).t_lower
    t_total = p.total_time
    slack = t_total - t_min
    return VerifyReport(t_total, t_min, slack, slack >= -1e-7)


def random_su2(rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    u = exp_i_hermitian((g + g.conj().T) / 2, 1.0)
    return u / np.sqrt(np.linalg.det(u))


def random_protocol(H, k: int, t_scale: float, seed=None, n_qubits: int | None = None) -> Protocol:
    """k segments with durations uniform on [0, t_scale] and SU(2) locals.

    Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), so a
    given seed reproduces the protocol exactly.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not t_scale > 0:
        raise ValueError("t_scale must be positive")
    if n_qubits is None:
        n_qubits = qubit_count(np.asarray(H)) if H is not None else 2
    rng = np.random.default_rng(seed)
    segs = []
    for j in range(k):
        t = float(rng.uniform(0.0, t_scale))
        loc = tuple(random_su2(rng) for _ in range(n_qubits)) if j < k - 1 else None
        segs.append(Segment(t, loc))
    return Protocol(tuple(segs))


def random_hamiltonian(rng: np.random.Generator, n_qubits: int = 2, tol: Tolerances | None = None) -> np.ndarray:
    """Random entangling Hamiltonian.

    Two qubits: a full random Hermitian matrix (local terms included). More
    qubits: random one- and two-body Pauli terms.
    """
    tol = resolve(tol)
    from .paulis import PAULIS, embed

    while True:
        if n_qubits == 2:
            g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            h = (g + g.conj().T) / 2
        else:
            dim = 2**n_qubits
            h = np.zeros((dim, dim), dtype=complex)
            for i in range(n_qubits):
                for a in PAULIS[1:]:
                    h += rng.normal() * embed(a, i, n_qubits)
                for j in range(i + 1, n_qubits):
                    for a in PAULIS[1:]:
                        for b in PAULIS[1:]:
                            h += rng.normal() * (embed(a, i, n_qubits) @ embed(b, j, n_qubits))
        try:
            if n_qubits == 2:
                min_time_gate_ham(np.eye(4), h, tol=tol)
            return h
        except NotEntangling:
            continue
