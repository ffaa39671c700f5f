"""Small dense complex linear algebra.

Hermitian spectra come from a cyclic complex Jacobi iteration; unitary
spectra are assembled from the Hermitian and anti-Hermitian parts, which
commute because unitaries are normal. Matrices are plain ``numpy`` arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._config import Tolerances, resolve
from .exceptions import NoConvergence
from .validation import check_hermitian, check_unitary

BRANCH_LOW = -math.pi / 2
BRANCH_HIGH = 3 * math.pi / 2


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in a fixed order, with matching eigenvector columns if requested."""

    values: np.ndarray
    vectors: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.values)


def branch_arg(z, snap: float = 1e-12) -> np.ndarray:
    """Argument of ``z`` on the branch (-pi/2, 3pi/2].

    Arguments within ``snap`` of the excluded end -pi/2 are moved to 3pi/2 so
    that values sitting on the cut land consistently on the included side.
    """
    a = np.angle(np.asarray(z, dtype=complex))
    a = np.where(a <= BRANCH_LOW + snap, a + 2 * math.pi, a)
    return np.minimum(a, BRANCH_HIGH)


def _jacobi(a: np.ndarray, want_vectors: bool, tol: Tolerances) -> tuple[np.ndarray, np.ndarray | None]:
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n, dtype=complex) if want_vectors else None
    scale = float(np.linalg.norm(a))
    if n == 1 or scale == 0.0:
        return a.diagonal().real.copy(), v
    thresh = tol.jacobi_rel * scale
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(tol.jacobi_sweeps):
        if np.max(np.abs(a[offdiag])) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= thresh:
                    continue
                # D = diag(1, conj(phase)) makes the pivot real, then a real rotation kills it
                cph = (apq / mag).conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - (s * cph) * colq
                a[:, q] = s * colp + (c * cph) * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - (s * cph.conjugate()) * rowq
                a[q, :] = s * rowp + (c * cph.conjugate()) * rowq
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q]
                    v[:, p] = c * vp - (s * cph) * vq
                    v[:, q] = s * vp + (c * cph) * vq
    else:
        if np.max(np.abs(a[offdiag])) > thresh:
            raise NoConvergence(f"Jacobi iteration did not converge in {tol.jacobi_sweeps} sweeps")
    return a.diagonal().real.copy(), v


def hermitian_eig(A, want_vectors: bool = True, tol: Tolerances | None = None) -> Spectrum:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues descending.

    Raises NotHermitian when ``max|A - A^dagger|`` exceeds ``tol.herm`` and
    NoConvergence when the sweep budget runs out.
    """
    tol = resolve(tol)
    a = check_hermitian(A, tol=tol)
    a = (a + a.conj().T) / 2
    w, v = _jacobi(a, want_vectors, tol)
    order = np.argsort(-w, kind="stable")
    return Spectrum(w[order], None if v is None else v[:, order])


def _clusters(values: np.ndarray, gap: float) -> list[np.ndarray]:
    # values are sorted descending; split wherever consecutive gap exceeds ``gap``
    breaks = np.nonzero(-np.diff(values) > gap)[0] + 1
    return np.split(np.arange(len(values)), breaks)


def unitary_eig(M, tol: Tolerances | None = None) -> Spectrum:
    """Eigen-decomposition of a unitary matrix.

    Eigenvalues are ordered by descending argument on (-pi/2, 3pi/2]. The
    real part (M + M^dagger)/2 is diagonalized first; inside each of its
    degenerate eigenspaces the imaginary part (M - M^dagger)/2i separates
    the eigenvectors.
    """
    tol = resolve(tol)
    m = check_unitary(M, tol=tol)
    re_part = (m + m.conj().T) / 2
    im_part = (m - m.conj().T) / 2j
    spec = hermitian_eig(re_part, tol=tol)
    vecs = spec.vectors.copy()
    for idx in _clusters(spec.values, tol.degeneracy_gap):
        if len(idx) < 2:
            continue
        block = vecs[:, idx]
        sub = block.conj().T @ im_part @ block
        inner = hermitian_eig((sub + sub.conj().T) / 2, tol=tol)
        vecs[:, idx] = block @ inner.vectors
    values = np.einsum("ij,ik,kj->j", vecs.conj(), m, vecs)
    order = np.argsort(-branch_arg(values, tol.branch_snap), kind="stable")
    return Spectrum(values[order], vecs[:, order])


def exp_from_spectrum(spec: Spectrum, s: float) -> np.ndarray:
    """exp(i s H) from a precomputed spectrum of H."""
    if s == 0:
        return np.eye(len(spec), dtype=complex)
    v = spec.vectors
    return (v * np.exp(1j * s * spec.values)) @ v.conj().T


def exp_i_hermitian(H, s: float, tol: Tolerances | None = None) -> np.ndarray:
    """Return exp(i s H) for Hermitian H; exactly the identity when s == 0."""
    tol = resolve(tol)
    h = check_hermitian(H, tol=tol)
    if s == 0:
        return np.eye(h.shape[0], dtype=complex)
    return exp_from_spectrum(hermitian_eig(h, tol=tol), s)
