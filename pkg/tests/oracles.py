"""Reference computations independent of the package's own solvers.

Eigenvalues come from LAPACK via numpy; shifts are enumerated by brute
force; minimal times are located on a dense grid with the bare definition
of majorization (descending prefix sums).
"""

import itertools
import math

import numpy as np

YY = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])
CNOT = np.eye(4, dtype=complex)[[0, 1, 3, 2]]


def lapack_spectrum_uu(u):
    """Eigenvalues of U U~ after det normalization (U U~ is unchanged by U -> -U)."""
    u = np.asarray(u, dtype=complex)
    u = u / np.linalg.det(u) ** 0.25
    return np.linalg.eigvals(u @ YY @ u.T @ YY)


def phase_cosets(u):
    """Half-angle vectors of U U~ for both SU(4) classes (U and iU)."""
    vals = lapack_spectrum_uu(u)
    return [np.angle(vals) / 2, np.angle(-vals) / 2]


def is_majorized(x, y, slack=1e-10):
    px = np.cumsum(np.sort(x)[::-1])
    py = np.cumsum(np.sort(y)[::-1])
    return abs(px[-1] - py[-1]) <= 1e-9 and bool(np.all(px[:-1] <= py[:-1] + slack))


def feasible(cosets, lam, t, window=2):
    """Does some zero-sum shift of some coset vector get majorized by t*lam?"""
    for v in cosets:
        target = -round(v.sum() / math.pi)
        for m in itertools.product(range(-window, window + 1), repeat=len(v)):
            if sum(m) == target and is_majorized(v + math.pi * np.array(m), t * np.asarray(lam)):
                return True
    return False


def grid_min_time(cosets, lam, center, step=1e-5, half_width=5):
    """First grid point around ``center`` where majorization becomes feasible."""
    grid = [center + j * step for j in range(-half_width, half_width + 1)]
    for t in grid:
        if t >= 0 and feasible(cosets, lam, t):
            return t
    return None


def lapack_generator_spectrum(h):
    """Descending spectrum of -(H without identity and local terms)."""
    paulis = [np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])]
    out = np.zeros((4, 4), dtype=complex)
    for a in paulis[1:]:
        for b in paulis[1:]:
            p = np.kron(a, b)
            out += np.trace(p @ h) / 4 * p
    return np.sort(np.linalg.eigvalsh(-out))[::-1]


def random_hermitian(rng, dim, scale=1.0):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (g + g.conj().T) / 2


def random_unitary(rng, dim):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_su2(rng):
    u = random_unitary(rng, 2)
    return u / np.sqrt(np.linalg.det(u))


def weyl_sample(rng, margin=1e-3):
    while True:
        tx = rng.uniform(0, math.pi / 4)
        ty = rng.uniform(0, tx)
        tz = rng.uniform(-ty, ty)
        if math.pi / 4 - tx >= margin and tx - ty >= margin and ty - abs(tz) >= margin:
            return np.array([tx, ty, tz])


def canonical_ham(hx, hy, hz):
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]])
    z = np.diag([1.0 + 0j, -1.0])
    return hx * np.kron(x, x) + hy * np.kron(y, y) + hz * np.kron(z, z)
