"""Numerical tolerances shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Tolerance record. Override fields with ``Tolerances(unit=1e-6)`` or :meth:`with_`."""

    herm: float = 1e-10  # max-norm of A - A^dagger
    unit: float = 1e-8  # max-norm of M M^dagger - I
    orth: float = 1e-10
    jacobi_sweeps: int = 100
    jacobi_rel: float = 1e-13  # off-diagonal stop, relative to ||A||_F
    degeneracy_gap: float = 1e-8
    branch_snap: float = 1e-12
    chamber_slack: float = 1e-10
    phi_slack: float = 1e-9
    integer_slack: float = 1e-6
    entangling: float = 1e-9
    prefix_slack: float = 1e-10
    sum_slack: float = 1e-9

    def with_(self, **changes) -> "Tolerances":
        return replace(self, **changes)


DEFAULT_TOL = Tolerances()


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT_TOL if tol is None else tol
