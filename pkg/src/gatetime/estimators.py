"""scikit-learn compatible wrappers.

Gates and Hamiltonians are passed as stacks of shape (n, 4, 4) or as
flattened rows (n, 16), so the transformers slot into pipelines.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._config import DEFAULT_TOL, Tolerances
from .bipartite import nonlocal_content
from .hamcanon import ham_canonical_params
from .majorize import generator_spectrum, min_time_gate_ham
from .validation import check_gate_batch, check_hermitian


class CanonicalParameters(TransformerMixin, BaseEstimator):
    """Map two-qubit gates to (theta_x, theta_y, theta_z), or to phi with ``output="phi"``."""

    def __init__(self, output: str = "theta", unit_tol: float = 1e-8):
        self.output = output
        self.unit_tol = unit_tol

    def fit(self, X, y=None):
        if self.output not in ("theta", "phi"):
            raise ValueError(f"output must be 'theta' or 'phi', got {self.output!r}")
        check_gate_batch(X)
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        tol = DEFAULT_TOL.with_(unit=self.unit_tol)
        out = []
        for u in check_gate_batch(X):
            content = nonlocal_content(u, tol)
            out.append(content.theta.as_array() if self.output == "theta" else content.phi)
        return np.array(out)


class HamiltonianParameters(TransformerMixin, BaseEstimator):
    """Map two-qubit Hamiltonians to (h_x, h_y, h_z)."""

    def __init__(self, herm_tol: float = 1e-10):
        self.herm_tol = herm_tol

    def fit(self, X, y=None):
        check_gate_batch(X)
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        tol = DEFAULT_TOL.with_(herm=self.herm_tol)
        return np.array([ham_canonical_params(h, tol).as_array() for h in check_gate_batch(X)])


class MinimalTime(BaseEstimator):
    """Fit on a Hamiltonian, then predict minimal simulation times for gates.

    >>> import numpy as np
    >>> from gatetime.paulis import XX
    >>> cnot = np.eye(4)[[0, 1, 3, 2]]
    >>> float(MinimalTime().fit(XX).predict(cnot)[0])  # doctest: +ELLIPSIS
    0.78539816...
    """

    def __init__(self, exhaustive_m: bool = False, tol: Tolerances | None = None):
        self.exhaustive_m = exhaustive_m
        self.tol = tol

    def fit(self, X, y=None):
        tol = self.tol or DEFAULT_TOL
        self.hamiltonian_ = check_hermitian(X, 4, tol, "Hamiltonian")
        self.spectrum_ = generator_spectrum(self.hamiltonian_, tol)
        self.params_ = ham_canonical_params(self.hamiltonian_, tol)
        self.n_features_in_ = 16
        return self

    def predict(self, X):
        check_is_fitted(self, "hamiltonian_")
        tol = self.tol or DEFAULT_TOL
        return np.array(
            [min_time_gate_ham(u, self.hamiltonian_, self.exhaustive_m, tol).t_min for u in check_gate_batch(X)]
        )
