"""Nonlocal invariants of two-qubit gates and minimal simulation times."""

from ._config import DEFAULT_TOL, Tolerances
from .bipartite import (
    CanonicalParams,
    NonlocalContent,
    canonical_gate,
    nonlocal_content,
    params_from_phi,
    spin_flip,
    su4_representatives,
)
from .hamcanon import HamParams, ham_canonical_params, is_entangling, pauli_expand, strip_local
from .linalg import Spectrum, exp_i_hermitian, hermitian_eig, unitary_eig
from .majorize import BoundResult, majorizes, min_time, min_time_gate_ham
from .nbound import NBoundResult, generalized_spin_flip, nqubit_bound
from .protosim import Protocol, Segment, VerifyReport, compose_protocol, random_protocol, verify_protocol

__all__ = [
    "DEFAULT_TOL",
    "Tolerances",
    "CanonicalParams",
    "NonlocalContent",
    "canonical_gate",
    "nonlocal_content",
    "params_from_phi",
    "spin_flip",
    "su4_representatives",
    "HamParams",
    "ham_canonical_params",
    "is_entangling",
    "pauli_expand",
    "strip_local",
    "Spectrum",
    "exp_i_hermitian",
    "hermitian_eig",
    "unitary_eig",
    "BoundResult",
    "majorizes",
    "min_time",
    "min_time_gate_ham",
    "NBoundResult",
    "generalized_spin_flip",
    "nqubit_bound",
    "Protocol",
    "Segment",
    "VerifyReport",
    "compose_protocol",
    "random_protocol",
    "verify_protocol",
]
