"""Exact statevector simulation."""

from .gates import (
    GateKind,
    GateOp,
    apply_gate,
    apply_pauli_exponential,
    pauli_exponential_gates,
)
from .state import (
    NORM_TOLERANCE,
    StateVector,
    expectation,
    init_basis_state,
    inner_product,
    overlap,
)

__all__ = [
    "NORM_TOLERANCE",
    "GateKind",
    "GateOp",
    "StateVector",
    "apply_gate",
    "apply_pauli_exponential",
    "expectation",
    "init_basis_state",
    "inner_product",
    "overlap",
    "pauli_exponential_gates",
]
