"""Pauli-operator algebra and the H2 Hamiltonian data."""

from .hamiltonian import (
    H2_REGISTER_SIZE,
    CoefficientTable,
    HamiltonianSpec,
    bundled_coefficients_path,
    dense_matrix,
    h2_bk_template,
    load_coefficients,
)
from .operators import number_operator, spin_operators
from .strings import PauliString, PauliTerm, merge_terms

__all__ = [
    "H2_REGISTER_SIZE",
    "CoefficientTable",
    "HamiltonianSpec",
    "PauliString",
    "PauliTerm",
    "bundled_coefficients_path",
    "dense_matrix",
    "h2_bk_template",
    "load_coefficients",
    "merge_terms",
    "number_operator",
    "spin_operators",
]
