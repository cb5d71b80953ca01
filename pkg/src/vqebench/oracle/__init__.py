"""Exact diagonalization reference."""

from .jacobi import jacobi_eigh, off_diagonal_norm
from .spectrum import (
    ReferenceLevels,
    SpectrumEntry,
    classify,
    full_spectrum,
    reference_energies,
    reference_levels,
)

__all__ = [
    "ReferenceLevels",
    "SpectrumEntry",
    "classify",
    "full_spectrum",
    "jacobi_eigh",
    "off_diagonal_norm",
    "reference_energies",
    "reference_levels",
]
