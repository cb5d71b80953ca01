"""Variational circuit construction."""

from .circuit import (
    HARTREE_FOCK_BITS,
    AnsatzFactor,
    AnsatzMode,
    AnsatzSpec,
    ParameterVector,
    build_ansatz,
    default_bounds,
    prepare_state,
)
from .generators import Excitation, build_uccsd_generators, uccsd_excitations

__all__ = [
    "HARTREE_FOCK_BITS",
    "AnsatzFactor",
    "AnsatzMode",
    "AnsatzSpec",
    "Excitation",
    "ParameterVector",
    "build_ansatz",
    "build_uccsd_generators",
    "default_bounds",
    "prepare_state",
    "uccsd_excitations",
]
