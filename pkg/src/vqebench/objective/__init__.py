"""Optimization evaluation function for ground and excited states."""

from .config import (
    EQUILIBRIUM_BOND_LENGTH,
    ConstraintOperator,
    ConstraintTarget,
    ObjectiveConfig,
    TargetState,
    default_targets,
)
from .registry import RegisteredState, StateRegistry
from .terms import (
    EvalResult,
    ObjectiveContext,
    constraint_term,
    deflation_gate,
    deflation_term,
    energy_term,
    evaluate,
    fermi_dirac_weight,
)

__all__ = [
    "EQUILIBRIUM_BOND_LENGTH",
    "ConstraintOperator",
    "ConstraintTarget",
    "EvalResult",
    "ObjectiveConfig",
    "ObjectiveContext",
    "RegisteredState",
    "StateRegistry",
    "TargetState",
    "constraint_term",
    "default_targets",
    "deflation_gate",
    "deflation_term",
    "energy_term",
    "evaluate",
    "fermi_dirac_weight",
]
