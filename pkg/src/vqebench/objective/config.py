from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Literal

from vqebench.errors import ConfigError
from vqebench.pauli import PauliTerm, number_operator, spin_operators

EQUILIBRIUM_BOND_LENGTH = 0.7414


class TargetState(str, Enum):
    """Allowed H2 levels, in ascending energy order."""

    GROUND = "ground"
    TRIPLET = "triplet"
    SINGLET = "singlet"
    DOUBLY = "doubly"

    def __str__(self) -> str:  # pragma: no cover
        return self.value

    @property
    def level(self) -> int:
        return list(TargetState).index(self)


class ConstraintOperator(str, Enum):
    S_SQUARED = "s2"
    S_Z = "sz"
    NUMBER = "n"

    def __str__(self) -> str:  # pragma: no cover
        return self.value

    def terms(self) -> tuple[PauliTerm, ...]:
        return _operator_terms(self.value)


@lru_cache(maxsize=None)
def _operator_terms(operator_id: str) -> tuple[PauliTerm, ...]:
    s2, sz = spin_operators()
    return {"s2": s2, "sz": sz, "n": number_operator()}[operator_id]


@dataclass(frozen=True, slots=True)
class ConstraintTarget:
    operator: ConstraintOperator
    target: float
    weight: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.operator, ConstraintOperator):
            raise ConfigError(f"unknown constraint operator {self.operator!r}")
        if not math.isfinite(self.target):
            raise ConfigError("constraint target must be finite")
        if not (self.weight >= 0.0) or not math.isfinite(self.weight):
            raise ConfigError("constraint weight must be finite and >= 0")


_SPIN_TARGETS: dict[TargetState, tuple[float, float]] = {
    TargetState.GROUND: (0.0, 0.0),
    TargetState.TRIPLET: (2.0, 0.0),
    TargetState.SINGLET: (0.0, 0.0),
    TargetState.DOUBLY: (0.0, 0.0),
}


def default_targets(state: TargetState | str, weight: float = 1.0) -> tuple[ConstraintTarget, ...]:
    s2, sz = _SPIN_TARGETS[TargetState(state)]
    return (
        ConstraintTarget(ConstraintOperator.S_SQUARED, s2, weight),
        ConstraintTarget(ConstraintOperator.S_Z, sz, weight),
    )


@dataclass(frozen=True, slots=True)
class ObjectiveConfig:
    a: float = 1.0
    b: float = 1.0
    alpha: float = 100.0
    r_d: float = EQUILIBRIUM_BOND_LENGTH
    deflation_weight: float = 3.0
    deflation_mode: Literal["defmisc", "vqd"] = "defmisc"
    constraint_targets: tuple[ConstraintTarget, ...] = ()
    constraint_form: Literal["squared", "linear"] = "squared"
    # energy of the next-lower state at r; defaults to the top registry entry
    ep_source: Callable[[float], float] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not (self.alpha > 0.0) or not math.isfinite(self.alpha):
            raise ConfigError("alpha must be finite and positive")
        if not (self.r_d > 0.0) or not math.isfinite(self.r_d):
            raise ConfigError("r_d must be finite and positive")
        finite = (("a", self.a), ("b", self.b), ("deflation_weight", self.deflation_weight))
        for name, value in finite:
            if not math.isfinite(value):
                raise ConfigError(f"{name} must be finite")
        if self.deflation_weight < 0.0:
            raise ConfigError("deflation_weight must be >= 0")
        if self.deflation_mode not in ("defmisc", "vqd"):
            raise ConfigError("deflation_mode must be 'defmisc' or 'vqd'")
        if self.constraint_form not in ("squared", "linear"):
            raise ConfigError("constraint_form must be 'squared' or 'linear'")
