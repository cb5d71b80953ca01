"""Run results and evaluation bookkeeping shared by every optimizer."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from vqebench.errors import ObjectiveError

FloatArray = npt.NDArray[np.float64]
Objective = Callable[[FloatArray], float]


@dataclass(frozen=True, slots=True)
class RunResult:
    best_theta: FloatArray
    best_fitness: float
    evaluations: int
    iterations: int
    converged: bool
    trajectory: tuple[tuple[int, float], ...]
    method: str = ""
    message: str = ""


@dataclass(slots=True)
class EvaluationLog:
    """Counts evaluations and records the best-so-far trajectory.

    Observations must be fed in a deterministic order; concurrent evaluators
    collect values first and observe them afterwards.
    """

    evaluations: int = 0
    best_theta: FloatArray | None = None
    best_fitness: float = math.inf
    trajectory: list[tuple[int, float]] = field(default_factory=list)

    def observe(self, theta: FloatArray, value: float, *, index: int | None = None) -> None:
        if not math.isfinite(value):
            raise ObjectiveError(
                f"objective returned non-finite value {value!r}", theta=theta.copy(), index=index
            )
        self.evaluations += 1
        if value < self.best_fitness:
            self.best_fitness = float(value)
            self.best_theta = np.array(theta, dtype=np.float64, copy=True)
            self.trajectory.append((self.evaluations, self.best_fitness))

    def wrap(self, objective: Objective) -> Objective:
        def counted(theta: FloatArray) -> float:
            value = float(objective(theta))
            self.observe(theta, value)
            return value

        return counted

    def result(
        self, *, iterations: int, converged: bool, method: str, message: str = ""
    ) -> RunResult:
        if self.best_theta is None:
            raise ObjectiveError("no evaluations were recorded")
        return RunResult(
            best_theta=self.best_theta,
            best_fitness=self.best_fitness,
            evaluations=self.evaluations,
            iterations=iterations,
            converged=converged,
            trajectory=tuple(self.trajectory),
            method=method,
            message=message,
        )


@dataclass(frozen=True, slots=True)
class FrozenObjective:
    """Expose a subset of parameters; the rest stay at ``base`` values."""

    objective: Objective
    base: FloatArray
    free: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.free:
            raise ValueError("at least one parameter must stay free")
        if len(set(self.free)) != len(self.free):
            raise ValueError("free indices must be distinct")
        if min(self.free) < 0 or max(self.free) >= self.base.shape[0]:
            raise ValueError("free index out of range")

    @property
    def dimension(self) -> int:
        return len(self.free)

    def expand(self, reduced: Sequence[float] | FloatArray) -> FloatArray:
        full = np.array(self.base, dtype=np.float64, copy=True)
        full[list(self.free)] = reduced
        return full

    def restrict(self, full: FloatArray) -> FloatArray:
        return np.asarray(full, dtype=np.float64)[list(self.free)]

    def __call__(self, reduced: FloatArray) -> float:
        return self.objective(self.expand(reduced))
