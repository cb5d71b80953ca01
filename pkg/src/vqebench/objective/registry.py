from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass

from vqebench.sim import StateVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RegisteredState:
    state: StateVector
    energy: float


@dataclass(frozen=True, slots=True)
class StateRegistry:
    """Previously solved states of one (r, repetition) cell, sorted by energy."""

    entries: tuple[RegisteredState, ...] = ()

    def __post_init__(self) -> None:
        energies = [e.energy for e in self.entries]
        if any(b < a for a, b in zip(energies, energies[1:])):
            raise ValueError("registry energies must be non-decreasing")

    def __len__(self) -> int:
        return len(self.entries)

    def with_state(self, state: StateVector, energy: float) -> StateRegistry:
        if not math.isfinite(energy):
            raise ValueError("registered energy must be finite")
        energies = [e.energy for e in self.entries]
        pos = bisect.bisect_right(energies, energy)
        if pos < len(energies):
            logger.warning(
                "registered energy %.10f lies below %d earlier state(s); re-ordering",
                energy,
                len(energies) - pos,
            )
        entries = (*self.entries[:pos], RegisteredState(state, energy), *self.entries[pos:])
        return StateRegistry(entries)

    @property
    def top_energy(self) -> float:
        if not self.entries:
            raise LookupError("registry is empty")
        return self.entries[-1].energy
