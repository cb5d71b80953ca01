"""Evaluation function: energy + deflation + spin constraints."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.special import expit

from vqebench.ansatz import AnsatzSpec, ParameterVector, prepare_state
from vqebench.errors import ObjectiveError
from vqebench.pauli import HamiltonianSpec, PauliTerm
from vqebench.sim import NORM_TOLERANCE, StateVector, expectation, overlap

from .config import ObjectiveConfig
from .registry import StateRegistry

_GOLDEN = math.sqrt(5.0) + 1.0
QUARTIC_FACTOR = 1.0 + 2.0 * _GOLDEN
QUADRATIC_FACTOR = 2.0 * _GOLDEN


@dataclass(frozen=True, slots=True)
class EvalResult:
    total: float
    energy: float
    deflation: float
    constraint: float


def _terms(hamiltonian: HamiltonianSpec | Sequence[PauliTerm]) -> Sequence[PauliTerm]:
    return hamiltonian.terms if isinstance(hamiltonian, HamiltonianSpec) else hamiltonian


def energy_term(
    theta: ParameterVector | npt.ArrayLike,
    ansatz: AnsatzSpec,
    hamiltonian: HamiltonianSpec | Sequence[PauliTerm],
) -> float:
    return expectation(prepare_state(ansatz, theta), _terms(hamiltonian))


def fermi_dirac_weight(r: float, cfg: ObjectiveConfig) -> float:
    """``(exp(alpha (r - r_d)) + 1)^-1``."""
    return float(expit(-cfg.alpha * (r - cfg.r_d)))


def deflation_gate(r: float, cfg: ObjectiveConfig) -> float:
    return float(expit(-(r - 0.25 * cfg.r_d)))


def _lower_state_energy(registry: StateRegistry, r: float, cfg: ObjectiveConfig) -> float:
    e_p = cfg.ep_source(r) if cfg.ep_source is not None else registry.top_energy
    if not math.isfinite(e_p):
        raise ObjectiveError(f"no finite lower-state energy available at r={r}")
    return float(e_p)


def deflation_term(
    candidate: StateVector, registry: StateRegistry, r: float, cfg: ObjectiveConfig
) -> float:
    if not registry.entries:
        return 0.0
    overlaps = []
    for entry in registry.entries:
        norm = float(np.vdot(entry.state.amplitudes, entry.state.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError("registry state is not normalized")
        overlaps.append(overlap(entry.state, candidate))

    if cfg.deflation_mode == "vqd":
        return cfg.deflation_weight * math.fsum(overlaps)

    f = fermi_dirac_weight(r, cfg)
    gate = deflation_gate(r, cfg)
    blend = cfg.a * f + cfg.b * (1.0 - f)
    # magnitude: energies are negative in Hartree and the polynomial must penalize
    scale = (r / cfg.r_d) ** 4 * abs(_lower_state_energy(registry, r, cfg)) / 4.0
    total = 0.0
    for s in overlaps:
        poly = QUARTIC_FACTOR * scale * s * s + QUADRATIC_FACTOR * scale * s
        total += gate * blend * s + (1.0 - gate) * poly
    return total


def constraint_term(candidate: StateVector, cfg: ObjectiveConfig) -> float:
    total = 0.0
    for target in cfg.constraint_targets:
        delta = expectation(candidate, target.operator.terms()) - target.target
        if cfg.constraint_form == "squared":
            total += target.weight * delta * delta
        else:
            total += target.weight * delta
    return total


def evaluate(
    theta: ParameterVector | npt.ArrayLike,
    state_index: int,
    registry: StateRegistry,
    r: float,
    cfg: ObjectiveConfig,
    ansatz: AnsatzSpec,
    hamiltonian: HamiltonianSpec | Sequence[PauliTerm],
) -> EvalResult:
    if len(registry) != state_index:
        raise ValueError(
            f"state {state_index} needs exactly {state_index} lower states, "
            f"registry holds {len(registry)}"
        )
    state = prepare_state(ansatz, theta)
    energy = expectation(state, _terms(hamiltonian))
    deflation = deflation_term(state, registry, r, cfg)
    constraint = constraint_term(state, cfg)
    return EvalResult(
        total=energy + deflation + constraint,
        energy=energy,
        deflation=deflation,
        constraint=constraint,
    )


@dataclass(frozen=True, slots=True)
class ObjectiveContext:
    """Callable F_i(theta) for one target state of one (r, repetition) cell."""

    state_index: int
    registry: StateRegistry
    r: float
    cfg: ObjectiveConfig
    ansatz: AnsatzSpec
    hamiltonian: tuple[PauliTerm, ...]

    def evaluate(self, theta: ParameterVector | npt.ArrayLike) -> EvalResult:
        return evaluate(
            theta, self.state_index, self.registry, self.r, self.cfg, self.ansatz, self.hamiltonian
        )

    def __call__(self, theta: npt.NDArray[np.float64]) -> float:
        return self.evaluate(theta).total
