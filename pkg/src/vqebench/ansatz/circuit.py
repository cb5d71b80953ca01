"""Trotterized cluster + Hamiltonian-evolution ansatz."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from vqebench.pauli import HamiltonianSpec, PauliString, h2_bk_template
from vqebench.sim import StateVector, apply_pauli_exponential, init_basis_state

from .generators import build_uccsd_generators

HARTREE_FOCK_BITS = "1000"

FloatArray = npt.NDArray[np.float64]


class AnsatzMode(str, Enum):
    CLUSTER_ONLY = "cluster_only"
    CLUSTER_PLUS_HAMILTONIAN = "cluster_plus_hamiltonian"

    def __str__(self) -> str:  # pragma: no cover
        return self.value


@dataclass(frozen=True, slots=True)
class AnsatzFactor:
    string: PauliString
    t: float
    param_index: int


@dataclass(frozen=True, slots=True)
class AnsatzSpec:
    factors: tuple[AnsatzFactor, ...]
    n_params: int
    depth: int
    mode: AnsatzMode
    n_cluster_params: int

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        for f in self.factors:
            if not (0 <= f.param_index < self.n_params):
                raise ValueError(f"factor {f.string} has parameter index out of range")
            if not math.isfinite(f.t):
                raise ValueError("factor step coefficient must be finite")

    @property
    def hamiltonian_indices(self) -> tuple[int, ...]:
        return tuple(range(self.n_cluster_params, self.n_params))

    def bounds(self) -> tuple[FloatArray, FloatArray]:
        return default_bounds(self.n_params)


@dataclass(frozen=True, slots=True)
class ParameterVector:
    values: FloatArray
    lower: FloatArray
    upper: FloatArray

    def __post_init__(self) -> None:
        if not (self.values.shape == self.lower.shape == self.upper.shape):
            raise ValueError("values and bounds must have the same length")
        if self.values.ndim != 1:
            raise ValueError("parameter vector must be one-dimensional")
        if np.any(self.lower >= self.upper):
            raise ValueError("every lower bound must be below its upper bound")

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @classmethod
    def zeros(cls, n: int) -> ParameterVector:
        lower, upper = default_bounds(n)
        return cls(np.zeros(n), lower, upper)

    def with_values(self, values: npt.ArrayLike) -> ParameterVector:
        return ParameterVector(np.asarray(values, dtype=np.float64), self.lower, self.upper)


def default_bounds(n: int) -> tuple[FloatArray, FloatArray]:
    return np.full(n, -math.pi), np.full(n, math.pi)


def build_ansatz(
    depth: int,
    mode: AnsatzMode | str,
    spec: HamiltonianSpec | None = None,
) -> AnsatzSpec:
    mode = AnsatzMode(mode)
    if depth < 1:
        raise ValueError("depth must be >= 1")
    generators = build_uccsd_generators()
    factors: list[AnsatzFactor] = []
    index = 0
    for _ in range(depth):
        for g in generators:
            factors.append(AnsatzFactor(g, 1.0, index))
            index += 1
    n_cluster = index
    if mode is AnsatzMode.CLUSTER_PLUS_HAMILTONIAN:
        if spec is None or not spec.terms:
            raise ValueError("cluster_plus_hamiltonian mode needs a non-empty Hamiltonian spec")
        for _ in range(depth):
            for s in h2_bk_template():
                factors.append(AnsatzFactor(s, 1.0, index))
                index += 1
    return AnsatzSpec(
        factors=tuple(factors), n_params=index, depth=depth, mode=mode, n_cluster_params=n_cluster
    )


def prepare_state(ansatz: AnsatzSpec, theta: ParameterVector | npt.ArrayLike) -> StateVector:
    """Apply ``exp(i theta_k t_j P_j)`` factor by factor to |1000>."""
    values = theta.values if isinstance(theta, ParameterVector) else np.asarray(theta, float)
    if values.shape != (ansatz.n_params,):
        raise ValueError(f"expected {ansatz.n_params} parameters, got shape {values.shape}")
    state = init_basis_state(HARTREE_FOCK_BITS)
    for f in ansatz.factors:
        # exp(+i theta t P) == exp(-i (-theta t) P)
        state = apply_pauli_exponential(state, f.string, -values[f.param_index] * f.t)
    return state
