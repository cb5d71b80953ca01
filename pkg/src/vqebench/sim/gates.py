"""Gate primitives and Pauli-string exponentials.

``apply_pauli_exponential`` computes ``exp(-i theta P)|psi>`` either directly
(``cos(theta) psi - i sin(theta) P psi``) or through the gate ladder: basis
change per active qubit, CNOT parity ladder, ``Rz(2 theta)`` on the last active
qubit, then the mirror.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np
import numpy.typing as npt

from vqebench.errors import RegisterSizeError
from vqebench.pauli import PauliString

from .state import StateVector


class GateKind(str, Enum):
    H = "H"
    RX_HALF_PI = "RxHalfPi"
    RX_HALF_PI_DAGGER = "RxHalfPiDagger"
    RZ = "Rz"
    CNOT = "CNOT"

    def __str__(self) -> str:  # pragma: no cover
        return self.value


@dataclass(frozen=True, slots=True)
class GateOp:
    kind: GateKind
    qubits: tuple[int, ...]
    theta: float = 0.0

    def __post_init__(self) -> None:
        arity = 2 if self.kind is GateKind.CNOT else 1
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} acts on {arity} qubit(s), got {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError("qubit indices must be non-negative")
        if self.kind is GateKind.CNOT and self.qubits[0] == self.qubits[1]:
            raise ValueError("CNOT control and target must differ")
        if not math.isfinite(self.theta):
            raise ValueError("gate angle must be finite")

    @classmethod
    def h(cls, q: int) -> GateOp:
        return cls(GateKind.H, (q,))

    @classmethod
    def rz(cls, q: int, theta: float) -> GateOp:
        return cls(GateKind.RZ, (q,), float(theta))

    @classmethod
    def cnot(cls, control: int, target: int) -> GateOp:
        return cls(GateKind.CNOT, (control, target))


_SQ2 = 1.0 / math.sqrt(2.0)
_H = np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=np.complex128)
# Rx(pi/2) = exp(-i pi X / 4)
_RX_HALF_PI = np.array([[_SQ2, -1j * _SQ2], [-1j * _SQ2, _SQ2]], dtype=np.complex128)
_RX_HALF_PI_DAGGER = _RX_HALF_PI.conj().T


def _single_qubit_matrix(gate: GateOp) -> npt.NDArray[np.complex128]:
    if gate.kind is GateKind.H:
        return _H
    if gate.kind is GateKind.RX_HALF_PI:
        return _RX_HALF_PI
    if gate.kind is GateKind.RX_HALF_PI_DAGGER:
        return _RX_HALF_PI_DAGGER
    half = 0.5 * gate.theta
    return np.array([[np.exp(-1j * half), 0], [0, np.exp(1j * half)]], dtype=np.complex128)


def apply_gate(state: StateVector, gate: GateOp) -> StateVector:
    n = state.n_qubits
    if any(q >= n for q in gate.qubits):
        raise RegisterSizeError(f"{gate.kind} on qubits {gate.qubits} outside {n}-qubit register")
    psi = state.amplitudes.reshape((2,) * n)
    if gate.kind is GateKind.CNOT:
        control, target = gate.qubits
        out = psi.copy()
        on = [slice(None)] * n
        on[control] = slice(1, 2)
        out[tuple(on)] = np.flip(psi[tuple(on)], axis=target)
    else:
        (q,) = gate.qubits
        out = np.moveaxis(np.tensordot(_single_qubit_matrix(gate), psi, axes=([1], [q])), 0, q)
    return StateVector.from_amplitudes(out.reshape(-1))


def pauli_exponential_gates(p: PauliString, theta: float) -> list[GateOp]:
    """Gate list realizing ``exp(-i theta P)`` for a non-identity string."""
    active = p.active_qubits
    if not active:
        raise ValueError("identity string has no gate decomposition; it is a global phase")
    basis: list[GateOp] = []
    mirror: list[GateOp] = []
    for q in active:
        s = p.symbols[q]
        if s == "X":
            basis.append(GateOp.h(q))
            mirror.append(GateOp.h(q))
        elif s == "Y":
            basis.append(GateOp(GateKind.RX_HALF_PI, (q,)))
            mirror.append(GateOp(GateKind.RX_HALF_PI_DAGGER, (q,)))
    ladder = [GateOp.cnot(a, b) for a, b in zip(active, active[1:])]
    return [
        *basis,
        *ladder,
        GateOp.rz(active[-1], 2.0 * theta),
        *reversed(ladder),
        *mirror,
    ]


def apply_pauli_exponential(
    state: StateVector,
    p: PauliString,
    theta: float,
    *,
    method: Literal["direct", "gates"] = "direct",
) -> StateVector:
    if p.n_qubits != state.n_qubits:
        raise RegisterSizeError(f"string {p} does not match {state.n_qubits}-qubit register")
    psi = state.amplitudes
    if p.is_identity:
        return StateVector.from_amplitudes(np.exp(-1j * theta) * psi)
    if method == "direct":
        source, coeff = p.action()
        out = math.cos(theta) * psi - 1j * math.sin(theta) * (coeff * psi[source])
        return StateVector.from_amplitudes(out)
    if method != "gates":
        raise ValueError(f"unknown method {method!r}")
    for gate in pauli_exponential_gates(p, theta):
        state = apply_gate(state, gate)
    return state
