"""Dense statevector with infinite-shot expectation values."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from vqebench.errors import NonHermitianError, RegisterSizeError
from vqebench.pauli import PauliTerm

NORM_TOLERANCE = 1e-10
MAX_QUBITS = 10

ComplexArray = npt.NDArray[np.complex128]


@dataclass(frozen=True, slots=True)
class StateVector:
    amplitudes: ComplexArray
    n_qubits: int

    def __post_init__(self) -> None:
        if not (1 <= self.n_qubits <= MAX_QUBITS):
            raise RegisterSizeError(f"register size must be in [1, {MAX_QUBITS}]")
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise RegisterSizeError(
                f"expected {1 << self.n_qubits} amplitudes, got shape {self.amplitudes.shape}"
            )
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"state is not normalized (norm^2 = {norm!r})")

    @classmethod
    def from_amplitudes(cls, amplitudes: npt.ArrayLike, *, normalize: bool = False) -> StateVector:
        amps = np.array(amplitudes, dtype=np.complex128)
        if normalize:
            amps = amps / np.linalg.norm(amps)
        dim = amps.shape[0]
        n = dim.bit_length() - 1
        if dim != 1 << n:
            raise RegisterSizeError(f"amplitude count {dim} is not a power of two")
        amps.setflags(write=False)
        return cls(amps, n)

    def probabilities(self) -> npt.NDArray[np.float64]:
        return np.abs(self.amplitudes) ** 2


def init_basis_state(bits: str, n_qubits: int | None = None) -> StateVector:
    """Computational basis state; ``bits[0]`` is the most significant bit."""
    if n_qubits is not None and len(bits) != n_qubits:
        raise RegisterSizeError(f"bitstring {bits!r} does not have length {n_qubits}")
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"invalid bitstring {bits!r}")
    amps = np.zeros(1 << len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector.from_amplitudes(amps)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>."""
    if a.n_qubits != b.n_qubits:
        raise RegisterSizeError("inner product of states on different registers")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def overlap(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2."""
    return abs(inner_product(a, b)) ** 2


def expectation(
    state: StateVector, terms: Sequence[PauliTerm], *, imag_tolerance: float = 1e-10
) -> float:
    psi = state.amplitudes
    total = 0j
    for term in terms:
        if term.string.n_qubits != state.n_qubits:
            raise RegisterSizeError(f"term {term.string} does not match {state.n_qubits} qubits")
        source, coeff = term.string.action()
        total += term.coefficient * np.vdot(psi, coeff * psi[source])
    if abs(total.imag) > imag_tolerance:
        raise NonHermitianError(f"expectation has imaginary part {total.imag:.3e}")
    return float(total.real)
