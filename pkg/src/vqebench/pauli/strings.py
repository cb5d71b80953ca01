"""Symbolic Pauli strings and weighted terms.

Qubit 0 is the leftmost symbol of a string and the most significant bit of an
amplitude index, so ``"XIII"`` flips bit ``2**(n-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from vqebench.errors import RegisterSizeError

PAULI_ALPHABET = frozenset("IXYZ")

_SINGLE_QUBIT: dict[str, npt.NDArray[np.complex128]] = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

# single-qubit products: (a, b) -> (phase, a*b)
_PRODUCT: dict[tuple[str, str], tuple[complex, str]] = {
    ("I", "I"): (1, "I"),
    ("I", "X"): (1, "X"),
    ("I", "Y"): (1, "Y"),
    ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"),
    ("Y", "I"): (1, "Y"),
    ("Z", "I"): (1, "Z"),
    ("X", "X"): (1, "I"),
    ("Y", "Y"): (1, "I"),
    ("Z", "Z"): (1, "I"),
    ("X", "Y"): (1j, "Z"),
    ("Y", "X"): (-1j, "Z"),
    ("Y", "Z"): (1j, "X"),
    ("Z", "Y"): (-1j, "X"),
    ("Z", "X"): (1j, "Y"),
    ("X", "Z"): (-1j, "Y"),
}


@dataclass(frozen=True, slots=True)
class PauliString:
    symbols: str

    def __post_init__(self) -> None:
        if not self.symbols:
            raise RegisterSizeError("Pauli string must act on at least one qubit")
        bad = set(self.symbols) - PAULI_ALPHABET
        if bad:
            raise ValueError(f"invalid Pauli symbols {sorted(bad)} in {self.symbols!r}")

    def __str__(self) -> str:
        return self.symbols

    @property
    def n_qubits(self) -> int:
        return len(self.symbols)

    @property
    def is_identity(self) -> bool:
        return set(self.symbols) == {"I"}

    @property
    def active_qubits(self) -> tuple[int, ...]:
        return tuple(q for q, s in enumerate(self.symbols) if s != "I")

    @property
    def y_count(self) -> int:
        return self.symbols.count("Y")

    def commutes_with(self, other: PauliString) -> bool:
        _require_same_size(self, other)
        anti = sum(1 for a, b in zip(self.symbols, other.symbols) if "I" not in (a, b) and a != b)
        return anti % 2 == 0

    def multiply(self, other: PauliString) -> tuple[complex, PauliString]:
        """Return ``(phase, P)`` with ``self @ other == phase * P``."""
        _require_same_size(self, other)
        phase: complex = 1
        out = []
        for a, b in zip(self.symbols, other.symbols):
            p, s = _PRODUCT[(a, b)]
            phase *= p
            out.append(s)
        return phase, PauliString("".join(out))

    def matrix(self) -> npt.NDArray[np.complex128]:
        result = _SINGLE_QUBIT[self.symbols[0]]
        for s in self.symbols[1:]:
            result = np.kron(result, _SINGLE_QUBIT[s])
        return result

    def action(self) -> tuple[npt.NDArray[np.intp], npt.NDArray[np.complex128]]:
        """Gather form of the operator: ``(P @ psi) == coeff * psi[source]``."""
        return _action(self.symbols)


@dataclass(frozen=True, slots=True)
class PauliTerm:
    string: PauliString
    coefficient: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.coefficient):
            raise ValueError(f"coefficient of {self.string} must be finite")

    @classmethod
    def of(cls, symbols: str, coefficient: float) -> PauliTerm:
        return cls(PauliString(symbols), float(coefficient))


def _require_same_size(a: PauliString, b: PauliString) -> None:
    if a.n_qubits != b.n_qubits:
        raise RegisterSizeError(f"register mismatch: {a} has {a.n_qubits}, {b} has {b.n_qubits}")


@lru_cache(maxsize=1024)
def _action(symbols: str) -> tuple[npt.NDArray[np.intp], npt.NDArray[np.complex128]]:
    n = len(symbols)
    flip = 0
    sign_mask = 0
    for q, s in enumerate(symbols):
        bit = 1 << (n - 1 - q)
        if s in ("X", "Y"):
            flip |= bit
        if s in ("Y", "Z"):
            sign_mask |= bit
    index = np.arange(1 << n, dtype=np.intp)
    # P|b> = i^{nY} (-1)^{popcount(b & sign_mask)} |b ^ flip>
    parity = np.zeros(1 << n, dtype=np.int64)
    masked = index & sign_mask
    while np.any(masked):
        parity ^= masked & 1
        masked = masked >> 1
    phase = (1j ** symbols.count("Y")) * np.where(parity == 1, -1.0, 1.0)
    source = index ^ flip
    coeff = np.ascontiguousarray(phase[source], dtype=np.complex128)
    source.setflags(write=False)
    coeff.setflags(write=False)
    return source, coeff


def merge_terms(terms: list[PauliTerm] | tuple[PauliTerm, ...]) -> tuple[PauliTerm, ...]:
    """Sum coefficients of repeated strings, keeping first-seen order."""
    totals: dict[PauliString, float] = {}
    for term in terms:
        totals[term.string] = totals.get(term.string, 0.0) + term.coefficient
    return tuple(PauliTerm(s, c) for s, c in totals.items())
