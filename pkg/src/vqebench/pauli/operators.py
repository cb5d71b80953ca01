"""Spin and particle-number operators in the 4-qubit Bravyi-Kitaev encoding.

Spin orbitals are ordered (g up, g down, u up, u down). The sums below are
regenerated by ``scripts/derive_fermion_operators.py``.
"""

from __future__ import annotations

from .strings import PauliTerm

_S_SQUARED = (
    ("IIII", 0.75),
    ("IZII", -0.375),
    ("IZIZ", -0.375),
    ("ZIZI", 0.125),
    ("ZZZZ", -0.125),
    ("ZZZI", -0.125),
    ("ZIZZ", 0.125),
    ("XIXI", 0.125),
    ("XZXI", -0.125),
    ("YIYI", 0.125),
    ("YZYZ", -0.125),
    ("YZYI", -0.125),
    ("YIYZ", 0.125),
    ("XZXZ", -0.125),
    ("XIXZ", 0.125),
)

_S_Z = (
    ("ZIII", -0.25),
    ("ZZII", 0.25),
    ("IIZI", -0.25),
    ("IZZZ", 0.25),
)

_NUMBER = (
    ("IIII", 2.0),
    ("ZIII", -0.5),
    ("ZZII", -0.5),
    ("IIZI", -0.5),
    ("IZZZ", -0.5),
)


def spin_operators() -> tuple[tuple[PauliTerm, ...], tuple[PauliTerm, ...]]:
    """Return ``(S^2, S_z)`` as Pauli sums."""
    return (
        tuple(PauliTerm.of(s, c) for s, c in _S_SQUARED),
        tuple(PauliTerm.of(s, c) for s, c in _S_Z),
    )


def number_operator() -> tuple[PauliTerm, ...]:
    return tuple(PauliTerm.of(s, c) for s, c in _NUMBER)
