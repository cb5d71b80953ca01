"""UCCSD excitation generators for H2 (2 electrons, 4 spin orbitals) under BK.

Each excitation a -> b of ``T - T^dagger`` becomes ``i * sum_j c_j P_j`` over
mutually commuting strings. The ansatz keeps one string per excitation: the one
mapping |1000> onto the excited determinant (for the double, the one acting on
every qubit).
"""

from __future__ import annotations

from dataclasses import dataclass

from vqebench.pauli import PauliString, PauliTerm


@dataclass(frozen=True, slots=True)
class Excitation:
    name: str
    occupied: tuple[int, ...]
    virtual: tuple[int, ...]
    terms: tuple[PauliTerm, ...]
    representative: PauliString


def _excitation(
    name: str,
    occupied: tuple[int, ...],
    virtual: tuple[int, ...],
    terms: dict[str, float],
    rep: str,
) -> Excitation:
    return Excitation(
        name=name,
        occupied=occupied,
        virtual=virtual,
        terms=tuple(PauliTerm.of(s, c) for s, c in terms.items()),
        representative=PauliString(rep),
    )


_EXCITATIONS = (
    _excitation("0->2", (0,), (2,), {"XYXI": 0.5, "YYYI": 0.5}, "XYXI"),
    _excitation("1->3", (1,), (3,), {"ZYZI": 0.5, "IYIZ": -0.5}, "ZYZI"),
    _excitation("0->3", (0,), (3,), {"XYZI": 0.5, "YXIZ": -0.5}, "XYZI"),
    _excitation("1->2", (1,), (2,), {"ZYXI": 0.5, "IXYI": -0.5}, "ZYXI"),
    _excitation(
        "01->23",
        (0, 1),
        (2, 3),
        {
            "YIXI": 0.125,
            "YZXI": 0.125,
            "XIYI": -0.125,
            "XZYZ": -0.125,
            "XZYI": -0.125,
            "XIYZ": -0.125,
            "YZXZ": 0.125,
            "YIXZ": 0.125,
        },
        "YZXZ",
    ),
)


def uccsd_excitations() -> tuple[Excitation, ...]:
    return _EXCITATIONS


def build_uccsd_generators() -> tuple[PauliString, ...]:
    """One Pauli string per excitation, singles first, double last."""
    return tuple(e.representative for e in _EXCITATIONS)
