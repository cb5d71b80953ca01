#!/usr/bin/env python3
"""Print the BK Pauli sums for S^2, Sz, N and the UCCSD excitation generators.

Fermionic operators are built as dense Jordan-Wigner matrices over the four
spin orbitals (g up, g down, u up, u down), moved to the Bravyi-Kitaev basis by
the occupation -> BK bit permutation, and decomposed by trace projection.
"""

from __future__ import annotations

import argparse
import itertools

import numpy as np

from vqebench.pauli import PauliString

N_MODES = 4
DIM = 1 << N_MODES
TOLERANCE = 1e-12

_LOWER = np.array([[0, 1], [0, 0]], dtype=np.complex128)
_Z = np.diag([1.0, -1.0]).astype(np.complex128)
_I = np.eye(2, dtype=np.complex128)


def annihilation(mode: int) -> np.ndarray:
    """a_j with the Z string on modes 0..j-1; mode 0 is the most significant bit."""
    out = np.eye(1, dtype=np.complex128)
    for k in range(N_MODES):
        factor = _Z if k < mode else _LOWER if k == mode else _I
        out = np.kron(out, factor)
    return out


def bk_bits(occupation: tuple[int, ...]) -> tuple[int, ...]:
    n0, n1, n2, n3 = occupation
    return (n0, n0 ^ n1, n2, n0 ^ n1 ^ n2 ^ n3)


def bk_permutation() -> np.ndarray:
    u = np.zeros((DIM, DIM))
    for occupation in itertools.product((0, 1), repeat=N_MODES):
        src = int("".join(map(str, occupation)), 2)
        dst = int("".join(map(str, bk_bits(occupation))), 2)
        u[dst, src] = 1.0
    return u


def pauli_decompose(matrix: np.ndarray) -> dict[str, complex]:
    out: dict[str, complex] = {}
    for symbols in itertools.product("IXYZ", repeat=N_MODES):
        s = "".join(symbols)
        c = complex(np.trace(PauliString(s).matrix().conj().T @ matrix) / DIM)
        if abs(c) > TOLERANCE:
            out[s] = c
    return out


def operators() -> dict[str, np.ndarray]:
    a = [annihilation(j) for j in range(N_MODES)]
    ad = [op.conj().T for op in a]
    n = [ad[j] @ a[j] for j in range(N_MODES)]
    s_z = 0.5 * (n[0] - n[1] + n[2] - n[3])
    s_plus = ad[0] @ a[1] + ad[2] @ a[3]
    s_squared = s_plus.conj().T @ s_plus + s_z + s_z @ s_z
    ops = {"S^2": s_squared, "Sz": s_z, "N": sum(n, np.zeros((DIM, DIM), dtype=np.complex128))}
    singles = (("0->2", 0, 2), ("1->3", 1, 3), ("0->3", 0, 3), ("1->2", 1, 2))
    for name, occ, virt in singles:
        t = ad[virt] @ a[occ]
        # T - T^dagger = i * (Hermitian sum); report the Hermitian part
        ops[name] = -1j * (t - t.conj().T)
    double = ad[3] @ ad[2] @ a[1] @ a[0]
    ops["01->23"] = -1j * (double - double.conj().T)
    return ops


def build_parser() -> argparse.ArgumentParser:
    return argparse.ArgumentParser(description="Derive BK Pauli sums for the H2 register.")


def main(argv: list[str] | None = None) -> int:
    build_parser().parse_args(argv)
    u = bk_permutation()
    for name, matrix in operators().items():
        terms = pauli_decompose(u @ matrix @ u.T)
        print(f"{name}:")
        for symbols, c in terms.items():
            if abs(c.imag) > TOLERANCE:
                print(f"  {symbols}: {c.real:+.6f}{c.imag:+.6f}j  (non-Hermitian)")
            else:
                print(f"  {symbols}: {c.real:+.6f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
