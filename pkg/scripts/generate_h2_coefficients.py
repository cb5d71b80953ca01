#!/usr/bin/env python3
"""Regenerate the bundled H2 STO-3G Bravyi-Kitaev coefficient table.

Integrals over the two 1s contracted Gaussians are evaluated in closed form and
projected onto the symmetric (g) and antisymmetric (u) molecular orbitals. The
Pauli coefficients below follow from the BK transform of the second-quantized
Hamiltonian in the (g up, g down, u up, u down) ordering.
"""

from __future__ import annotations

import argparse
import json
import math
from pathlib import Path

import numpy as np
from scipy.special import erf

BOHR_ANGSTROM = 0.52917721092

# STO-3G hydrogen 1s (zeta = 1.24)
EXPONENTS = np.array([3.42525091, 0.62391373, 0.16885540])
CONTRACTION = np.array([0.15432897, 0.53532814, 0.44463454])
NORMALIZED = CONTRACTION * (2.0 * EXPONENTS / math.pi) ** 0.75

TEMPLATE = (
    "IIII",
    "ZIII",
    "IZII",
    "IIZI",
    "ZZII",
    "ZIZI",
    "IZIZ",
    "XZXI",
    "YZYI",
    "ZZZI",
    "ZIZZ",
    "IZZZ",
    "XZXZ",
    "YZYZ",
    "ZZZZ",
)


def boys0(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    small = t < 1e-12
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 - t / 3.0, 0.5 * np.sqrt(math.pi / safe) * erf(np.sqrt(safe)))


def _pair(za: float, zb: float) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per primitive pair: exponent sum, product centre, prefactor, coefficient product."""
    a = EXPONENTS[:, None]
    b = EXPONENTS[None, :]
    p = a + b
    centre = (a * za + b * zb) / p
    k = np.exp(-a * b / p * (za - zb) ** 2)
    coeff = NORMALIZED[:, None] * NORMALIZED[None, :]
    return p, centre, k, coeff


def atomic_integrals(
    bond_bohr: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Overlap, core Hamiltonian and (mn|ls) electron repulsion over the two 1s functions."""
    centres = (0.0, bond_bohr)
    s = np.zeros((2, 2))
    h = np.zeros((2, 2))
    for m in range(2):
        for n in range(2):
            p, centre, k, coeff = _pair(centres[m], centres[n])
            mu = EXPONENTS[:, None] * EXPONENTS[None, :] / p
            rab2 = (centres[m] - centres[n]) ** 2
            overlap = (math.pi / p) ** 1.5 * k
            s[m, n] = np.sum(coeff * overlap)
            kinetic = np.sum(coeff * mu * (3.0 - 2.0 * mu * rab2) * overlap)
            attraction = sum(
                np.sum(coeff * (-2.0 * math.pi / p) * k * boys0(p * (centre - zc) ** 2))
                for zc in centres
            )
            h[m, n] = kinetic + attraction

    eri = np.zeros((2, 2, 2, 2))
    for m, n, u, v in np.ndindex(2, 2, 2, 2):
        p, cp, kp, coeff_p = _pair(centres[m], centres[n])
        q, cq, kq, coeff_q = _pair(centres[u], centres[v])
        p4 = p[:, :, None, None]
        q4 = q[None, None, :, :]
        rho = p4 * q4 / (p4 + q4)
        dist2 = (cp[:, :, None, None] - cq[None, None, :, :]) ** 2
        term = (
            coeff_p[:, :, None, None]
            * coeff_q[None, None, :, :]
            * 2.0
            * math.pi**2.5
            / (p4 * q4 * np.sqrt(p4 + q4))
            * kp[:, :, None, None]
            * kq[None, None, :, :]
            * boys0(rho * dist2)
        )
        eri[m, n, u, v] = np.sum(term)
    return s, h, eri


def molecular_terms(bond_angstrom: float) -> dict[str, float]:
    bond = bond_angstrom / BOHR_ANGSTROM
    s, h, eri = atomic_integrals(bond)
    s12 = s[0, 1]
    a, b, c, d = eri[0, 0, 0, 0], eri[0, 0, 1, 1], eri[0, 1, 0, 1], eri[0, 0, 0, 1]
    cg2 = 1.0 / (2.0 * (1.0 + s12))
    cu2 = 1.0 / (2.0 * (1.0 - s12))
    hgg = (h[0, 0] + h[0, 1]) / (1.0 + s12)
    huu = (h[0, 0] - h[0, 1]) / (1.0 - s12)
    jgg = cg2 * cg2 * (2 * a + 2 * b + 4 * c + 8 * d)
    juu = cu2 * cu2 * (2 * a + 2 * b + 4 * c - 8 * d)
    jgu = cg2 * cu2 * (2 * a + 2 * b - 4 * c)
    kgu = cg2 * cu2 * (2 * a - 2 * b)
    vnn = 1.0 / bond

    z0 = -hgg / 2 - (jgg + 2 * jgu - kgu) / 4
    z2 = -huu / 2 - (juu + 2 * jgu - kgu) / 4
    coeffs = {
        "IIII": vnn + hgg + huu + (jgg + juu + 4 * jgu - 2 * kgu) / 4,
        "ZIII": z0,
        "IZII": jgg / 4,
        "IIZI": z2,
        "ZZII": z0,
        "ZIZI": (jgu - kgu) / 4,
        "IZIZ": juu / 4,
        "XZXI": kgu / 4,
        "YZYI": kgu / 4,
        "ZZZI": jgu / 4,
        "ZIZZ": (jgu - kgu) / 4,
        "IZZZ": z2,
        "XZXZ": kgu / 4,
        "YZYZ": kgu / 4,
        "ZZZZ": jgu / 4,
    }
    return {name: coeffs[name] for name in TEMPLATE}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(description="Write H2 STO-3G BK Pauli coefficients as JSON.")
    p.add_argument("--r-min", type=float, default=0.1, help="First bond length [Angstrom].")
    p.add_argument("--r-max", type=float, default=2.5, help="Last bond length [Angstrom].")
    p.add_argument("--r-step", type=float, default=0.1, help="Grid step [Angstrom].")
    p.add_argument(
        "--output",
        type=Path,
        default=Path("src/vqebench/data/h2_sto3g_bk.json"),
        help="Output JSON path.",
    )
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    count = int(math.floor((args.r_max - args.r_min) / args.r_step + 1e-9)) + 1
    grid = [round(args.r_min + k * args.r_step, 10) for k in range(count)]
    rows = []
    for r in grid:
        terms = ", ".join(f'"{k}": {v:.12f}' for k, v in molecular_terms(r).items())
        rows.append(f'  {{"r": {r}, "terms": {{{terms}}}}}')
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text("[\n" + ",\n".join(rows) + "\n]\n", encoding="utf-8")
    json.loads(args.output.read_text(encoding="utf-8"))
    print(f"wrote {len(rows)} bond lengths to {args.output}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
