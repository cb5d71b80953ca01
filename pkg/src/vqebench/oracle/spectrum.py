"""Full-CI reference spectrum, level classification and reference energies."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
import numpy.typing as npt

from vqebench.pauli import (
    CoefficientTable,
    HamiltonianSpec,
    PauliTerm,
    dense_matrix,
    number_operator,
    spin_operators,
)
from vqebench.sim import StateVector, expectation

from .jacobi import jacobi_eigh

logger = logging.getLogger(__name__)

Label = Literal["ground", "triplet", "singlet", "doubly", "doublet_local_min", "other"]

SPIN_TOLERANCE = 1e-6
DEGENERACY_TOLERANCE = 1e-9
BLOCK_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class SpectrumEntry:
    energy: float
    eigenvector: StateVector
    n_particles: float
    s_squared: float
    s_z: float
    label: Label = "other"


@dataclass(frozen=True, slots=True)
class ReferenceLevels:
    ground: float
    triplet: float
    singlet: float
    doubly: float
    doublet: float | None = None

    def level(self, name: str) -> float:
        value = getattr(self, name)
        if not isinstance(value, float):
            raise KeyError(f"no reference level {name!r}")
        return value


def _sectors(n_qubits: int) -> npt.NDArray[np.int64] | None:
    """Label basis states by (N, Sz) when both operators are diagonal."""
    _, sz_terms = spin_operators()
    n_terms = number_operator()
    if any(t.string.n_qubits != n_qubits for t in (*n_terms, *sz_terms)):
        return None
    n_mat = dense_matrix(n_terms)
    sz_mat = dense_matrix(sz_terms)
    if np.count_nonzero(n_mat - np.diag(np.diag(n_mat))) or np.count_nonzero(
        sz_mat - np.diag(np.diag(sz_mat))
    ):
        return None
    n_diag = np.rint(np.diag(n_mat).real).astype(np.int64)
    sz_diag = np.rint(2.0 * np.diag(sz_mat).real).astype(np.int64)
    return n_diag * 100 + sz_diag


def _block_eigh(
    h: npt.NDArray[np.complex128],
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.complex128]]:
    dim = h.shape[0]
    sectors = _sectors(dim.bit_length() - 1)
    if sectors is not None:
        mask = sectors[:, None] != sectors[None, :]
        if np.max(np.abs(h[mask]), initial=0.0) <= BLOCK_TOLERANCE:
            values = np.empty(dim)
            vectors = np.zeros((dim, dim), dtype=np.complex128)
            col = 0
            for sector in np.unique(sectors):
                idx = np.flatnonzero(sectors == sector)
                w, v = jacobi_eigh(h[np.ix_(idx, idx)])
                values[col : col + idx.size] = w
                vectors[idx, col : col + idx.size] = v
                col += idx.size
            order = np.argsort(values, kind="stable")
            return values[order], vectors[:, order]
        logger.info("Hamiltonian mixes (N, Sz) sectors; diagonalizing the full matrix")
    return jacobi_eigh(h)


def full_spectrum(spec: HamiltonianSpec | Sequence[PauliTerm]) -> list[SpectrumEntry]:
    terms = spec.terms if isinstance(spec, HamiltonianSpec) else tuple(spec)
    h = dense_matrix(terms)
    values, vectors = _block_eigh(h)
    s2_terms, sz_terms = spin_operators()
    n_terms = number_operator()
    n_qubits = terms[0].string.n_qubits
    entries: list[SpectrumEntry] = []
    for k in range(values.shape[0]):
        vec = StateVector.from_amplitudes(vectors[:, k], normalize=True)
        if n_qubits == 4:
            n_exp = expectation(vec, n_terms)
            s2 = expectation(vec, s2_terms)
            sz = expectation(vec, sz_terms)
        else:
            n_exp = s2 = sz = float("nan")
        entries.append(SpectrumEntry(float(values[k]), vec, n_exp, s2, sz))
    return entries


def _spin_class(s2: float) -> Literal["singlet", "triplet"] | None:
    if abs(s2) <= SPIN_TOLERANCE:
        return "singlet"
    if abs(s2 - 2.0) <= SPIN_TOLERANCE:
        return "triplet"
    return None


def classify(
    entries: Sequence[SpectrumEntry],
    spin_ops: tuple[Sequence[PauliTerm], Sequence[PauliTerm]] | None = None,
) -> list[SpectrumEntry]:
    """Label entries; ties within 1e-9 in energy are ordered by <S^2> then <Sz>."""
    s2_terms, sz_terms = spin_ops if spin_ops is not None else spin_operators()
    n_terms = number_operator()
    refreshed = [
        replace(
            e,
            n_particles=expectation(e.eigenvector, n_terms),
            s_squared=expectation(e.eigenvector, s2_terms),
            s_z=expectation(e.eigenvector, sz_terms),
        )
        for e in sorted(entries, key=lambda e: e.energy)
    ]
    ordered: list[SpectrumEntry] = []
    group: list[SpectrumEntry] = []
    for e in refreshed:
        if group and e.energy - group[0].energy > DEGENERACY_TOLERANCE:
            ordered.extend(sorted(group, key=lambda g: (g.s_squared, g.s_z)))
            group = []
        group.append(e)
    ordered.extend(sorted(group, key=lambda g: (g.s_squared, g.s_z)))

    singlet_labels: list[Label] = ["ground", "singlet", "doubly"]
    out: list[SpectrumEntry] = []
    for e in ordered:
        n = round(e.n_particles)
        label: Label = "other"
        if abs(e.n_particles - n) > SPIN_TOLERANCE:
            logger.warning("non-integer particle number %.3e at E=%.10f", e.n_particles, e.energy)
        elif n % 2 == 1:
            label = "doublet_local_min"
        elif n == 2:
            kind = _spin_class(e.s_squared)
            if kind == "triplet":
                label = "triplet"
            elif kind == "singlet" and singlet_labels:
                label = singlet_labels.pop(0)
            elif kind is None:
                logger.warning(
                    "ambiguous spin at E=%.10f: <S^2>=%.6f <Sz>=%.6f",
                    e.energy,
                    e.s_squared,
                    e.s_z,
                )
        out.append(replace(e, label=label))
    return out


def reference_levels(spec: HamiltonianSpec) -> ReferenceLevels:
    entries = classify(full_spectrum(spec))
    found: dict[str, float] = {}
    for e in entries:
        if e.label != "other" and e.label not in found:
            found[e.label] = e.energy
    missing = [k for k in ("ground", "triplet", "singlet", "doubly") if k not in found]
    if missing:
        raise ValueError(f"r={spec.bond_length}: could not classify levels {missing}")
    return ReferenceLevels(
        ground=found["ground"],
        triplet=found["triplet"],
        singlet=found["singlet"],
        doubly=found["doubly"],
        doublet=found.get("doublet_local_min"),
    )


def reference_energies(table: CoefficientTable) -> dict[float, ReferenceLevels]:
    return {spec.bond_length: reference_levels(spec) for spec in table.specs}
