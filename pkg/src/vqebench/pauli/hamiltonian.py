"""H2 Bravyi-Kitaev Hamiltonian template, coefficient ingestion, dense realization."""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import cast

import numpy as np
import numpy.typing as npt

from vqebench.errors import CoefficientFileError, RegisterSizeError

from .strings import PauliString, PauliTerm, merge_terms

logger = logging.getLogger(__name__)

H2_REGISTER_SIZE = 4
DEFAULT_MAX_QUBITS = 10
BOND_LENGTH_TOLERANCE = 1e-9

_H2_BK_STRINGS = (
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


def h2_bk_template() -> tuple[PauliString, ...]:
    """The 15 distinct strings of the 4-qubit BK H2 Hamiltonian, in canonical order."""
    return tuple(PauliString(s) for s in _H2_BK_STRINGS)


@dataclass(frozen=True, slots=True)
class HamiltonianSpec:
    bond_length: float
    terms: tuple[PauliTerm, ...]

    def __post_init__(self) -> None:
        if not (self.bond_length > 0.0) or not math.isfinite(self.bond_length):
            raise ValueError("bond_length must be finite and positive")
        sizes = {t.string.n_qubits for t in self.terms}
        if len(sizes) > 1:
            raise RegisterSizeError(f"terms span several register sizes: {sorted(sizes)}")
        if len({t.string for t in self.terms}) != len(self.terms):
            raise ValueError("duplicate Pauli strings; merge terms before building a spec")

    @property
    def n_qubits(self) -> int:
        if not self.terms:
            return H2_REGISTER_SIZE
        return self.terms[0].string.n_qubits

    def coefficient(self, symbols: str) -> float:
        for t in self.terms:
            if t.string.symbols == symbols:
                return t.coefficient
        return 0.0


@dataclass(frozen=True, slots=True)
class CoefficientTable:
    specs: tuple[HamiltonianSpec, ...]

    def __post_init__(self) -> None:
        rs = [s.bond_length for s in self.specs]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise ValueError("bond lengths must be strictly increasing")

    def __len__(self) -> int:
        return len(self.specs)

    @property
    def bond_lengths(self) -> tuple[float, ...]:
        return tuple(s.bond_length for s in self.specs)

    def spec_at(self, r: float) -> HamiltonianSpec:
        for spec in self.specs:
            if abs(spec.bond_length - r) <= BOND_LENGTH_TOLERANCE:
                return spec
        raise KeyError(f"bond length {r} not in coefficient table")

    def covers(self, grid: Iterable[float]) -> bool:
        known = self.bond_lengths
        return all(any(abs(k - r) <= BOND_LENGTH_TOLERANCE for k in known) for r in grid)


def bundled_coefficients_path() -> Path:
    return Path(str(resources.files("vqebench") / "data" / "h2_sto3g_bk.json"))


def load_coefficients(
    path: Path | str, *, register_size: int = H2_REGISTER_SIZE
) -> CoefficientTable:
    """Load a JSON coefficient file: ``[{"r": float, "terms": {"ZIII": float, ...}}, ...]``.

    Records sharing a bond length and strings repeated within a record are summed.
    """
    p = Path(path)
    if not p.exists():
        raise CoefficientFileError(f"coefficient file not found: {p}")
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CoefficientFileError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(raw, list):
        raise CoefficientFileError("coefficient file must hold a JSON array of records")

    by_r: dict[float, list[PauliTerm]] = {}
    for i, record in enumerate(cast(list[object], raw)):
        r, terms = _parse_record(record, i, register_size)
        key = next((k for k in by_r if abs(k - r) <= BOND_LENGTH_TOLERANCE), r)
        if key in by_r:
            logger.info("merging duplicate record for r=%s (record %d)", r, i)
        by_r.setdefault(key, []).extend(terms)

    specs = tuple(HamiltonianSpec(bond_length=r, terms=merge_terms(by_r[r])) for r in sorted(by_r))
    logger.debug("loaded %d bond lengths from %s", len(specs), p)
    return CoefficientTable(specs=specs)


def _parse_record(record: object, index: int, register_size: int) -> tuple[float, list[PauliTerm]]:
    if not isinstance(record, dict):
        raise CoefficientFileError("record must be an object", record=index)
    r_obj = record.get("r")
    if isinstance(r_obj, bool) or not isinstance(r_obj, (int, float)):
        raise CoefficientFileError("missing numeric 'r'", record=index)
    r = float(r_obj)
    if not (r > 0.0) or not math.isfinite(r):
        raise CoefficientFileError(
            f"bond length must be finite and positive, got {r}", record=index
        )
    terms_obj = record.get("terms")
    if isinstance(terms_obj, list):
        # list-of-objects form: [{"IIII": -0.3}, {"ZIII": 0.1}]
        pairs: list[tuple[object, object]] = []
        for item in terms_obj:
            if not isinstance(item, dict):
                raise CoefficientFileError("terms list entries must be objects", record=index)
            pairs.extend(item.items())
    elif isinstance(terms_obj, dict):
        pairs = list(terms_obj.items())
    else:
        raise CoefficientFileError("missing 'terms' object", record=index)
    if not pairs:
        raise CoefficientFileError(f"no terms for r={r}", record=index)

    terms: list[PauliTerm] = []
    for symbols, value in pairs:
        if not isinstance(symbols, str) or len(symbols) != register_size:
            raise CoefficientFileError(
                f"Pauli string {symbols!r} must have length {register_size}", record=index
            )
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise CoefficientFileError(f"coefficient of {symbols} is not a number", record=index)
        if not math.isfinite(float(value)):
            raise CoefficientFileError(f"coefficient of {symbols} is not finite", record=index)
        try:
            terms.append(PauliTerm(PauliString(symbols), float(value)))
        except ValueError as exc:
            raise CoefficientFileError(str(exc), record=index) from exc
    return r, terms


def dense_matrix(
    terms: HamiltonianSpec | Sequence[PauliTerm], *, max_qubits: int = DEFAULT_MAX_QUBITS
) -> npt.NDArray[np.complex128]:
    """Realize a Pauli sum as a dense ``2^n x 2^n`` matrix."""
    items = terms.terms if isinstance(terms, HamiltonianSpec) else tuple(terms)
    if not items:
        raise ValueError("cannot realize an empty Pauli sum")
    n = items[0].string.n_qubits
    if n > max_qubits:
        raise RegisterSizeError(f"register of {n} qubits exceeds cap of {max_qubits}")
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=np.complex128)
    cols = np.arange(dim)
    for term in items:
        if term.string.n_qubits != n:
            raise RegisterSizeError("terms span several register sizes")
        source, coeff = term.string.action()
        # (P)[j, source[j]] = coeff[j]
        out[cols, source] += term.coefficient * coeff
    return out
