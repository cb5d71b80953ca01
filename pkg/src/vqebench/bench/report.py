"""Per-cell statistics and CSV emission."""

from __future__ import annotations

import csv
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, fields
from pathlib import Path

from vqebench.objective import TargetState

from .scan import BenchmarkRecord, log_error

logger = logging.getLogger(__name__)

CHEMICAL_ACCURACY = 1.6e-3


@dataclass(frozen=True, slots=True)
class Summary:
    r: float
    state: str
    optimizer: str
    n_samples: int
    mean_energy: float
    std_energy: float
    exact: float
    log_error: float
    min_log_error: float
    max_log_error: float
    deviations: tuple[float, ...]

    @property
    def within_chemical_accuracy(self) -> bool:
        return abs(self.mean_energy - self.exact) < CHEMICAL_ACCURACY


def summarize(records: Sequence[BenchmarkRecord]) -> list[Summary]:
    """Group by (r, state, optimizer); failed records are excluded."""
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[tuple[float, str, str], list[BenchmarkRecord]] = {}
    failed: dict[tuple[float, str, str], int] = {}
    for rec in records:
        key = (rec.r, rec.state, rec.optimizer)
        if rec.failed:
            failed[key] = failed.get(key, 0) + 1
            continue
        groups.setdefault(key, []).append(rec)
    for r, state, optimizer in sorted(set(failed) - set(groups)):
        logger.warning(
            "dropping r=%.2f %s %s: all %d samples failed",
            r,
            state,
            optimizer,
            failed[(r, state, optimizer)],
        )
    if not groups:
        raise ValueError("every record failed; nothing to summarize")

    out: list[Summary] = []
    for (r, state, optimizer), cell in groups.items():
        cell = sorted(cell, key=lambda rec: rec.repetition)
        energies = [rec.energy for rec in cell]
        mean = math.fsum(energies) / len(energies)
        deviations = tuple(e - mean for e in energies)
        std = math.sqrt(math.fsum(d * d for d in deviations) / len(deviations))
        sample_errors = [rec.log_error for rec in cell]
        out.append(
            Summary(
                r=r,
                state=state,
                optimizer=optimizer,
                n_samples=len(cell),
                mean_energy=mean,
                std_energy=std,
                exact=cell[0].exact,
                log_error=log_error(mean - cell[0].exact),
                min_log_error=min(sample_errors),
                max_log_error=max(sample_errors),
                deviations=deviations,
            )
        )
    return sorted(out, key=lambda s: (s.r, TargetState(s.state).level, s.optimizer))


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, tuple):
        return ";".join(_fmt(v) for v in value)
    return str(value)


def emit_csv(
    rows: Sequence[BenchmarkRecord] | Sequence[Summary],
    path: Path,
    *,
    kind: type[BenchmarkRecord] | type[Summary] | None = None,
) -> None:
    """Write rows with a header in dataclass field order and a deterministic row order."""
    row_type: type[BenchmarkRecord] | type[Summary]
    if kind is not None:
        row_type = kind
    elif rows and isinstance(rows[0], Summary):
        row_type = Summary
    else:
        row_type = BenchmarkRecord
    names = [f.name for f in fields(row_type)]

    if row_type is BenchmarkRecord:
        ordered: list[object] = sorted(
            (r for r in rows if isinstance(r, BenchmarkRecord)),
            key=lambda r: (r.r, TargetState(r.state).level, r.optimizer, r.repetition),
        )
    else:
        ordered = sorted(
            (r for r in rows if isinstance(r, Summary)),
            key=lambda s: (s.r, TargetState(s.state).level, s.optimizer),
        )
    if len(ordered) != len(rows):
        raise TypeError("rows mix record and summary types")

    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(names)
        for row in ordered:
            w.writerow([_fmt(getattr(row, name)) for name in names])
