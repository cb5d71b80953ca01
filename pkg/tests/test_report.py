import math
from pathlib import Path

import pytest

from vqebench.bench import BenchmarkRecord, Summary, emit_csv, log_error, summarize
from vqebench.bench.report import CHEMICAL_ACCURACY


def _record(
    energy: float,
    repetition: int = 0,
    *,
    r: float = 0.7,
    state: str = "ground",
    exact: float = -1.1,
    error: str = "",
) -> BenchmarkRecord:
    return BenchmarkRecord(
        r=r,
        state=state,
        optimizer="rcga",
        repetition=repetition,
        seed=42,
        energy=energy,
        exact=exact,
        log_error=log_error(energy - exact),
        evaluations=10,
        wall_seconds=None,
        converged=True,
        error=error,
    )


def test_log_error_floor() -> None:
    assert log_error(0.0) == -16.0
    assert log_error(1e-20) == -16.0
    assert log_error(1e-3) == pytest.approx(-3.0)
    assert log_error(-1e-2) == pytest.approx(-2.0)
    assert math.isnan(log_error(math.nan))


def test_summarize_worked_example() -> None:
    records = [_record(e, i) for i, e in enumerate([-1.0, -1.1, -1.2, -1.1, -1.1])]
    (summary,) = summarize(records)
    assert summary.n_samples == 5
    assert summary.mean_energy == pytest.approx(-1.1)
    assert summary.log_error == -16.0
    assert summary.deviations == pytest.approx((0.1, 0.0, -0.1, 0.0, 0.0))
    assert summary.std_energy == pytest.approx(math.sqrt(0.02 / 5))
    assert summary.within_chemical_accuracy


def test_summarize_identical_repetitions() -> None:
    (summary,) = summarize([_record(-1.0, i) for i in range(3)])
    assert summary.std_energy == 0.0
    assert summary.min_log_error == summary.max_log_error == pytest.approx(-1.0)
    assert not summary.within_chemical_accuracy


def test_summarize_groups_and_orders_cells() -> None:
    records = [
        _record(-0.5, 0, state="triplet", exact=-0.48),
        _record(-1.13, 0),
        _record(-1.10, 0, r=0.1),
        _record(math.nan, 1, error="ObjectiveError: boom"),
    ]
    summaries = summarize(records)
    cells = [(s.r, s.state) for s in summaries]
    assert cells == [(0.1, "ground"), (0.7, "ground"), (0.7, "triplet")]
    assert summaries[1].n_samples == 1


def test_summarize_warns_about_fully_failed_cells(caplog: pytest.LogCaptureFixture) -> None:
    records = [
        _record(-1.13, 0),
        _record(math.nan, 0, state="triplet", exact=-0.48, error="ObjectiveError: boom"),
        _record(math.nan, 1, state="triplet", exact=-0.48, error="skipped after ground failed"),
    ]
    with caplog.at_level("WARNING", logger="vqebench.bench.report"):
        summaries = summarize(records)
    assert [s.state for s in summaries] == ["ground"]
    assert "dropping r=0.70 triplet rcga: all 2 samples failed" in caplog.text


def test_summarize_needs_records() -> None:
    with pytest.raises(ValueError):
        summarize([])
    with pytest.raises(ValueError):
        summarize([_record(math.nan, error="failed")])


def test_emit_csv_line_counts(tmp_path: Path) -> None:
    empty = tmp_path / "empty.csv"
    emit_csv([], empty)
    assert len(empty.read_text().splitlines()) == 1

    one = tmp_path / "one.csv"
    emit_csv([_record(-1.1)], one)
    lines = one.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0].split(",")[:4] == ["r", "state", "optimizer", "repetition"]
    assert lines[1].split(",")[-3:] == ["", "true", ""]


def test_emit_csv_is_sorted_and_deterministic(tmp_path: Path) -> None:
    records = [_record(-1.0, 2), _record(-1.1, 0), _record(-0.4, 0, state="singlet", exact=-0.12)]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(records, a)
    emit_csv(list(reversed(records)), b)
    assert a.read_bytes() == b.read_bytes()
    rows = a.read_text().splitlines()[1:]
    assert [row.split(",")[3] for row in rows] == ["0", "2", "0"]


def test_emit_summary_csv(tmp_path: Path) -> None:
    summaries = summarize([_record(e, i) for i, e in enumerate([-1.0, -1.2])])
    path = tmp_path / "summary.csv"
    emit_csv(summaries, path)
    header, row = path.read_text().splitlines()
    assert header.split(",") == [
        "r",
        "state",
        "optimizer",
        "n_samples",
        "mean_energy",
        "std_energy",
        "exact",
        "log_error",
        "min_log_error",
        "max_log_error",
        "deviations",
    ]
    assert row.split(",")[-1].count(";") == 1


def test_emit_csv_rejects_mixed_rows(tmp_path: Path) -> None:
    summary: Summary = summarize([_record(-1.0)])[0]
    with pytest.raises(TypeError):
        emit_csv([_record(-1.0), summary], tmp_path / "mixed.csv")  # type: ignore[list-item]


def test_chemical_accuracy_constant() -> None:
    assert CHEMICAL_ACCURACY == pytest.approx(1.6e-3)
