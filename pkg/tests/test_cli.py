import json
from pathlib import Path

import pytest

from vqebench.bench.cli import EXIT_CONFIG, EXIT_OK, build_parser, main, scan_config_from_args
from vqebench.bench.config import OptimizerId, ScanMode
from vqebench.objective import TargetState


def test_parser_maps_flags_onto_scan_config(tmp_path: Path) -> None:
    args = build_parser().parse_args(
        [
            "scan",
            "--optimizer",
            "nelder-mead",
            "--states",
            "ground,singlet",
            "--mode",
            "all",
            "--reps",
            "3",
            "--seed",
            "18446744073709551615",
            "--init-dist",
            "poisson",
            "--budget",
            "7",
            "--out-csv",
            str(tmp_path / "out.csv"),
        ]
    )
    cfg = scan_config_from_args(args)
    assert cfg.optimizer is OptimizerId.NELDER_MEAD
    assert cfg.states == (TargetState.GROUND, TargetState.SINGLET)
    assert cfg.mode is ScanMode.ALL
    assert cfg.repetitions == 3
    assert cfg.seed == 2**64 - 1
    assert cfg.iteration_budget() == 7


def test_config_file_is_overridden_by_flags(tmp_path: Path) -> None:
    config = tmp_path / "cfg.json"
    config.write_text(
        json.dumps({"scan": {"repetitions": 4, "optimizer": "bfgs"}, "objective": {"a": 2.0}}),
        encoding="utf-8",
    )
    args = build_parser().parse_args(
        ["scan", "--config", str(config), "--reps", "1", "--out-csv", str(tmp_path / "o.csv")]
    )
    cfg = scan_config_from_args(args)
    assert cfg.repetitions == 1
    assert cfg.optimizer is OptimizerId.BFGS
    assert cfg.objective.a == 2.0


def test_scan_writes_records_summary_and_plot(tmp_path: Path) -> None:
    out = tmp_path / "records.csv"
    summary = tmp_path / "summary.csv"
    svg = tmp_path / "plot.svg"
    code = main(
        [
            "scan",
            "--optimizer",
            "cg",
            "--budget",
            "0",
            "--states",
            "ground",
            "--r-min",
            "0.7",
            "--r-max",
            "0.8",
            "--reps",
            "2",
            "--out-csv",
            str(out),
            "--out-summary",
            str(summary),
            "--out-svg",
            str(svg),
            "--plot",
            "log-errors",
        ]
    )
    assert code == EXIT_OK
    assert len(out.read_text().splitlines()) == 1 + 2 * 2
    assert len(summary.read_text().splitlines()) == 1 + 2
    assert 'id="chemical-accuracy"' in svg.read_text()


def test_exact_writes_classified_spectrum(tmp_path: Path) -> None:
    out = tmp_path / "exact.csv"
    assert main(["exact", "--out-csv", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "r,level,label,energy,n_particles,s_squared,s_z"
    assert len(lines) == 1 + 25 * 16
    first_r = [line.split(",") for line in lines[1:17]]
    assert sum(row[2] == "ground" for row in first_r) == 1
    assert sum(row[2] == "triplet" for row in first_r) == 3


def test_selftest_passes(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["selftest"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.count("PASS") == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["scan", "--optimizer", "adam", "--out-csv", "x.csv"],
        ["scan", "--states", "ground,quartet", "--out-csv", "x.csv"],
        ["scan", "--r-step", "0", "--out-csv", "x.csv"],
        ["scan", "--r-min", "0.75", "--r-max", "0.75", "--out-csv", "x.csv"],
        ["frobnicate"],
    ],
)
def test_config_errors_exit_with_one(
    argv: list[str], tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.chdir(tmp_path)
    assert main(argv) == EXIT_CONFIG


def test_missing_coefficient_file_is_a_config_error(tmp_path: Path) -> None:
    missing = tmp_path / "missing.json"
    code = main(["exact", "--coeffs", str(missing), "--out-csv", str(tmp_path / "e.csv")])
    assert code == EXIT_CONFIG
