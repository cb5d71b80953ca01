from __future__ import annotations

import argparse
import csv
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, cast

from vqebench.errors import ConfigError
from vqebench.oracle import classify, full_spectrum, reference_energies

from .config import (
    OptimizerId,
    ScanConfig,
    ScanMode,
    apply_config_file,
    load_config_file,
    parse_init_distribution,
    parse_states,
)
from .plots import PlotKind, emit_plot
from .report import emit_csv, summarize
from .scan import count_failures, load_table, run_scan
from .selftest import run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging verbosity.",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="vqebench", description="VQE optimizer benchmark on H2 (STO-3G, BK encoding)."
    )
    sub = p.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="Bond-length scan with one optimizer.")
    _add_common(scan)
    scan.add_argument(
        "--coeffs", type=Path, default=None, help="Coefficient JSON (default: bundled)."
    )
    scan.add_argument("--config", type=Path, default=None, help="Optional JSON config.")
    scan.add_argument(
        "--optimizer", choices=[o.value for o in OptimizerId], default=None, help="Minimizer."
    )
    scan.add_argument("--states", type=str, default=None, help="e.g. ground,triplet,singlet,doubly")
    scan.add_argument("--mode", choices=[m.value for m in ScanMode], default=None)
    scan.add_argument("--r-min", type=float, default=None)
    scan.add_argument("--r-max", type=float, default=None)
    scan.add_argument("--r-step", type=float, default=None)
    scan.add_argument("--reps", type=int, default=None, help="Repetitions per bond length.")
    scan.add_argument("--seed", type=int, default=None, help="Base seed (u64).")
    scan.add_argument("--init-dist", choices=["mix", "poisson", "beta025"], default=None)
    scan.add_argument("--profile", choices=["full", "ci"], default=None, help="GA budget profile.")
    scan.add_argument("--generations", type=int, default=None, help="Override GA generations.")
    scan.add_argument("--population", type=int, default=None, help="Override GA population.")
    scan.add_argument("--budget", type=int, default=None, help="Classical iteration cap.")
    scan.add_argument("--bayes-dims", type=int, default=None, help="Optimize only the first k.")
    scan.add_argument("--ep-source", choices=["registry", "oracle"], default=None)
    scan.add_argument("--elitist", action="store_true", help="JGG family includes parents.")
    scan.add_argument("--workers", type=int, default=None, help="Parallel (r, repetition) cells.")
    scan.add_argument("--ga-workers", type=int, default=None, help="Threads per GA generation.")
    scan.add_argument("--timing", action="store_true", help="Fill the wall_seconds column.")
    scan.add_argument("--out-csv", type=Path, required=True, help="Per-sample records CSV.")
    scan.add_argument("--out-summary", type=Path, default=None, help="Per-cell summary CSV.")
    scan.add_argument("--out-svg", type=Path, default=None, help="Optional SVG figure.")
    scan.add_argument(
        "--plot", choices=["levels", "deviations", "log-errors"], default="log-errors"
    )

    exact = sub.add_parser("exact", help="Classified full-CI spectrum per bond length.")
    _add_common(exact)
    exact.add_argument("--coeffs", type=Path, default=None, help="Coefficient JSON.")
    exact.add_argument("--out-csv", type=Path, required=True)

    selftest = sub.add_parser("selftest", help="Run the invariant suite.")
    _add_common(selftest)
    selftest.add_argument("--coeffs", type=Path, default=None, help="Coefficient JSON.")
    return p


def scan_config_from_args(args: argparse.Namespace) -> ScanConfig:
    cfg = apply_config_file(ScanConfig(), load_config_file(args.config))
    overrides: dict[str, Any] = {}
    for attr, key in (
        ("r_min", "r_min"),
        ("r_max", "r_max"),
        ("r_step", "r_step"),
        ("reps", "repetitions"),
        ("seed", "seed"),
        ("profile", "profile"),
        ("generations", "generations"),
        ("population", "population"),
        ("budget", "classical_budget"),
        ("bayes_dims", "bayes_dims"),
        ("ep_source", "ep_source"),
        ("workers", "workers"),
        ("ga_workers", "ga_workers"),
        ("coeffs", "coeffs"),
    ):
        value = getattr(args, attr)
        if value is not None:
            overrides[key] = value
    if args.optimizer is not None:
        overrides["optimizer"] = OptimizerId(args.optimizer)
    if args.mode is not None:
        overrides["mode"] = ScanMode(args.mode)
    if args.states is not None:
        overrides["states"] = parse_states(args.states)
    if args.init_dist is not None:
        overrides["init_distribution"] = parse_init_distribution(args.init_dist)
    if args.elitist:
        overrides["elitist"] = True
    if args.timing:
        overrides["timing"] = True
    return replace(cfg, **overrides)


def _cmd_scan(args: argparse.Namespace) -> int:
    cfg = scan_config_from_args(args)
    table = load_table(cfg)
    records = run_scan(cfg, table)
    emit_csv(records, args.out_csv)
    failures = count_failures(records)
    if failures:
        logger.warning("%d of %d records failed", failures, len(records))
    if args.out_summary is not None or args.out_svg is not None:
        summaries = summarize(records)
        if args.out_summary is not None:
            emit_csv(summaries, args.out_summary)
        if args.out_svg is not None:
            kind = cast(PlotKind, args.plot.replace("-", "_"))
            refs = reference_energies(table) if kind == "levels" else None
            emit_plot(summaries, kind, args.out_svg, references=refs)
    return EXIT_OK


def _cmd_exact(args: argparse.Namespace) -> int:
    cfg = ScanConfig(coeffs=args.coeffs)
    table = load_table(cfg)
    args.out_csv.parent.mkdir(parents=True, exist_ok=True)
    with args.out_csv.open("w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["r", "level", "label", "energy", "n_particles", "s_squared", "s_z"])
        for spec in table.specs:
            for k, e in enumerate(classify(full_spectrum(spec))):
                w.writerow(
                    [
                        format(spec.bond_length, ".17g"),
                        k,
                        e.label,
                        format(e.energy, ".17g"),
                        format(e.n_particles, ".6f"),
                        format(e.s_squared, ".6f"),
                        format(e.s_z, ".6f"),
                    ]
                )
    return EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    table = load_table(ScanConfig(coeffs=args.coeffs))
    results = run_selftest(table)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name} ({res.seconds:.2f}s): {res.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_RUNTIME


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    commands = {"scan": _cmd_scan, "exact": _cmd_exact, "selftest": _cmd_selftest}
    try:
        return commands[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:
        logger.exception("run failed")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
