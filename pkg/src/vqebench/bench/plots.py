"""SVG figures: energy levels, per-sample deviations, log errors."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Literal

import matplotlib as mpl
from matplotlib.figure import Figure

from vqebench.objective import TargetState
from vqebench.oracle import ReferenceLevels

from .report import CHEMICAL_ACCURACY, Summary

PlotKind = Literal["levels", "deviations", "log_errors"]

_STYLE = {
    "svg.hashsalt": "vqebench",
    "svg.fonttype": "path",
    "font.size": 9,
    "legend.fontsize": 8,
    "axes.grid": True,
    "grid.alpha": 0.3,
}

_COLORS = {
    "ground": "tab:blue",
    "triplet": "tab:orange",
    "singlet": "tab:green",
    "doubly": "tab:red",
}
_MARKERS = {"ground": "o", "triplet": "s", "singlet": "^", "doubly": "D"}


def _by_series(summaries: Sequence[Summary]) -> dict[tuple[str, str], list[Summary]]:
    series: dict[tuple[str, str], list[Summary]] = {}
    for s in sorted(summaries, key=lambda s: (TargetState(s.state).level, s.optimizer, s.r)):
        series.setdefault((s.state, s.optimizer), []).append(s)
    return series


def _levels(
    fig: Figure, summaries: Sequence[Summary], refs: Mapping[float, ReferenceLevels] | None
) -> None:
    ax = fig.add_subplot()
    for (state, optimizer), rows in _by_series(summaries).items():
        rs = [s.r for s in rows]
        ax.plot(
            rs,
            [s.mean_energy for s in rows],
            linestyle="none",
            marker=_MARKERS.get(state, "x"),
            color=_COLORS.get(state),
            label=f"{state} ({optimizer})",
            gid=f"series-{state}-{optimizer}",
        )
        ax.plot(
            rs,
            [s.exact for s in rows],
            color=_COLORS.get(state),
            linewidth=1.0,
            label=f"{state} exact",
            gid=f"exact-{state}-{optimizer}",
        )
    if refs:
        pairs = [(r, lv.doublet) for r, lv in sorted(refs.items()) if lv.doublet is not None]
        if pairs:
            ax.plot(
                [p[0] for p in pairs],
                [p[1] for p in pairs],
                color="black",
                linewidth=0.8,
                linestyle="--",
                label="doublet (odd N)",
                gid="exact-doublet",
            )
    ax.set_xlabel("bond length r [Å]")
    ax.set_ylabel("energy [Hartree]")


def _deviations(fig: Figure, summaries: Sequence[Summary]) -> None:
    ax = fig.add_subplot()
    for (state, optimizer), rows in _by_series(summaries).items():
        xs = [s.r for s in rows for _ in s.deviations]
        ys = [d for s in rows for d in s.deviations]
        ax.plot(
            xs,
            ys,
            linestyle="none",
            marker=_MARKERS.get(state, "x"),
            markersize=3,
            color=_COLORS.get(state),
            label=f"{state} ({optimizer})",
            gid=f"series-{state}-{optimizer}",
        )
        ax.errorbar(
            [s.r for s in rows],
            [0.0] * len(rows),
            yerr=[s.std_energy for s in rows],
            fmt="none",
            ecolor=_COLORS.get(state),
            alpha=0.5,
            capsize=2,
        )
    ax.axhline(0.0, color="gray", linewidth=0.5)
    ax.set_xlabel("bond length r [Å]")
    ax.set_ylabel("deviation from mean [Hartree]")


def _log_errors(fig: Figure, summaries: Sequence[Summary]) -> None:
    ax = fig.add_subplot()
    for (state, optimizer), rows in _by_series(summaries).items():
        ys = [s.log_error for s in rows]
        lower = [max(y - s.min_log_error, 0.0) for y, s in zip(ys, rows)]
        upper = [max(s.max_log_error - y, 0.0) for y, s in zip(ys, rows)]
        ax.errorbar(
            [s.r for s in rows],
            ys,
            yerr=[lower, upper],
            marker=_MARKERS.get(state, "x"),
            color=_COLORS.get(state),
            capsize=2,
            linewidth=0.8,
            label=f"{state} ({optimizer})",
            gid=f"series-{state}-{optimizer}",
        )
    ax.axhline(
        math.log10(CHEMICAL_ACCURACY),
        color="black",
        linestyle=":",
        label="chemical accuracy",
        gid="chemical-accuracy",
    )
    ax.set_xlabel("bond length r [Å]")
    ax.set_ylabel("log10 |E - E_exact|")


def emit_plot(
    summaries: Sequence[Summary],
    kind: PlotKind,
    path: Path,
    *,
    references: Mapping[float, ReferenceLevels] | None = None,
) -> None:
    if not summaries:
        raise ValueError("nothing to plot")
    with mpl.rc_context(_STYLE):
        fig = Figure(figsize=(6.4, 4.4))
        if kind == "levels":
            _levels(fig, summaries, references)
        elif kind == "deviations":
            _deviations(fig, summaries)
        elif kind == "log_errors":
            _log_errors(fig, summaries)
        else:
            raise ValueError(f"unknown plot kind {kind!r}")
        legend = fig.axes[0].legend(loc="best")
        legend.set_gid("legend")
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
