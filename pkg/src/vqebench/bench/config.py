"""Scan configuration: grid, budgets, optimizer choice, JSON overrides."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Literal, cast

from vqebench.errors import ConfigError
from vqebench.objective import ObjectiveConfig, TargetState
from vqebench.optimize import DEFAULT_BUDGETS, BayesConfig, ClassicalMethod, InitDistribution

ALL_STATES = tuple(TargetState)


class OptimizerId(str, Enum):
    RCGA = "rcga"
    POWELL = "powell"
    CG = "cg"
    NELDER_MEAD = "nelder-mead"
    BFGS = "bfgs"
    BAYES = "bayes"

    def __str__(self) -> str:  # pragma: no cover
        return self.value

    @property
    def classical(self) -> ClassicalMethod | None:
        return {
            OptimizerId.POWELL: ClassicalMethod.POWELL,
            OptimizerId.CG: ClassicalMethod.CG,
            OptimizerId.NELDER_MEAD: ClassicalMethod.NELDER_MEAD,
            OptimizerId.BFGS: ClassicalMethod.BFGS,
        }.get(self)


class ScanMode(str, Enum):
    FIXED = "fixed"
    ALL = "all"

    def __str__(self) -> str:  # pragma: no cover
        return self.value


INIT_DIST_ALIASES = {
    "mix": InitDistribution.UNIFORM_BETA_MIX,
    "poisson": InitDistribution.POISSON,
    "beta025": InitDistribution.BETA_QUARTER,
}


@dataclass(frozen=True, slots=True)
class StateBudget:
    generations: int
    population: int | None = None

    def __post_init__(self) -> None:
        if self.generations < 0:
            raise ConfigError("generations must be >= 0")
        if self.population is not None and self.population < 2:
            raise ConfigError("population must be >= 2")


FIXED_MODE_BUDGETS: dict[TargetState, StateBudget] = {
    TargetState.GROUND: StateBudget(3000, 300),
    TargetState.TRIPLET: StateBudget(10000, 100),
    TargetState.SINGLET: StateBudget(10000, 100),
    TargetState.DOUBLY: StateBudget(15000, 100),
}

ALL_MODE_BUDGETS: dict[TargetState, StateBudget] = {
    TargetState.GROUND: StateBudget(30000),
    TargetState.TRIPLET: StateBudget(40000),
    TargetState.SINGLET: StateBudget(120000),
    TargetState.DOUBLY: StateBudget(120000),
}

CI_GENERATIONS = 1000


@dataclass(frozen=True, slots=True)
class ScanConfig:
    r_min: float = 0.1
    r_max: float = 2.5
    r_step: float = 0.1
    repetitions: int = 5
    optimizer: OptimizerId = OptimizerId.RCGA
    states: tuple[TargetState, ...] = ALL_STATES
    mode: ScanMode = ScanMode.FIXED
    seed: int = 0
    init_distribution: InitDistribution = InitDistribution.UNIFORM_BETA_MIX
    coeffs: Path | None = None
    depth: int = 2
    objective: ObjectiveConfig = field(default_factory=ObjectiveConfig)
    constraint_weight: float = 1.0
    profile: Literal["full", "ci"] = "full"
    budgets: dict[TargetState, StateBudget] | None = None
    generations: int | None = None
    population: int | None = None
    classical_budget: int | None = None
    bayes: BayesConfig = field(default_factory=BayesConfig)
    bayes_dims: int | None = None
    ep_source: Literal["registry", "oracle"] = "registry"
    init_scale: float = 0.1
    workers: int = 1
    ga_workers: int = 1
    elitist: bool = False
    timing: bool = False

    def __post_init__(self) -> None:
        if not (self.r_step > 0.0) or not math.isfinite(self.r_step):
            raise ConfigError("r_step must be finite and positive")
        if not (0.0 < self.r_min <= self.r_max):
            raise ConfigError("need 0 < r_min <= r_max")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        if not self.states:
            raise ConfigError("at least one state must be solved")
        levels = [TargetState(s).level for s in self.states]
        if levels != sorted(levels) or len(set(levels)) != len(levels):
            raise ConfigError("states must be distinct and ordered by energy level")
        if self.depth < 1:
            raise ConfigError("depth must be >= 1")
        if self.seed < 0 or self.seed >= 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.constraint_weight < 0.0:
            raise ConfigError("constraint_weight must be >= 0")
        if self.bayes_dims is not None and self.bayes_dims < 1:
            raise ConfigError("bayes_dims must be >= 1")
        if self.classical_budget is not None and self.classical_budget < 0:
            raise ConfigError("classical_budget must be >= 0")
        if self.workers < 1 or self.ga_workers < 1:
            raise ConfigError("worker counts must be >= 1")
        if self.profile not in ("full", "ci"):
            raise ConfigError("profile must be 'full' or 'ci'")
        if self.ep_source not in ("registry", "oracle"):
            raise ConfigError("ep_source must be 'registry' or 'oracle'")
        if not (self.init_scale >= 0.0) or not math.isfinite(self.init_scale):
            raise ConfigError("init_scale must be finite and >= 0")

    def grid(self) -> tuple[float, ...]:
        count = int(math.floor((self.r_max - self.r_min) / self.r_step + 1e-9)) + 1
        return tuple(round(self.r_min + k * self.r_step, 10) for k in range(count))

    def budget_for(self, state: TargetState) -> StateBudget:
        if self.budgets is not None and state in self.budgets:
            base = self.budgets[state]
        elif self.profile == "ci":
            base = StateBudget(CI_GENERATIONS)
        else:
            table = FIXED_MODE_BUDGETS if self.mode is ScanMode.FIXED else ALL_MODE_BUDGETS
            base = table[state]
        return StateBudget(
            generations=self.generations if self.generations is not None else base.generations,
            population=self.population if self.population is not None else base.population,
        )

    def iteration_budget(self) -> int:
        method = self.optimizer.classical
        if method is None:
            raise ConfigError(f"{self.optimizer} has no iteration budget")
        if self.classical_budget is not None:
            return self.classical_budget
        return DEFAULT_BUDGETS[method]


def parse_states(text: str) -> tuple[TargetState, ...]:
    try:
        return tuple(TargetState(s.strip()) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise ConfigError(f"unknown state in {text!r}") from exc


def parse_init_distribution(text: str) -> InitDistribution:
    if text in INIT_DIST_ALIASES:
        return INIT_DIST_ALIASES[text]
    try:
        return InitDistribution(text)
    except ValueError as exc:
        raise ConfigError(f"unknown init distribution {text!r}") from exc


def load_config_file(path: Path | None) -> dict[str, object]:
    if path is None:
        return {}
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return cast(dict[str, object], data)


def _section(cfg: dict[str, object], name: str) -> dict[str, Any]:
    obj = cfg.get(name, {})
    if not isinstance(obj, dict):
        raise ConfigError(f"config section {name!r} must be an object")
    return cast(dict[str, Any], obj)


def _known(section: dict[str, Any], cls: type, name: str) -> dict[str, Any]:
    allowed = {f.name for f in fields(cls)}
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {name!r}: {sorted(unknown)}")
    return section


def apply_config_file(base: ScanConfig, cfg: dict[str, object]) -> ScanConfig:
    """Overlay the ``objective``, ``bayes``, ``budgets`` and ``scan`` sections."""
    try:
        objective_section = _known(_section(cfg, "objective"), ObjectiveConfig, "objective")
        objective_section.pop("constraint_targets", None)
        objective_section.pop("ep_source", None)
        objective = replace(base.objective, **objective_section)
        bayes = replace(base.bayes, **_known(_section(cfg, "bayes"), BayesConfig, "bayes"))

        budgets: dict[TargetState, StateBudget] | None = base.budgets
        budget_section = _section(cfg, "budgets")
        if budget_section:
            budgets = dict(budgets or {})
            for name, raw in budget_section.items():
                if not isinstance(raw, dict):
                    raise ConfigError(f"budget for {name!r} must be an object")
                budgets[TargetState(name)] = StateBudget(
                    generations=int(raw["generations"]),
                    population=None if raw.get("population") is None else int(raw["population"]),
                )

        scan_section = dict(_section(cfg, "scan"))
        if "states" in scan_section:
            scan_section["states"] = parse_states(str(scan_section["states"]))
        for key, enum in (
            ("optimizer", OptimizerId),
            ("mode", ScanMode),
        ):
            if key in scan_section:
                scan_section[key] = enum(scan_section[key])
        if "init_distribution" in scan_section:
            scan_section["init_distribution"] = parse_init_distribution(
                str(scan_section["init_distribution"])
            )
        if "coeffs" in scan_section:
            scan_section["coeffs"] = Path(str(scan_section["coeffs"]))
        _known(scan_section, ScanConfig, "scan")
        nested = {"objective", "bayes", "budgets"} & set(scan_section)
        if nested:
            raise ConfigError(f"{sorted(nested)} belong in their own sections, not 'scan'")
        return replace(base, objective=objective, bayes=bayes, budgets=budgets, **scan_section)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid config: {exc}") from exc
