"""Bond-length scans: per-cell sequential state solves with deflation."""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from vqebench.ansatz import AnsatzMode, AnsatzSpec, build_ansatz, prepare_state
from vqebench.errors import ConfigError
from vqebench.objective import ObjectiveContext, StateRegistry, TargetState, default_targets
from vqebench.optimize import (
    FrozenObjective,
    GAConfig,
    Objective,
    RunResult,
    bayesian_minimize,
    classical_minimize,
    rcga_minimize,
)
from vqebench.oracle import ReferenceLevels, reference_levels
from vqebench.pauli import (
    CoefficientTable,
    HamiltonianSpec,
    bundled_coefficients_path,
    load_coefficients,
)

from .config import OptimizerId, ScanConfig, ScanMode

logger = logging.getLogger(__name__)

LOG_ERROR_FLOOR = -16.0


@dataclass(frozen=True, slots=True)
class BenchmarkRecord:
    r: float
    state: str
    optimizer: str
    repetition: int
    seed: int
    energy: float
    exact: float
    log_error: float
    evaluations: int
    wall_seconds: float | None
    converged: bool
    error: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.error)


def log_error(difference: float) -> float:
    """log10|difference| floored at -16."""
    magnitude = abs(difference)
    if not math.isfinite(magnitude):
        return math.nan
    if magnitude <= 10.0**LOG_ERROR_FLOOR:
        return LOG_ERROR_FLOOR
    return max(math.log10(magnitude), LOG_ERROR_FLOOR)


def cell_seed(base_seed: int, r_index: int, repetition: int) -> int:
    seq = np.random.SeedSequence([base_seed, r_index, repetition])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def record_sort_key(rec: BenchmarkRecord) -> tuple[float, int, str, int]:
    return (rec.r, TargetState(rec.state).level, rec.optimizer, rec.repetition)


@dataclass(frozen=True, slots=True)
class CellTask:
    cfg: ScanConfig
    spec: HamiltonianSpec
    references: ReferenceLevels
    r_index: int
    repetition: int


def _run_optimizer(
    cfg: ScanConfig,
    state: TargetState,
    objective: Objective,
    dimension: int,
    rng: np.random.Generator,
) -> RunResult:
    lower = np.full(dimension, -math.pi)
    upper = np.full(dimension, math.pi)
    if cfg.optimizer is OptimizerId.RCGA:
        budget = cfg.budget_for(state)
        ga = GAConfig(
            max_generations=budget.generations,
            population_size=budget.population,
            init_distribution=cfg.init_distribution,
            elitist=cfg.elitist,
            workers=cfg.ga_workers,
        )
        return rcga_minimize(objective, ga, (lower, upper), rng)
    if cfg.optimizer is OptimizerId.BAYES:
        return bayesian_minimize(objective, (lower, upper), rng, cfg.bayes)
    method = cfg.optimizer.classical
    if method is None:
        raise ConfigError(f"unsupported optimizer {cfg.optimizer}")
    theta0 = cfg.init_scale * rng.standard_normal(dimension)
    return classical_minimize(method, objective, theta0, cfg.iteration_budget())


def _free_indices(
    cfg: ScanConfig, ansatz: AnsatzSpec, state_index: int, have_ground: bool
) -> tuple[int, ...]:
    free = tuple(range(ansatz.n_params))
    if cfg.mode is ScanMode.FIXED and state_index > 0 and have_ground:
        free = tuple(range(ansatz.n_cluster_params))
    if cfg.optimizer is OptimizerId.BAYES and cfg.bayes_dims is not None:
        free = free[: cfg.bayes_dims]
    return free


def run_cell(task: CellTask) -> list[BenchmarkRecord]:
    """Solve the configured states in order for one (r, repetition) cell."""
    cfg, spec = task.cfg, task.spec
    r = spec.bond_length
    seed = cell_seed(cfg.seed, task.r_index, task.repetition)
    rng = np.random.default_rng(seed)
    ansatz = build_ansatz(cfg.depth, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, spec)
    registry = StateRegistry()
    base_theta = np.zeros(ansatz.n_params)
    have_ground = False
    records: list[BenchmarkRecord] = []
    failure = ""

    for i, state in enumerate(cfg.states):
        exact = task.references.level(state.value)
        if failure:
            records.append(_failed(cfg, state, r, task.repetition, seed, exact, failure))
            continue
        started = time.perf_counter()
        ep_source: Callable[[float], float] | None = None
        if cfg.ep_source == "oracle" and i > 0:
            previous = task.references.level(cfg.states[i - 1].value)
            ep_source = _constant(previous)
            logger.info(
                "r=%.2f %s: E_p from exact %s level %.10f", r, state, cfg.states[i - 1], previous
            )
        obj_cfg = replace(
            cfg.objective,
            constraint_targets=default_targets(state, cfg.constraint_weight),
            ep_source=ep_source,
        )
        ctx = ObjectiveContext(i, registry, r, obj_cfg, ansatz, spec.terms)
        free = _free_indices(cfg, ansatz, i, have_ground)
        objective: Objective = ctx
        frozen: FrozenObjective | None = None
        if len(free) != ansatz.n_params:
            frozen = FrozenObjective(ctx, base_theta, free)
            objective = frozen
        try:
            result = _run_optimizer(cfg, state, objective, len(free), rng)
            theta = frozen.expand(result.best_theta) if frozen else result.best_theta
            final = ctx.evaluate(theta)
            registry = registry.with_state(prepare_state(ansatz, theta), final.energy)
        except Exception as exc:  # recorded per cell; the scan continues
            failure = f"{type(exc).__name__}: {exc}"
            logger.warning("r=%.2f rep=%d %s failed: %s", r, task.repetition, state, failure)
            records.append(_failed(cfg, state, r, task.repetition, seed, exact, failure))
            failure = f"skipped after {state.value} failed"
            continue

        if state is TargetState.GROUND:
            base_theta = theta
            have_ground = True
        elapsed = time.perf_counter() - started
        records.append(
            BenchmarkRecord(
                r=r,
                state=state.value,
                optimizer=cfg.optimizer.value,
                repetition=task.repetition,
                seed=seed,
                energy=final.energy,
                exact=exact,
                log_error=log_error(final.energy - exact),
                evaluations=result.evaluations,
                wall_seconds=elapsed if cfg.timing else None,
                converged=result.converged,
            )
        )
        logger.info(
            "r=%.2f rep=%d %s: E=%.10f exact=%.10f log_err=%.2f",
            r,
            task.repetition,
            state,
            final.energy,
            exact,
            records[-1].log_error,
        )
    return records


def _constant(value: float) -> Callable[[float], float]:
    def source(_: float) -> float:
        return value

    return source


def _failed(
    cfg: ScanConfig,
    state: TargetState,
    r: float,
    repetition: int,
    seed: int,
    exact: float,
    error: str,
) -> BenchmarkRecord:
    return BenchmarkRecord(
        r=r,
        state=state.value,
        optimizer=cfg.optimizer.value,
        repetition=repetition,
        seed=seed,
        energy=math.nan,
        exact=exact,
        log_error=math.nan,
        evaluations=0,
        wall_seconds=None,
        converged=False,
        error=error,
    )


def load_table(cfg: ScanConfig) -> CoefficientTable:
    return load_coefficients(cfg.coeffs if cfg.coeffs is not None else bundled_coefficients_path())


def scan_tasks(cfg: ScanConfig, table: CoefficientTable) -> list[CellTask]:
    grid = cfg.grid()
    if not table.covers(grid):
        missing = [r for r in grid if not table.covers([r])]
        raise ConfigError(f"coefficient table lacks bond lengths {missing}")
    tasks: list[CellTask] = []
    for r_index, r in enumerate(grid):
        spec = table.spec_at(r)
        refs = reference_levels(spec)
        for rep in range(cfg.repetitions):
            tasks.append(CellTask(cfg, spec, refs, r_index, rep))
    return tasks


def run_scan(cfg: ScanConfig, table: CoefficientTable | None = None) -> list[BenchmarkRecord]:
    table = table if table is not None else load_table(cfg)
    tasks = scan_tasks(cfg, table)
    logger.info(
        "scan: %d bond lengths x %d repetitions x %d states with %s",
        len(cfg.grid()),
        cfg.repetitions,
        len(cfg.states),
        cfg.optimizer,
    )
    records: list[BenchmarkRecord] = []
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for cell in pool.map(run_cell, tasks):
                records.extend(cell)
    else:
        for task in tasks:
            records.extend(run_cell(task))
    return sorted(records, key=record_sort_key)


def count_failures(records: Sequence[BenchmarkRecord]) -> int:
    return sum(1 for rec in records if rec.failed)
