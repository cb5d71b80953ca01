"""Real-coded GA: REX crossover with Just-Generation-Gap alternation.

Each generation removes ``n_parents`` random individuals, samples children
around their centroid along the parent deviations, and puts back the best
``n_parents`` of the family. The run stops when every coordinate's population
variance, normalized by its bound width, drops below the threshold.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from vqebench.errors import ConfigError, ObjectiveError

from .result import EvaluationLog, FloatArray, Objective, RunResult

logger = logging.getLogger(__name__)

Bounds = tuple[FloatArray, FloatArray]
Sampler = Callable[[np.random.Generator, tuple[int, int]], FloatArray]

MIX_UNIFORM_PROBABILITY = 1.0 / 1001.0
POISSON_CAP = 5


class InitDistribution(str, Enum):
    UNIFORM_BETA_MIX = "uniform_beta_mix"
    POISSON = "poisson"
    BETA_QUARTER = "beta_quarter"

    def __str__(self) -> str:  # pragma: no cover
        return self.value


@dataclass(frozen=True, slots=True)
class GAConfig:
    n_parents: int = 2
    n_children: int = 4
    max_generations: int = 3000
    init_distribution: InitDistribution = InitDistribution.UNIFORM_BETA_MIX
    population_size: int | None = None
    convergence_threshold: float = 1e-16
    elitist: bool = False
    workers: int = 1
    log_every: int = 500

    def __post_init__(self) -> None:
        if self.n_parents < 2:
            raise ConfigError("n_parents must be >= 2")
        if self.n_children < self.n_parents:
            raise ConfigError("n_children must be >= n_parents")
        if self.max_generations < 0:
            raise ConfigError("max_generations must be >= 0")
        if self.population_size is not None and self.population_size < self.n_parents:
            raise ConfigError("population_size must be >= n_parents")
        if not (self.convergence_threshold > 0.0) or not math.isfinite(self.convergence_threshold):
            raise ConfigError("convergence_threshold must be finite and positive")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if not isinstance(self.init_distribution, InitDistribution):
            raise ConfigError(f"unknown init distribution {self.init_distribution!r}")

    def size_for(self, dimension: int) -> int:
        return self.population_size if self.population_size is not None else 10 * dimension


@dataclass(frozen=True, slots=True)
class Individual:
    theta: FloatArray
    fitness: float
    generation_born: int


@dataclass(frozen=True, slots=True)
class Population:
    thetas: FloatArray
    fitness: FloatArray
    born: npt.NDArray[np.int64]
    generation: int = 0

    def __post_init__(self) -> None:
        m = self.thetas.shape[0]
        if self.thetas.ndim != 2 or self.fitness.shape != (m,) or self.born.shape != (m,):
            raise ValueError("population arrays have inconsistent shapes")

    def __len__(self) -> int:
        return int(self.thetas.shape[0])

    @property
    def evaluated(self) -> bool:
        return bool(np.all(np.isfinite(self.fitness)))

    def individual(self, i: int) -> Individual:
        return Individual(self.thetas[i].copy(), float(self.fitness[i]), int(self.born[i]))

    def best(self) -> Individual:
        return self.individual(int(np.argmin(self.fitness)))


def validate_bounds(bounds: Bounds, dimension: int | None = None) -> None:
    lower, upper = bounds
    if lower.shape != upper.shape or lower.ndim != 1:
        raise ConfigError("bounds must be two 1-D arrays of equal length")
    if dimension is not None and lower.shape[0] != dimension:
        raise ConfigError(f"bounds have length {lower.shape[0]}, expected {dimension}")
    if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
        raise ConfigError("bounds must be finite")
    if np.any(lower >= upper):
        raise ConfigError("every lower bound must be below its upper bound")


def sample_unit(
    dist: InitDistribution | Sampler, rng: np.random.Generator, shape: tuple[int, int]
) -> FloatArray:
    """Draw f_ini in [0, 1] for every coordinate."""
    if callable(dist) and not isinstance(dist, InitDistribution):
        return np.asarray(dist(rng, shape), dtype=np.float64)
    if dist is InitDistribution.UNIFORM_BETA_MIX:
        beta = rng.beta(0.99, 0.99, size=shape)
        uniform = rng.random(size=shape)
        use_uniform = rng.random(size=shape) < MIX_UNIFORM_PROBABILITY
        return np.where(use_uniform, uniform, beta)
    if dist is InitDistribution.POISSON:
        k = rng.poisson(1.0, size=shape)
        return np.minimum(k, POISSON_CAP).astype(np.float64) / POISSON_CAP
    if dist is InitDistribution.BETA_QUARTER:
        return rng.beta(0.25, 0.25, size=shape)
    raise ConfigError(f"unknown init distribution {dist!r}")


def init_population(
    n: int,
    dist: InitDistribution | Sampler,
    bounds: Bounds,
    rng: np.random.Generator,
    *,
    size: int | None = None,
) -> Population:
    """Unevaluated population of ``size`` (default 10N) individuals."""
    validate_bounds(bounds, n)
    m = 10 * n if size is None else size
    lower, upper = bounds
    f_ini = sample_unit(dist, rng, (m, n))
    thetas = (upper - lower) * f_ini + lower
    return Population(
        thetas=thetas,
        fitness=np.full(m, np.nan),
        born=np.zeros(m, dtype=np.int64),
    )


def rex_crossover(
    parents: FloatArray,
    n_children: int,
    rng: np.random.Generator,
    *,
    bounds: Bounds | None = None,
    xi: FloatArray | None = None,
) -> FloatArray:
    """Children = centroid + sum_j xi_j (parent_j - centroid), xi ~ U(+-0.9 sqrt(3/Np))."""
    n_parents = parents.shape[0]
    if n_parents < 2:
        raise ValueError("REX needs at least two parents")
    centroid = parents.mean(axis=0)
    deviations = parents - centroid
    if xi is None:
        half_width = 0.9 * math.sqrt(3.0 / n_parents)
        xi = rng.uniform(-half_width, half_width, size=(n_children, n_parents))
    children = centroid + xi @ deviations
    if bounds is not None:
        children = np.clip(children, bounds[0], bounds[1])
    return children


def _evaluate_batch(
    thetas: FloatArray, objective: Objective, executor: Executor | None
) -> FloatArray:
    if executor is None:
        values = []
        for i, theta in enumerate(thetas):
            try:
                values.append(float(objective(theta)))
            except ObjectiveError:
                raise
            except Exception as exc:
                raise ObjectiveError(f"objective failed: {exc}", theta=theta, index=i) from exc
        return np.array(values)
    futures = [executor.submit(objective, theta) for theta in thetas]
    out = np.empty(len(futures))
    for i, fut in enumerate(futures):
        try:
            out[i] = float(fut.result())
        except ObjectiveError:
            raise
        except Exception as exc:
            raise ObjectiveError(f"objective failed: {exc}", theta=thetas[i], index=i) from exc
    return out


def evaluate_population(
    pop: Population,
    objective: Objective,
    *,
    log: EvaluationLog | None = None,
    executor: Executor | None = None,
) -> Population:
    values = _evaluate_batch(pop.thetas, objective, executor)
    if log is not None:
        for i, (theta, v) in enumerate(zip(pop.thetas, values)):
            log.observe(theta, float(v), index=i)
    return Population(pop.thetas.copy(), values, pop.born.copy(), pop.generation)


def jgg_step(
    pop: Population,
    objective: Objective,
    cfg: GAConfig,
    rng: np.random.Generator,
    *,
    bounds: Bounds | None = None,
    log: EvaluationLog | None = None,
    executor: Executor | None = None,
) -> Population:
    if not pop.evaluated:
        raise ValueError("population must be evaluated before a JGG step")
    m = len(pop)
    picked = rng.choice(m, size=cfg.n_parents, replace=False)
    parents = pop.thetas[picked]
    children = rex_crossover(parents, cfg.n_children, rng, bounds=bounds)
    child_fitness = _evaluate_batch(children, objective, executor)
    if log is not None:
        for i, (theta, v) in enumerate(zip(children, child_fitness)):
            log.observe(theta, float(v), index=i)

    generation = pop.generation + 1
    family = children
    family_fitness = child_fitness
    family_born = np.full(cfg.n_children, generation, dtype=np.int64)
    if cfg.elitist:
        family = np.vstack([parents, children])
        family_fitness = np.concatenate([pop.fitness[picked], child_fitness])
        family_born = np.concatenate([pop.born[picked], family_born])
    survivors = np.argsort(family_fitness, kind="stable")[: cfg.n_parents]

    thetas = pop.thetas.copy()
    fitness = pop.fitness.copy()
    born = pop.born.copy()
    thetas[picked] = family[survivors]
    fitness[picked] = family_fitness[survivors]
    born[picked] = family_born[survivors]
    return Population(thetas, fitness, born, generation)


def convergence_metric(pop: Population, bounds: Bounds) -> float:
    """max_k var_k / (UB_k - LB_k), population variance over individuals."""
    lower, upper = bounds
    variance = pop.thetas.var(axis=0)
    return float(np.max(variance / (upper - lower)))


def ga_converged(pop: Population, bounds: Bounds, threshold: float = 1e-16) -> bool:
    return convergence_metric(pop, bounds) < threshold


def rcga_minimize(
    objective: Objective,
    cfg: GAConfig,
    bounds: Bounds,
    rng: np.random.Generator,
    *,
    initial_population: Population | None = None,
) -> RunResult:
    validate_bounds(bounds)
    dimension = bounds[0].shape[0]
    log = EvaluationLog()
    pop = initial_population
    if pop is None:
        pop = init_population(
            dimension, cfg.init_distribution, bounds, rng, size=cfg.size_for(dimension)
        )

    executor: ThreadPoolExecutor | None = None
    if cfg.workers > 1:
        executor = ThreadPoolExecutor(max_workers=cfg.workers, thread_name_prefix="rcga")
    try:
        pop = evaluate_population(pop, objective, log=log, executor=executor)
        converged = ga_converged(pop, bounds, cfg.convergence_threshold)
        generations = 0
        while not converged and generations < cfg.max_generations:
            pop = jgg_step(pop, objective, cfg, rng, bounds=bounds, log=log, executor=executor)
            generations += 1
            converged = ga_converged(pop, bounds, cfg.convergence_threshold)
            if cfg.log_every and generations % cfg.log_every == 0:
                logger.debug(
                    "generation %d best=%.12g spread=%.3e",
                    generations,
                    log.best_fitness,
                    convergence_metric(pop, bounds),
                )
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    logger.info(
        "rcga stopped after %d generations (converged=%s, best=%.12g, evaluations=%d)",
        generations,
        converged,
        log.best_fitness,
        log.evaluations,
    )
    return log.result(iterations=generations, converged=converged, method="rcga")
