"""Gaussian-process Bayesian optimization with expected improvement."""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm, qmc
from sklearn.exceptions import ConvergenceWarning
from sklearn.gaussian_process import GaussianProcessRegressor
from sklearn.gaussian_process.kernels import RBF, ConstantKernel

from vqebench.errors import ConfigError, SurrogateError

from .rcga import Bounds, validate_bounds
from .result import EvaluationLog, FloatArray, Objective, RunResult

logger = logging.getLogger(__name__)

MAX_DIMENSION = 40


@dataclass(frozen=True, slots=True)
class BayesConfig:
    max_iterations: int = 100
    n_initial: int = 10
    n_candidates: int = 2000
    exploration: float = 0.01
    initial_jitter: float = 1e-10
    max_jitter: float = 1e-4
    n_restarts: int = 2

    def __post_init__(self) -> None:
        if self.max_iterations < 0:
            raise ConfigError("max_iterations must be >= 0")
        if self.n_initial < 1:
            raise ConfigError("n_initial must be >= 1")
        if self.n_candidates < 1:
            raise ConfigError("n_candidates must be >= 1")
        if not (0.0 < self.initial_jitter <= self.max_jitter):
            raise ConfigError("jitter range must satisfy 0 < initial_jitter <= max_jitter")
        if self.exploration < 0.0 or not math.isfinite(self.exploration):
            raise ConfigError("exploration must be finite and >= 0")


def expected_improvement(
    mu: FloatArray, sigma: FloatArray, best: float, exploration: float = 0.0
) -> FloatArray:
    """EI for minimization."""
    improvement = best - mu - exploration
    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.where(sigma > 0.0, improvement / sigma, 0.0)
    ei = improvement * norm.cdf(z) + sigma * norm.pdf(z)
    return np.where(sigma > 0.0, np.maximum(ei, 0.0), 0.0)


def _fit_surrogate(
    x: FloatArray, y: FloatArray, cfg: BayesConfig, seed: int
) -> GaussianProcessRegressor:
    jitter = cfg.initial_jitter
    while True:
        kernel = ConstantKernel(1.0, (1e-3, 1e3)) * RBF(
            length_scale=0.5, length_scale_bounds=(1e-3, 1e2)
        )
        gp = GaussianProcessRegressor(
            kernel=kernel,
            alpha=jitter,
            normalize_y=True,
            n_restarts_optimizer=cfg.n_restarts,
            random_state=seed,
        )
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", ConvergenceWarning)
                gp.fit(x, y)
            return gp
        except (np.linalg.LinAlgError, ValueError) as exc:
            if jitter * 100.0 > cfg.max_jitter:
                cond = float(np.linalg.cond(kernel(x)))
                raise SurrogateError(
                    f"GP kernel ill-conditioned (cond={cond:.3e}) at jitter {jitter:.1e}: {exc}"
                ) from exc
            jitter *= 100.0
            logger.debug("GP fit failed, escalating jitter to %.1e", jitter)


def bayesian_minimize(
    objective: Objective,
    bounds: Bounds,
    rng: np.random.Generator,
    cfg: BayesConfig | None = None,
    *,
    max_iterations: int | None = None,
) -> RunResult:
    cfg = cfg or BayesConfig()
    validate_bounds(bounds)
    lower, upper = bounds
    dim = lower.shape[0]
    if dim > MAX_DIMENSION:
        raise ConfigError(f"Bayesian optimization supports at most {MAX_DIMENSION} dimensions")
    iterations = cfg.max_iterations if max_iterations is None else max_iterations
    width = upper - lower

    log = EvaluationLog()
    design = qmc.LatinHypercube(d=dim, seed=rng).random(cfg.n_initial)
    xs: list[FloatArray] = []
    ys: list[float] = []
    for u in design:
        theta = lower + width * u
        value = float(objective(theta))
        log.observe(theta, value)
        xs.append(u)
        ys.append(value)

    for it in range(iterations):
        x = np.array(xs)
        y = np.array(ys)
        gp = _fit_surrogate(x, y, cfg, seed=int(rng.integers(2**31 - 1)))

        n_local = cfg.n_candidates // 2
        best_u = x[int(np.argmin(y))]
        candidates = np.vstack(
            [
                rng.random((cfg.n_candidates - n_local, dim)),
                np.clip(best_u + 0.05 * rng.standard_normal((n_local, dim)), 0.0, 1.0),
            ]
        )
        mu, sigma = gp.predict(candidates, return_std=True)
        ei = expected_improvement(mu, sigma, float(y.min()), cfg.exploration)
        u_next = candidates[int(np.argmax(ei))]
        theta = lower + width * u_next
        value = float(objective(theta))
        log.observe(theta, value)
        xs.append(u_next)
        ys.append(value)
        if (it + 1) % 10 == 0:
            logger.debug("bayes iteration %d best=%.12g", it + 1, log.best_fitness)

    logger.info(
        "bayes finished %d iterations (best=%.12g, evaluations=%d)",
        iterations,
        log.best_fitness,
        log.evaluations,
    )
    return log.result(iterations=iterations, converged=True, method="bayes")
