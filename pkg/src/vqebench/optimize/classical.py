"""Powell, CG, Nelder-Mead and BFGS through ``scipy.optimize.minimize``."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Any

import numpy as np
from scipy.optimize import minimize

from vqebench.errors import ConfigError

from .result import EvaluationLog, FloatArray, Objective, RunResult

logger = logging.getLogger(__name__)

FINITE_DIFFERENCE_STEP = 1e-6


class ClassicalMethod(str, Enum):
    POWELL = "powell"
    CG = "cg"
    NELDER_MEAD = "nelder_mead"
    BFGS = "bfgs"

    def __str__(self) -> str:  # pragma: no cover
        return self.value

    @property
    def uses_gradient(self) -> bool:
        return self in (ClassicalMethod.CG, ClassicalMethod.BFGS)


DEFAULT_BUDGETS: dict[ClassicalMethod, int] = {
    ClassicalMethod.POWELL: 2000,
    ClassicalMethod.NELDER_MEAD: 2000,
    ClassicalMethod.CG: 20,
    ClassicalMethod.BFGS: 50,
}

_SCIPY_METHOD = {
    ClassicalMethod.POWELL: "Powell",
    ClassicalMethod.CG: "CG",
    ClassicalMethod.NELDER_MEAD: "Nelder-Mead",
    ClassicalMethod.BFGS: "BFGS",
}

_TOLERANCES: dict[ClassicalMethod, dict[str, float]] = {
    ClassicalMethod.POWELL: {"xtol": 1e-10, "ftol": 1e-14},
    ClassicalMethod.NELDER_MEAD: {"xatol": 1e-10, "fatol": 1e-14},
    ClassicalMethod.CG: {"gtol": 1e-7},
    ClassicalMethod.BFGS: {"gtol": 1e-7},
}


def central_difference_gradient(
    objective: Objective, theta: FloatArray, h: float = FINITE_DIFFERENCE_STEP
) -> FloatArray:
    grad = np.empty_like(theta, dtype=np.float64)
    probe = np.array(theta, dtype=np.float64, copy=True)
    for k in range(theta.shape[0]):
        probe[k] = theta[k] + h
        up = objective(probe.copy())
        probe[k] = theta[k] - h
        down = objective(probe.copy())
        probe[k] = theta[k]
        grad[k] = (up - down) / (2.0 * h)
    return grad


def classical_minimize(
    method: ClassicalMethod | str,
    objective: Objective,
    theta0: FloatArray,
    budget: int | None = None,
    *,
    h: float = FINITE_DIFFERENCE_STEP,
) -> RunResult:
    """Minimize with an iteration cap; returns the best evaluated point."""
    method = ClassicalMethod(method)
    budget = DEFAULT_BUDGETS[method] if budget is None else budget
    if budget < 0:
        raise ConfigError("budget must be >= 0")
    x0 = np.asarray(theta0, dtype=np.float64)
    if x0.ndim != 1:
        raise ConfigError("theta0 must be one-dimensional")

    log = EvaluationLog()
    counted = log.wrap(objective)
    counted(x0)
    if budget == 0:
        return log.result(iterations=0, converged=False, method=method.value, message="budget 0")

    options: dict[str, Any] = {"maxiter": budget, **_TOLERANCES[method]}
    kwargs: dict[str, Any] = {}
    if method.uses_gradient:
        kwargs["jac"] = lambda x: central_difference_gradient(counted, x, h)
    res = minimize(counted, x0, method=_SCIPY_METHOD[method], options=options, **kwargs)

    logger.info(
        "%s stopped after %d iterations: %s (best=%.12g, evaluations=%d)",
        method.value,
        int(res.nit),
        res.message,
        log.best_fitness,
        log.evaluations,
    )
    return log.result(
        iterations=int(res.nit),
        converged=bool(res.success),
        method=method.value,
        message=str(res.message),
    )
