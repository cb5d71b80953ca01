"""Interchangeable minimizers over a black-box objective."""

from .bayes import BayesConfig, bayesian_minimize, expected_improvement
from .classical import (
    DEFAULT_BUDGETS,
    ClassicalMethod,
    central_difference_gradient,
    classical_minimize,
)
from .rcga import (
    Bounds,
    GAConfig,
    Individual,
    InitDistribution,
    Population,
    convergence_metric,
    evaluate_population,
    ga_converged,
    init_population,
    jgg_step,
    rcga_minimize,
    rex_crossover,
    sample_unit,
)
from .result import EvaluationLog, FrozenObjective, Objective, RunResult

__all__ = [
    "DEFAULT_BUDGETS",
    "BayesConfig",
    "Bounds",
    "ClassicalMethod",
    "EvaluationLog",
    "FrozenObjective",
    "GAConfig",
    "Individual",
    "InitDistribution",
    "Objective",
    "Population",
    "RunResult",
    "bayesian_minimize",
    "central_difference_gradient",
    "classical_minimize",
    "convergence_metric",
    "evaluate_population",
    "expected_improvement",
    "ga_converged",
    "init_population",
    "jgg_step",
    "rcga_minimize",
    "rex_crossover",
    "sample_unit",
]
