import numpy as np
import pytest

from vqebench.errors import ConfigError
from vqebench.optimize import BayesConfig, bayesian_minimize, expected_improvement


def _interval() -> tuple[np.ndarray, np.ndarray]:
    return np.array([-1.0]), np.array([1.0])


def test_expected_improvement_properties() -> None:
    mu = np.array([0.0, 0.0, 1.0])
    sigma = np.array([0.0, 1.0, 1.0])
    ei = expected_improvement(mu, sigma, best=0.5)
    assert ei[0] == 0.0
    assert ei[1] > ei[2] > 0.0


def test_one_dimensional_quadratic() -> None:
    result = bayesian_minimize(
        lambda x: float((x[0] - 0.3) ** 2),
        _interval(),
        np.random.default_rng(21),
        max_iterations=30,
    )
    assert abs(result.best_theta[0] - 0.3) < 0.05
    assert result.evaluations == 40


def test_zero_iterations_returns_best_design_point() -> None:
    seen: list[float] = []

    def objective(x: np.ndarray) -> float:
        value = float(x[0] ** 2)
        seen.append(value)
        return value

    result = bayesian_minimize(objective, _interval(), np.random.default_rng(22), max_iterations=0)
    assert result.evaluations == 10
    assert result.best_fitness == min(seen)


def test_constant_objective() -> None:
    result = bayesian_minimize(
        lambda x: 2.5, (np.zeros(2), np.ones(2)), np.random.default_rng(23), max_iterations=3
    )
    assert result.best_fitness == 2.5
    assert np.all((result.best_theta >= 0.0) & (result.best_theta <= 1.0))


def test_bayes_is_deterministic() -> None:
    cfg = BayesConfig(n_candidates=200)
    runs = [
        bayesian_minimize(
            lambda x: float(np.sum(x**2)),
            (np.full(2, -1.0), np.full(2, 1.0)),
            np.random.default_rng(24),
            cfg,
            max_iterations=5,
        )
        for _ in range(2)
    ]
    assert np.array_equal(runs[0].best_theta, runs[1].best_theta)
    assert runs[0].trajectory == runs[1].trajectory


def test_dimension_cap_and_config_validation() -> None:
    with pytest.raises(ConfigError):
        bayesian_minimize(lambda x: 0.0, (np.zeros(41), np.ones(41)), np.random.default_rng())
    with pytest.raises(ConfigError):
        BayesConfig(n_initial=0)
    with pytest.raises(ConfigError):
        BayesConfig(initial_jitter=1e-3, max_jitter=1e-4)
