"""Fast invariant suite behind ``vqebench selftest``."""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from vqebench.ansatz import AnsatzMode, build_ansatz, prepare_state
from vqebench.optimize import (
    GAConfig,
    evaluate_population,
    init_population,
    jgg_step,
    rex_crossover,
)
from vqebench.optimize.result import FloatArray
from vqebench.oracle import classify, full_spectrum, reference_energies
from vqebench.pauli import (
    CoefficientTable,
    PauliString,
    bundled_coefficients_path,
    dense_matrix,
    load_coefficients,
    spin_operators,
)
from vqebench.sim import StateVector, apply_pauli_exponential, expectation, init_basis_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _random_state(rng: np.random.Generator, n: int = 4) -> StateVector:
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return StateVector.from_amplitudes(amps, normalize=True)


def _random_string(rng: np.random.Generator, n: int = 4) -> PauliString:
    return PauliString("".join(rng.choice(list("IXYZ"), size=n)))


def check_oracle(table: CoefficientTable, rng: np.random.Generator) -> str:
    worst = 0.0
    for spec in table.specs:
        h = dense_matrix(spec)
        entries = full_spectrum(spec)
        for e in entries:
            v = e.eigenvector.amplitudes
            worst = max(worst, float(np.linalg.norm(h @ v - e.energy * v)))
        trace_gap = abs(sum(e.energy for e in entries) - 16.0 * spec.coefficient("IIII"))
        if trace_gap > 1e-9:
            raise AssertionError(f"r={spec.bond_length}: trace identity off by {trace_gap:.2e}")
    if worst >= 1e-9:
        raise AssertionError(f"largest eigen-residual {worst:.2e}")
    return f"{len(table)} bond lengths, max residual {worst:.1e}"


def check_simulator(table: CoefficientTable, rng: np.random.Generator) -> str:
    worst = 0.0
    for _ in range(200):
        p = _random_string(rng)
        theta = float(rng.uniform(-math.pi, math.pi))
        psi = _random_state(rng)
        direct = apply_pauli_exponential(psi, p, theta, method="direct")
        gates = apply_pauli_exponential(psi, p, theta, method="gates")
        worst = max(worst, float(np.max(np.abs(direct.amplitudes - gates.amplitudes))))
    if worst >= 1e-10:
        raise AssertionError(f"gate and formula paths differ by {worst:.2e}")
    spec = table.specs[len(table) // 2]
    h = dense_matrix(spec)
    for _ in range(50):
        psi = _random_state(rng)
        dense = float(np.vdot(psi.amplitudes, h @ psi.amplitudes).real)
        if abs(expectation(psi, spec.terms) - dense) >= 1e-9:
            raise AssertionError("expectation disagrees with the dense quadratic form")
    return f"200 exponentials agree to {worst:.1e}"


def check_spin(table: CoefficientTable, rng: np.random.Generator) -> str:
    s2, sz = spin_operators()
    hf = init_basis_state("1000")
    if abs(expectation(hf, s2)) > 1e-12 or abs(expectation(hf, sz)) > 1e-12:
        raise AssertionError("Hartree-Fock state is not a closed-shell singlet")
    labels = [e.label for e in classify(full_spectrum(table.specs[0]))]
    for name, count in (("ground", 1), ("triplet", 3), ("singlet", 1), ("doubly", 1)):
        if labels.count(name) != count:
            raise AssertionError(f"expected {count} {name} level(s), got {labels.count(name)}")
    return "HF singlet; 1/3/1/1 allowed levels"


def check_levels(table: CoefficientTable, rng: np.random.Generator) -> str:
    refs = reference_energies(table)
    for r, lv in refs.items():
        if not (lv.ground < lv.triplet < lv.singlet <= lv.doubly):
            raise AssertionError(f"level ordering broken at r={r}")
    r_min = min(refs, key=lambda r: refs[r].ground)
    return f"ordering holds on {len(refs)} points, well at r={r_min}"


def check_ansatz(table: CoefficientTable, rng: np.random.Generator) -> str:
    ansatz = build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, table.specs[0])
    if ansatz.n_params != 40:
        raise AssertionError(f"expected 40 parameters, got {ansatz.n_params}")
    theta = rng.uniform(-math.pi, math.pi, ansatz.n_params)
    norm = float(np.sum(prepare_state(ansatz, theta).probabilities()))
    if abs(norm - 1.0) > 1e-10:
        raise AssertionError(f"prepared state norm {norm}")
    return "40 parameters, unitary preparation"


def check_rex(table: CoefficientTable, rng: np.random.Generator) -> str:
    # parents at +-1: child offset is xi_1 - xi_2, std 0.9
    children = rex_crossover(np.array([[1.0], [-1.0]]), 100_000, rng)[:, 0]
    target = 0.9
    if abs(children.mean()) > 5.0 * target / math.sqrt(children.size):
        raise AssertionError(f"child mean {children.mean():.3e} off the centroid")
    if abs(children.std() / target - 1.0) > 0.01:
        raise AssertionError(f"child std {children.std():.4f} vs {target:.4f}")

    bounds = (np.full(5, -math.pi), np.full(5, math.pi))
    cfg = GAConfig(max_generations=0)

    def sphere(x: FloatArray) -> float:
        return float(np.sum(x * x))

    pop = evaluate_population(init_population(5, cfg.init_distribution, bounds, rng), sphere)
    for _ in range(200):
        pop = jgg_step(pop, sphere, cfg, rng, bounds=bounds)
        if len(pop) != 50:
            raise AssertionError("JGG changed the population size")
    return f"child std {children.std():.4f}, population size conserved"


CHECKS: tuple[tuple[str, Callable[[CoefficientTable, np.random.Generator], str]], ...] = (
    ("oracle residuals and trace", check_oracle),
    ("simulator equivalence", check_simulator),
    ("spin operators and labels", check_spin),
    ("reference level ordering", check_levels),
    ("ansatz parameter count", check_ansatz),
    ("REX/JGG statistics", check_rex),
)


def run_selftest(table: CoefficientTable | None = None, seed: int = 2024) -> list[CheckResult]:
    table = table if table is not None else load_coefficients(bundled_coefficients_path())
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []
    for name, check in CHECKS:
        started = time.perf_counter()
        try:
            detail = check(table, rng)
            passed = True
        except Exception as exc:
            detail = f"{type(exc).__name__}: {exc}"
            passed = False
            logger.error("selftest %s failed: %s", name, detail)
        results.append(CheckResult(name, passed, detail, time.perf_counter() - started))
    return results
