import math

import numpy as np
import pytest

from vqebench.ansatz import (
    HARTREE_FOCK_BITS,
    AnsatzMode,
    ParameterVector,
    build_ansatz,
    build_uccsd_generators,
    prepare_state,
    uccsd_excitations,
)
from vqebench.objective import energy_term
from vqebench.optimize import central_difference_gradient
from vqebench.pauli import HamiltonianSpec, PauliString, number_operator
from vqebench.sim import apply_pauli_exponential, expectation, init_basis_state


def test_generators_one_string_per_excitation() -> None:
    generators = build_uccsd_generators()
    assert len(generators) == 5
    assert generators[-1].active_qubits == (0, 1, 2, 3)
    assert [e.name for e in uccsd_excitations()] == ["0->2", "1->3", "0->3", "1->2", "01->23"]


def test_generator_groups_commute() -> None:
    for excitation in uccsd_excitations():
        strings = [t.string for t in excitation.terms]
        assert excitation.representative in strings
        for i, p in enumerate(strings):
            for q in strings[i + 1 :]:
                assert p.commutes_with(q)


def test_generator_rotations_conserve_particle_number() -> None:
    hf = init_basis_state(HARTREE_FOCK_BITS)
    n_terms = number_operator()
    for p in build_uccsd_generators():
        out = apply_pauli_exponential(hf, p, math.pi / 4)
        assert expectation(out, n_terms) == pytest.approx(2.0, abs=1e-10)


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_parameter_count_law(depth: int, spec_07: HamiltonianSpec) -> None:
    cluster = build_ansatz(depth, AnsatzMode.CLUSTER_ONLY)
    combined = build_ansatz(depth, "cluster_plus_hamiltonian", spec_07)
    assert cluster.n_params == 5 * depth
    assert combined.n_params == 20 * depth
    assert len(combined.factors) == combined.n_params
    assert combined.n_cluster_params == 5 * depth
    assert combined.hamiltonian_indices == tuple(range(5 * depth, 20 * depth))


def test_depth_two_combined_has_forty_parameters(spec_07: HamiltonianSpec) -> None:
    ansatz = build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, spec_07)
    assert ansatz.n_params == 40
    assert build_ansatz(2, AnsatzMode.CLUSTER_ONLY).n_params == 10


def test_build_ansatz_validation() -> None:
    with pytest.raises(ValueError):
        build_ansatz(0, AnsatzMode.CLUSTER_ONLY)
    with pytest.raises(ValueError):
        build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN)


def test_zero_parameters_give_hartree_fock(spec_07: HamiltonianSpec) -> None:
    ansatz = build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, spec_07)
    state = prepare_state(ansatz, np.zeros(ansatz.n_params))
    assert np.allclose(state.amplitudes, init_basis_state("1000").amplitudes)
    with_vector = prepare_state(ansatz, ParameterVector.zeros(ansatz.n_params))
    assert np.allclose(with_vector.amplitudes, state.amplitudes)


def test_prepare_state_rejects_wrong_length() -> None:
    ansatz = build_ansatz(1, AnsatzMode.CLUSTER_ONLY)
    with pytest.raises(ValueError):
        prepare_state(ansatz, np.zeros(4))


def test_prepare_state_is_deterministic_and_normalized(spec_07: HamiltonianSpec) -> None:
    ansatz = build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, spec_07)
    theta = np.random.default_rng(4).uniform(-math.pi, math.pi, ansatz.n_params)
    a = prepare_state(ansatz, theta)
    b = prepare_state(ansatz, theta)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert abs(np.vdot(a.amplitudes, a.amplitudes).real - 1.0) < 1e-10


def test_first_factor_applies_positive_exponent() -> None:
    ansatz = build_ansatz(1, AnsatzMode.CLUSTER_ONLY)
    theta = np.zeros(ansatz.n_params)
    theta[0] = 0.3
    p: PauliString = ansatz.factors[0].string
    expected = np.cos(0.3) * init_basis_state("1000").amplitudes + 1j * np.sin(0.3) * (
        p.matrix() @ init_basis_state("1000").amplitudes
    )
    assert np.allclose(prepare_state(ansatz, theta).amplitudes, expected)


def test_parameter_vector_bounds() -> None:
    vec = ParameterVector.zeros(3)
    assert len(vec) == 3
    assert np.all(vec.lower == -math.pi)
    assert np.all(vec.upper == math.pi)
    with pytest.raises(ValueError):
        vec.with_values([0.0, 0.0])


def test_energy_gradient_is_step_size_stable(spec_07: HamiltonianSpec) -> None:
    ansatz = build_ansatz(2, AnsatzMode.CLUSTER_PLUS_HAMILTONIAN, spec_07)

    def energy(theta: np.ndarray) -> float:
        return energy_term(theta, ansatz, spec_07)

    rng = np.random.default_rng(21)
    for _ in range(20):
        theta = rng.uniform(-math.pi, math.pi, ansatz.n_params)
        coarse = central_difference_gradient(energy, theta, h=1e-5)
        fine = central_difference_gradient(energy, theta, h=1e-6)
        assert np.allclose(fine, coarse, rtol=1e-3, atol=1e-6)
