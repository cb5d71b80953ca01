import math

import numpy as np
import pytest

from vqebench.errors import RegisterSizeError
from vqebench.pauli import HamiltonianSpec, PauliString, PauliTerm, dense_matrix
from vqebench.sim import (
    GateKind,
    GateOp,
    StateVector,
    apply_gate,
    apply_pauli_exponential,
    expectation,
    init_basis_state,
    inner_product,
    overlap,
    pauli_exponential_gates,
)


def _random_state(rng: np.random.Generator, n: int = 4) -> StateVector:
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return StateVector.from_amplitudes(amps, normalize=True)


def test_basis_state_indexing() -> None:
    assert init_basis_state("1000").amplitudes[8] == 1.0
    assert init_basis_state("0000").amplitudes[0] == 1.0
    assert init_basis_state("1100").amplitudes[12] == 1.0
    with pytest.raises(RegisterSizeError):
        init_basis_state("100", n_qubits=4)
    with pytest.raises(ValueError):
        init_basis_state("10a0")


def test_state_rejects_unnormalized_amplitudes() -> None:
    with pytest.raises(ValueError):
        StateVector.from_amplitudes([1.0, 1.0])
    with pytest.raises(RegisterSizeError):
        StateVector.from_amplitudes([1.0, 0.0, 0.0])


def test_hadamard_on_zero() -> None:
    out = apply_gate(init_basis_state("0"), GateOp.h(0))
    assert np.allclose(out.amplitudes, [1 / math.sqrt(2), 1 / math.sqrt(2)])


def test_cnot_flips_target_when_control_set() -> None:
    out = apply_gate(init_basis_state("10"), GateOp.cnot(0, 1))
    assert np.allclose(out.amplitudes, init_basis_state("11").amplitudes)
    out = apply_gate(init_basis_state("01"), GateOp.cnot(0, 1))
    assert np.allclose(out.amplitudes, init_basis_state("01").amplitudes)


def test_rz_full_turn_is_minus_identity() -> None:
    state = _random_state(np.random.default_rng(3), n=2)
    out = apply_gate(state, GateOp.rz(1, 2 * math.pi))
    assert np.allclose(out.amplitudes, -state.amplitudes)


def test_gate_validation() -> None:
    with pytest.raises(ValueError):
        GateOp.cnot(1, 1)
    with pytest.raises(RegisterSizeError):
        apply_gate(init_basis_state("00"), GateOp.h(2))
    with pytest.raises(ValueError):
        GateOp(GateKind.H, (0, 1))


def test_pauli_exponential_examples() -> None:
    zero = init_basis_state("0000")
    out = apply_pauli_exponential(zero, PauliString("XZYI"), 0.0)
    assert np.allclose(out.amplitudes, zero.amplitudes)
    out = apply_pauli_exponential(zero, PauliString("ZIII"), math.pi / 2)
    assert np.allclose(out.amplitudes, -1j * zero.amplitudes)
    out = apply_pauli_exponential(zero, PauliString("XIII"), math.pi / 2)
    assert np.allclose(out.amplitudes, -1j * init_basis_state("1000").amplitudes)


def test_identity_string_is_global_phase() -> None:
    state = _random_state(np.random.default_rng(5))
    out = apply_pauli_exponential(state, PauliString("IIII"), 0.3)
    assert np.allclose(out.amplitudes, np.exp(-0.3j) * state.amplitudes)


def test_gate_decomposition_matches_direct_exponential() -> None:
    rng = np.random.default_rng(2024)
    for _ in range(200):
        symbols = "".join(rng.choice(list("IXYZ"), size=4))
        if symbols == "IIII":
            continue
        p = PauliString(symbols)
        theta = float(rng.uniform(-math.pi, math.pi))
        state = _random_state(rng)
        direct = apply_pauli_exponential(state, p, theta)
        gates = apply_pauli_exponential(state, p, theta, method="gates")
        assert np.max(np.abs(direct.amplitudes - gates.amplitudes)) < 1e-12


def test_gate_list_shape() -> None:
    gates = pauli_exponential_gates(PauliString("XZYI"), 0.1)
    kinds = [g.kind for g in gates]
    assert kinds == [
        GateKind.H,
        GateKind.RX_HALF_PI,
        GateKind.CNOT,
        GateKind.CNOT,
        GateKind.RZ,
        GateKind.CNOT,
        GateKind.CNOT,
        GateKind.H,
        GateKind.RX_HALF_PI_DAGGER,
    ]
    assert gates[4].qubits == (2,)
    assert gates[4].theta == pytest.approx(0.2)
    with pytest.raises(ValueError):
        pauli_exponential_gates(PauliString("IIII"), 0.1)


def test_norm_preserved_by_exponentials() -> None:
    rng = np.random.default_rng(11)
    state = _random_state(rng)
    for symbols in ("XYXI", "ZYZI", "YZXZ", "ZZZZ"):
        state = apply_pauli_exponential(state, PauliString(symbols), float(rng.normal()))
    assert abs(np.vdot(state.amplitudes, state.amplitudes).real - 1.0) < 1e-10


def test_inner_product_and_overlap() -> None:
    rng = np.random.default_rng(1)
    psi = _random_state(rng)
    assert inner_product(psi, psi) == pytest.approx(1.0)
    assert inner_product(init_basis_state("1000"), init_basis_state("0100")) == 0
    plus = apply_gate(init_basis_state("0"), GateOp.h(0))
    assert inner_product(plus, init_basis_state("1")).real == pytest.approx(1 / math.sqrt(2))
    assert overlap(plus, init_basis_state("1")) == pytest.approx(0.5)
    with pytest.raises(RegisterSizeError):
        inner_product(plus, psi)


def test_expectation_examples(spec_07: HamiltonianSpec) -> None:
    assert expectation(init_basis_state("0"), [PauliTerm.of("Z", 1.0)]) == pytest.approx(1.0)
    hf = init_basis_state("1000")
    assert expectation(hf, [PauliTerm.of("IIII", -0.42)]) == pytest.approx(-0.42)
    assert expectation(hf, spec_07.terms) == pytest.approx(-1.117349029, abs=1e-8)


def test_expectation_matches_dense_matrix(spec_07: HamiltonianSpec) -> None:
    rng = np.random.default_rng(99)
    h = dense_matrix(spec_07)
    for _ in range(20):
        psi = _random_state(rng)
        dense = np.vdot(psi.amplitudes, h @ psi.amplitudes).real
        assert expectation(psi, spec_07.terms) == pytest.approx(dense, abs=1e-12)


def test_expectation_of_y_on_circular_state() -> None:
    plus_i = StateVector.from_amplitudes([1.0, 1j], normalize=True)
    assert expectation(plus_i, [PauliTerm.of("Y", 1.0)]) == pytest.approx(1.0)
    with pytest.raises(RegisterSizeError):
        expectation(plus_i, [PauliTerm.of("YY", 1.0)])
