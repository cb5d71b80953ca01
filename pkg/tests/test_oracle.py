import numpy as np
import pytest

from vqebench.errors import EigenSolverError, NonHermitianError
from vqebench.oracle import (
    classify,
    full_spectrum,
    jacobi_eigh,
    off_diagonal_norm,
    reference_energies,
    reference_levels,
)
from vqebench.pauli import CoefficientTable, HamiltonianSpec, PauliTerm, dense_matrix

# r -> (ground, triplet, singlet, doubly), full CI in the bundled STO-3G basis
REFERENCE_LEVELS = {
    0.1: (2.709960788, 4.586612204, 4.898952403, 6.831070358),
    0.7: (-1.136189447, -0.478453053, -0.120451913, 0.583314087),
    1.0: (-1.101150323, -0.745871786, -0.352290628, 0.039047628),
    2.5: (-0.936054912, -0.931639078, -0.367218997, -0.361293484),
}


def _random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def test_jacobi_matches_reference_eigensolver() -> None:
    rng = np.random.default_rng(31)
    for n in (2, 5, 16):
        h = _random_hermitian(rng, n)
        values, vectors = jacobi_eigh(h)
        assert np.allclose(values, np.linalg.eigvalsh(h), atol=1e-10)
        assert np.max(np.abs(vectors.conj().T @ vectors - np.eye(n))) < 1e-9
        assert np.allclose(h @ vectors, vectors * values, atol=1e-9)
        assert np.all(np.diff(values) >= 0.0)


def test_jacobi_rejects_non_hermitian_input() -> None:
    with pytest.raises(NonHermitianError):
        jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        jacobi_eigh(np.zeros((2, 3)))


def test_jacobi_reports_non_convergence() -> None:
    h = _random_hermitian(np.random.default_rng(32), 6)
    with pytest.raises(EigenSolverError):
        jacobi_eigh(h, max_sweeps=0)


def test_off_diagonal_norm() -> None:
    assert off_diagonal_norm(np.diag([1.0, 2.0]).astype(complex)) == 0.0
    assert off_diagonal_norm(np.array([[0, 3], [4, 0]], dtype=complex)) == pytest.approx(5.0)


def test_single_z_spectrum() -> None:
    entries = full_spectrum([PauliTerm.of("ZIII", 1.0)])
    energies = np.array([e.energy for e in entries])
    assert np.allclose(energies[:8], -1.0)
    assert np.allclose(energies[8:], 1.0)


def test_spectrum_trace_and_orthonormality(spec_07: HamiltonianSpec) -> None:
    entries = full_spectrum(spec_07)
    assert len(entries) == 16
    total = sum(e.energy for e in entries)
    assert total == pytest.approx(16 * spec_07.coefficient("IIII"), abs=1e-10)
    v = np.column_stack([e.eigenvector.amplitudes for e in entries])
    assert np.max(np.abs(v.conj().T @ v - np.eye(16))) < 1e-9
    h = dense_matrix(spec_07)
    for e in entries:
        psi = e.eigenvector.amplitudes
        assert np.allclose(h @ psi, e.energy * psi, atol=1e-9)


@pytest.mark.parametrize("r", sorted(REFERENCE_LEVELS))
def test_reference_levels_match_full_ci(table: CoefficientTable, r: float) -> None:
    levels = reference_levels(table.spec_at(r))
    ground, triplet, singlet, doubly = REFERENCE_LEVELS[r]
    assert levels.ground == pytest.approx(ground, abs=1e-8)
    assert levels.triplet == pytest.approx(triplet, abs=1e-8)
    assert levels.singlet == pytest.approx(singlet, abs=1e-8)
    assert levels.doubly == pytest.approx(doubly, abs=1e-8)
    assert levels.level("doubly") == levels.doubly


def test_classification_at_equilibrium(spec_07: HamiltonianSpec) -> None:
    entries = classify(full_spectrum(spec_07))
    labels = [e.label for e in entries]
    assert labels.count("ground") == 1
    assert labels.count("singlet") == 1
    assert labels.count("doubly") == 1
    triplets = [e for e in entries if e.label == "triplet"]
    assert len(triplets) == 3
    assert max(e.energy for e in triplets) - min(e.energy for e in triplets) < 1e-9
    assert sorted(round(e.s_z) for e in triplets) == [-1, 0, 1]
    for e in entries:
        if round(e.n_particles) % 2 == 1:
            assert e.label == "doublet_local_min"


def test_classification_orders_degenerate_levels_by_spin(spec_07: HamiltonianSpec) -> None:
    entries = classify(full_spectrum(spec_07))
    for a, b in zip(entries, entries[1:]):
        assert a.energy <= b.energy + 1e-9
        if abs(a.energy - b.energy) <= 1e-9:
            assert (a.s_squared, a.s_z) <= (b.s_squared + 1e-9, b.s_z + 1e-9)


def test_reference_energies_over_bundled_grid(table: CoefficientTable) -> None:
    refs = reference_energies(table)
    assert len(refs) == 25
    for levels in refs.values():
        assert levels.ground < levels.triplet < levels.singlet <= levels.doubly
    grounds = {r: lv.ground for r, lv in refs.items()}
    assert min(grounds, key=grounds.__getitem__) == pytest.approx(0.7)
    assert max(grounds, key=grounds.__getitem__) == pytest.approx(0.1)
