import pytest

from vqebench.pauli import CoefficientTable, HamiltonianSpec, load_coefficients
from vqebench.pauli.hamiltonian import bundled_coefficients_path


@pytest.fixture(scope="session")
def table() -> CoefficientTable:
    return load_coefficients(bundled_coefficients_path())


@pytest.fixture(scope="session")
def spec_07(table: CoefficientTable) -> HamiltonianSpec:
    return table.spec_at(0.7)
