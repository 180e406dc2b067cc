"""
Tests for the dense tensor core: states, density matrices, partial trace and transpose.
"""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from unruh.config import Tolerances
from unruh.exceptions import EmptySubsystemError, ModeLabelError, NormalizationError
from unruh.tensor_core import (
    DensityMatrix,
    PureState,
    is_hermitian,
    kron,
    outer,
    partial_trace,
    partial_transpose,
)


def bell_state() -> PureState:
    amp = np.zeros(4, dtype=complex)
    amp[0] = amp[3] = 1 / np.sqrt(2)
    return PureState(modes=("X", "Y"), amplitudes=amp)


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = a @ a.conj().T
    return m / np.trace(m)


def test_pure_state_shape_must_match_modes():
    """Three modes need eight amplitudes."""
    with pytest.raises(ValueError):
        PureState(modes=("A", "B", "C"), amplitudes=np.ones(4))


def test_pure_state_rejects_duplicate_modes():
    with pytest.raises(ValueError):
        PureState(modes=("A", "A"), amplitudes=np.ones(4) / 2)


def test_pure_state_is_immutable():
    psi = bell_state()
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 0.0


def test_outer_of_bell_state():
    rho = outer(bell_state())
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
    assert_allclose(rho.matrix, expected, atol=1e-15)
    assert rho.purity() == pytest.approx(1.0)


def test_outer_rejects_unnormalized_state():
    psi = PureState(modes=("A",), amplitudes=[1.0, 1.0])
    with pytest.raises(NormalizationError):
        outer(psi)


def test_density_matrix_rejects_bad_trace_and_asymmetry():
    with pytest.raises(ValueError):
        DensityMatrix(modes=("A",), matrix=np.diag([0.5, 0.4]))
    with pytest.raises(ValueError):
        DensityMatrix(modes=("A",), matrix=[[0.5, 0.3], [0.1, 0.5]])


def test_density_matrix_rejects_negative_eigenvalue():
    """Unit trace and Hermitian, but eigenvalues 1.5 and -0.5."""
    with pytest.raises(ValueError, match="positive semidefinite"):
        DensityMatrix(modes=("A",), matrix=[[0.5, 1.0], [1.0, 0.5]])


def test_density_matrix_tolerates_noise_below_floor():
    m = np.diag([1.0 + 5e-13, -5e-13])
    rho = DensityMatrix(modes=("A",), matrix=m)
    rho.check_positive()


def test_check_positive_with_tighter_floor():
    rho = DensityMatrix(modes=("A",), matrix=np.diag([1.0 + 5e-13, -5e-13]))
    with pytest.raises(ValueError):
        rho.check_positive(Tolerances(psd_floor=1e-13))


def test_kron_index_convention():
    a = np.array([[1, 2], [3, 4]])
    b = np.array([[0, 1], [1, 0]])
    k = kron(a, b)
    assert k.shape == (4, 4)
    # result[(i*db+k),(j*db+l)] = a[i][j] * b[k][l]
    assert k[1, 2] == a[0, 1] * b[1, 0]
    assert k[2, 1] == a[1, 0] * b[0, 1]


def test_kron_identities():
    assert_allclose(kron(np.eye(2), np.eye(2)), np.eye(4), atol=0)
    assert_allclose(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]), atol=0)


def test_kron_is_associative():
    rng = np.random.default_rng(11)
    a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-14)


def test_partial_trace_of_bell_state_is_maximally_mixed():
    reduced = partial_trace(outer(bell_state()), {"X"})
    assert reduced.modes == ("X",)
    assert_allclose(reduced.matrix, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_keeps_mode_order():
    """Kept modes come back in the state's order, not the argument's."""
    amp = np.zeros(8, dtype=complex)
    amp[0b011] = 1.0
    rho = outer(PureState(modes=("A", "B", "C"), amplitudes=amp))
    reduced = partial_trace(rho, ["C", "A"])
    assert reduced.modes == ("A", "C")
    # A=0, C=1 -> index 0b01
    assert reduced.matrix[1, 1] == pytest.approx(1.0)


def test_partial_trace_of_product_returns_factor():
    """Tracing sigma out of rho (x) sigma gives rho back."""
    rng = np.random.default_rng(3)
    r = random_density(rng, 4)
    s = random_density(rng, 2)
    product = DensityMatrix(modes=("A", "B", "C"), matrix=kron(r, s))
    reduced = partial_trace(product, ["A", "B"])
    assert reduced.modes == ("A", "B")
    assert_allclose(reduced.matrix, r, atol=1e-14)


def test_partial_trace_keep_all_and_errors():
    rho = outer(bell_state())
    assert partial_trace(rho, ["X", "Y"]) is rho
    with pytest.raises(EmptySubsystemError):
        partial_trace(rho, [])
    with pytest.raises(ModeLabelError):
        partial_trace(rho, ["Z"])


def test_partial_transpose_of_bell_state():
    """Bell state partial transpose has eigenvalue -1/2."""
    pt = partial_transpose(outer(bell_state()), "X")
    assert pt[1, 2] == pytest.approx(0.5)
    assert pt[0, 3] == pytest.approx(0.0)
    assert is_hermitian(pt)
    assert np.linalg.eigvalsh(pt).min() == pytest.approx(-0.5)


def test_partial_transpose_is_an_involution():
    rng = np.random.default_rng(7)
    # mixing with the identity keeps the transposed matrix positive
    m = 0.9 * np.eye(8) / 8 + 0.1 * random_density(rng, 8)
    rho = DensityMatrix(modes=("A", "B", "C"), matrix=m)
    once = DensityMatrix(modes=rho.modes, matrix=partial_transpose(rho, "B"))
    assert_allclose(partial_transpose(once, "B"), rho.matrix, atol=1e-15)


@pytest.mark.parametrize("target", ["A", "B", "C"])
def test_partial_transpose_preserves_trace(target):
    rho = DensityMatrix(modes=("A", "B", "C"), matrix=random_density(np.random.default_rng(5), 8))
    pt = partial_transpose(rho, target)
    assert np.trace(pt) == pytest.approx(1.0, abs=1e-14)
    assert is_hermitian(pt)


def test_partial_transpose_of_diagonal_matrix_is_itself():
    m = np.diag([0.1, 0.2, 0.3, 0.4])
    rho = DensityMatrix(modes=("X", "Y"), matrix=m)
    for target in ("X", "Y"):
        assert_allclose(partial_transpose(rho, target), m, atol=0)


def test_partial_transpose_unknown_mode():
    with pytest.raises(ModeLabelError):
        partial_transpose(outer(bell_state()), "Q")
