"""
Tests for the accelerated GHZ state and its reductions.
"""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from unruh.config import R_MAX
from unruh.exceptions import ParameterRangeError
from unruh.model import (
    ACCESSIBLE_MODES,
    MODES,
    VERTICES,
    AccelPair,
    ModeLabel,
    accel_grid,
    build_phi,
    partial_transpose_template,
    rho_abici,
    rho_abici_template,
    two_mode_reductions,
)
from unruh.spectra import hermitian_eigenvalues, negativity, trace_norm
from unruh.tensor_core import is_hermitian, partial_trace, partial_transpose

GRID = accel_grid(9)


def test_accel_pair_range():
    AccelPair.of(0.0, R_MAX)
    with pytest.raises(ParameterRangeError):
        AccelPair.of(-0.01, 0.0)
    with pytest.raises(ParameterRangeError):
        AccelPair.of(0.0, 0.8)
    # pydantic path raises its own ValidationError, also a ValueError
    with pytest.raises(ValueError):
        AccelPair(r_b=1.0, r_c=0.0)


def test_accel_grid_order_and_endpoints():
    grid = accel_grid(3)
    assert len(grid) == 9
    assert grid[0].as_tuple() == (0.0, 0.0)
    assert grid[1].as_tuple() == pytest.approx((0.0, math.pi / 8))
    assert grid[4].as_tuple() == pytest.approx((math.pi / 8, math.pi / 8))
    assert grid[-1].as_tuple() == (R_MAX, R_MAX)
    with pytest.raises(ParameterRangeError):
        accel_grid(1)


def test_phi_at_rest_is_ghz():
    psi = build_phi(AccelPair.of(0.0, 0.0))
    assert psi.modes == tuple(MODES)
    expected = np.zeros(32)
    expected[0b00000] = expected[0b11010] = 1 / math.sqrt(2)
    assert_allclose(psi.amplitudes, expected, atol=1e-16)


@pytest.mark.parametrize("p", GRID[::7])
def test_phi_is_normalized(p):
    assert build_phi(p).is_normalized()


def test_phi_infinite_acceleration():
    psi = build_phi(AccelPair.of(R_MAX, R_MAX))
    for ket in (0b00000, 0b00011, 0b01100, 0b01111):
        assert psi.amplitudes[ket] == pytest.approx(0.5 / math.sqrt(2))
    assert np.count_nonzero(psi.amplitudes) == 5


def test_rho_abici_at_rest():
    rho = rho_abici(AccelPair.of(0.0, 0.0))
    assert rho.modes == tuple(ACCESSIBLE_MODES)
    expected = np.zeros((8, 8))
    expected[0, 0] = expected[0, 7] = expected[7, 0] = expected[7, 7] = 0.5
    assert_allclose(rho.matrix, expected, atol=1e-16)


@pytest.mark.parametrize("p", GRID)
def test_rho_abici_matches_template(p):
    rho = rho_abici(p)
    assert np.max(np.abs(rho.matrix - rho_abici_template(p))) <= 1e-14
    assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("vertex", list(ACCESSIBLE_MODES))
def test_partial_transposes_match_templates(vertex):
    for p in GRID:
        pt = partial_transpose(rho_abici(p), vertex)
        assert np.max(np.abs(pt - partial_transpose_template(p, vertex))) <= 1e-14


def test_template_coupling_positions():
    p = AccelPair.of(0.3, 0.5)
    coupling = math.cos(0.3) * math.cos(0.5) / 2
    assert partial_transpose_template(p, "A")[3, 4] == pytest.approx(coupling)
    assert partial_transpose_template(p, "B_I")[2, 5] == pytest.approx(coupling)
    assert partial_transpose_template(p, "C_I")[1, 6] == pytest.approx(coupling)
    with pytest.raises(ParameterRangeError):
        partial_transpose_template(p, "B_II")


def test_exchange_symmetry_of_state():
    """Swapping r_b and r_c equals relabeling B_I <-> C_I."""
    for p in GRID[::5]:
        m = rho_abici(p).matrix.reshape((2,) * 6).transpose(0, 2, 1, 3, 5, 4).reshape(8, 8)
        assert_allclose(m, rho_abici(p.swapped()).matrix, atol=1e-14)


def test_two_mode_reductions_are_diagonal():
    ab, ac, bc = two_mode_reductions(AccelPair.of(0.4, 0.2))
    assert ab.modes == (ModeLabel.A, ModeLabel.B_I)
    assert ac.modes == (ModeLabel.A, ModeLabel.C_I)
    assert bc.modes == (ModeLabel.B_I, ModeLabel.C_I)
    for r in (ab, ac, bc):
        off = r.matrix - np.diag(np.diag(r.matrix))
        assert np.max(np.abs(off)) <= 1e-16


def test_rho_abici_is_positive():
    rho_abici(AccelPair.of(R_MAX, 0.2)).check_positive()


def test_reduction_to_alice_at_rest_is_maximally_mixed():
    reduced = partial_trace(rho_abici(AccelPair.of(0.0, 0.0)), {ModeLabel.A})
    assert reduced.modes == (ModeLabel.A,)
    assert_allclose(reduced.matrix, np.eye(2) / 2, atol=1e-16)


def test_bob_charlie_reduction_is_a_state():
    bc = two_mode_reductions(AccelPair.of(0.4, 0.6))[2]
    assert np.trace(bc.matrix) == pytest.approx(1.0, abs=1e-12)
    assert is_hermitian(bc.matrix)
    bc.check_positive()
    assert hermitian_eigenvalues(bc.matrix).eigenvalues[0] >= -1e-12


@pytest.mark.parametrize("p", GRID)
def test_unit_trace_norm_and_nonnegative_negativity(p):
    rho = rho_abici(p)
    assert trace_norm(rho.matrix) == pytest.approx(1.0, abs=1e-11)
    for vertex in VERTICES:
        assert negativity(rho, vertex) >= -1e-12
