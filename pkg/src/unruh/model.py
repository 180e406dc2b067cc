"""
The Unruh-transformed GHZ state shared by Alice (inertial) and two
uniformly accelerated observers, Bob and Charlie.

Each accelerated party's mode splits into a region-I mode, which the
observer can access, and a region-II mode, which is traced out. The
acceleration parameters r_b, r_c run over [0, pi/4]; pi/4 is the infinite
acceleration limit.
"""
from __future__ import annotations

import math
from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from unruh.config import R_MAX, R_MIN
from unruh.exceptions import ParameterRangeError
from unruh.tensor_core import ComplexMatrix, DensityMatrix, PureState, outer, partial_trace


class ModeLabel(StrEnum):
    A = "A"
    B_I = "B_I"
    B_II = "B_II"
    C_I = "C_I"
    C_II = "C_II"


# Canonical order for every index computation
MODES: tuple[ModeLabel, ...] = (ModeLabel.A, ModeLabel.B_I, ModeLabel.B_II, ModeLabel.C_I, ModeLabel.C_II)
ACCESSIBLE_MODES: tuple[ModeLabel, ...] = (ModeLabel.A, ModeLabel.B_I, ModeLabel.C_I)
VERTICES = ACCESSIBLE_MODES


def check_r(name: str, value: float) -> float:
    """Validate one acceleration parameter against [0, pi/4]."""
    value = float(value)
    if not (R_MIN <= value <= R_MAX):
        raise ParameterRangeError(
            f"Acceleration parameter {name}={value!r} is outside [0, pi/4] "
            f"(pi/4 = {R_MAX!r} is infinite acceleration)"
        )
    return value


class AccelPair(BaseModel):
    """The two acceleration parameters (radians)."""

    model_config = ConfigDict(frozen=True)

    r_b: float
    r_c: float

    @field_validator("r_b", "r_c")
    @classmethod
    def _in_range(cls, v: float, info) -> float:
        return check_r(info.field_name, v)

    @classmethod
    def of(cls, r_b: float, r_c: float) -> "AccelPair":
        """Positional constructor that raises ParameterRangeError instead of ValidationError."""
        try:
            return cls(r_b=r_b, r_c=r_c)
        except ValidationError as e:
            raise ParameterRangeError(e.errors()[0]["msg"]) from e

    def swapped(self) -> "AccelPair":
        return AccelPair(r_b=self.r_c, r_c=self.r_b)

    def as_tuple(self) -> tuple[float, float]:
        return (self.r_b, self.r_c)


def accel_grid(grid_n: int) -> list[AccelPair]:
    """
    Inclusive uniform grid over [0, pi/4]^2, row-major in r_b then r_c.
    """
    if grid_n < 2:
        raise ParameterRangeError(f"Grid needs at least 2 points per axis, got {grid_n}")
    axis = np.linspace(R_MIN, R_MAX, grid_n)
    return [AccelPair(r_b=float(rb), r_c=float(rc)) for rb in axis for rc in axis]


def _ket(bits: str) -> int:
    return int(bits, 2)


def build_phi(p: AccelPair) -> PureState:
    """
    Five-mode state over (A, B_I, B_II, C_I, C_II):

        (1/sqrt2) [cb cc |00000> + cb sc |00011> + sb cc |01100>
                   + sb sc |01111> + |11010>]
    """
    cb, sb = math.cos(p.r_b), math.sin(p.r_b)
    cc, sc = math.cos(p.r_c), math.sin(p.r_c)
    h = 1.0 / math.sqrt(2.0)

    amplitudes = np.zeros(2 ** len(MODES), dtype=np.complex128)
    amplitudes[_ket("00000")] = h * cb * cc
    amplitudes[_ket("00011")] = h * cb * sc
    amplitudes[_ket("01100")] = h * sb * cc
    amplitudes[_ket("01111")] = h * sb * sc
    amplitudes[_ket("11010")] = h
    return PureState(modes=MODES, amplitudes=amplitudes)


def rho_abici(p: AccelPair) -> DensityMatrix:
    """Reduced state over (A, B_I, C_I) after tracing out the region-II modes."""
    return partial_trace(outer(build_phi(p)), ACCESSIBLE_MODES)


def two_mode_reductions(p: AccelPair) -> tuple[DensityMatrix, DensityMatrix, DensityMatrix]:
    """(rho_AB_I, rho_AC_I, rho_B_IC_I)"""
    rho = rho_abici(p)
    return reductions_of(rho)


def reductions_of(rho: DensityMatrix) -> tuple[DensityMatrix, DensityMatrix, DensityMatrix]:
    return (
        partial_trace(rho, {ModeLabel.A, ModeLabel.B_I}),
        partial_trace(rho, {ModeLabel.A, ModeLabel.C_I}),
        partial_trace(rho, {ModeLabel.B_I, ModeLabel.C_I}),
    )


def rho_abici_template(p: AccelPair) -> ComplexMatrix:
    """
    The seven-term closed form of the (A, B_I, C_I) state, built entry by entry.
    """
    cb, sb = math.cos(p.r_b), math.sin(p.r_b)
    cc, sc = math.cos(p.r_c), math.sin(p.r_c)
    m = np.zeros((8, 8), dtype=np.complex128)
    m[0, 0] = cb**2 * cc**2
    m[1, 1] = cb**2 * sc**2
    m[2, 2] = sb**2 * cc**2
    m[3, 3] = sb**2 * sc**2
    m[0, 7] = m[7, 0] = cb * cc
    m[7, 7] = 1.0
    return 0.5 * m


# Coupling positions of the single off-diagonal pair after transposing each vertex
_TEMPLATE_COUPLING = {
    ModeLabel.A: (3, 4),
    ModeLabel.B_I: (2, 5),
    ModeLabel.C_I: (1, 6),
}


def partial_transpose_template(p: AccelPair, vertex: str) -> ComplexMatrix:
    """
    Closed-form partial transpose of the (A, B_I, C_I) state over one vertex:
    the same diagonal as the state, one coupling pair cb*cc/2 and the 1/2 corner.
    """
    try:
        i, j = _TEMPLATE_COUPLING[ModeLabel(vertex)]
    except (KeyError, ValueError):
        raise ParameterRangeError(f"Vertex must be one of A, B_I, C_I, got '{vertex}'") from None
    cb, sb = math.cos(p.r_b), math.sin(p.r_b)
    cc, sc = math.cos(p.r_c), math.sin(p.r_c)
    m = np.zeros((8, 8), dtype=np.complex128)
    m[0, 0] = cb**2 * cc**2
    m[1, 1] = cb**2 * sc**2
    m[2, 2] = sb**2 * cc**2
    m[3, 3] = sb**2 * sc**2
    m[i, j] = m[j, i] = cb * cc
    m[7, 7] = 1.0
    return 0.5 * m
