"""
Dense complex tensor algebra over ordered collections of two-level modes.

Basis convention: the first listed mode is the most significant bit of the
basis index, so for modes (A, B, C) the basis runs |000>, |001>, ..., |111>.
All matrices are dense numpy complex128 arrays; dimensions here never exceed 32.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from typing import TypeAlias

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator, model_validator

from unruh.config import TOLERANCES, Tolerances
from unruh.exceptions import EmptySubsystemError, ModeLabelError, NormalizationError

logger = logging.getLogger(__name__)

ComplexMatrix: TypeAlias = npt.NDArray[np.complex128]


def as_complex_matrix(values) -> ComplexMatrix:
    """Coerce to a square complex128 array (dim >= 1)."""
    m = np.array(values, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"Expected a non-empty square matrix, got shape {m.shape}")
    return m


def frobenius_norm(m: ComplexMatrix) -> float:
    return float(np.linalg.norm(m))


def hermitian_defect(m: ComplexMatrix) -> float:
    """max |M[i][j] - conj(M[j][i])|"""
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m: ComplexMatrix, rel_tol: float | None = None) -> bool:
    """Hermitian within rel_tol * frobenius_norm(m)."""
    if rel_tol is None:
        rel_tol = TOLERANCES.hermitian_rel
    return hermitian_defect(m) <= rel_tol * frobenius_norm(m)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


def _check_modes(modes: Sequence[str]) -> tuple[str, ...]:
    modes = tuple(modes)
    if not modes:
        raise ValueError("At least one mode is required")
    if len(set(modes)) != len(modes):
        raise ValueError(f"Duplicate mode labels in {modes}")
    return modes


class PureState(BaseModel):
    """Amplitude vector over an ordered list of two-level modes."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    modes: tuple[str, ...]
    amplitudes: np.ndarray

    @field_validator("modes", mode="before")
    @classmethod
    def _modes(cls, v):
        return _check_modes(v)

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _amplitudes(cls, v):
        a = np.asarray(v, dtype=np.complex128)
        if a.ndim != 1:
            raise ValueError(f"Amplitudes must be a vector, got shape {a.shape}")
        return _readonly(a)

    @model_validator(mode="after")
    def _shape_matches_modes(self):
        expected = 2 ** len(self.modes)
        if self.amplitudes.shape[0] != expected:
            raise ValueError(
                f"{len(self.modes)} modes need {expected} amplitudes, "
                f"got {self.amplitudes.shape[0]}"
            )
        return self

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def is_normalized(self, tol: float | None = None) -> bool:
        if tol is None:
            tol = TOLERANCES.state_norm
        return abs(self.norm ** 2 - 1.0) <= tol


class DensityMatrix(BaseModel):
    """
    Hermitian, unit-trace, positive-semidefinite matrix over an ordered mode subset.

    Shape, Hermiticity, trace and positivity are validated on construction.
    Validating with context {"rank_one": True} skips the eigensolver; outer()
    does this for the projectors it builds.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    modes: tuple[str, ...]
    matrix: np.ndarray

    @field_validator("modes", mode="before")
    @classmethod
    def _modes(cls, v):
        return _check_modes(v)

    @field_validator("matrix", mode="before")
    @classmethod
    def _matrix(cls, v):
        return _readonly(as_complex_matrix(v))

    @model_validator(mode="after")
    def _physical(self, info: ValidationInfo):
        expected = 2 ** len(self.modes)
        if self.matrix.shape != (expected, expected):
            raise ValueError(
                f"{len(self.modes)} modes need a {expected}x{expected} matrix, "
                f"got {self.matrix.shape}"
            )
        if not is_hermitian(self.matrix):
            raise ValueError(
                f"Density matrix is not Hermitian (defect {hermitian_defect(self.matrix):.3e})"
            )
        tr = complex(np.trace(self.matrix))
        if abs(tr - 1.0) > TOLERANCES.trace_abs:
            raise ValueError(f"Density matrix trace is {tr}, expected 1")
        if not (info.context or {}).get("rank_one"):
            self.check_positive()
        return self

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        """tr(rho^2)"""
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def check_positive(self, tol: Tolerances = TOLERANCES) -> None:
        """Raise ValueError if any eigenvalue is below -psd_floor."""
        from unruh.spectra import hermitian_eigenvalues

        lowest = float(hermitian_eigenvalues(self.matrix, tol=tol).eigenvalues[0])
        if lowest < -tol.psd_floor:
            raise ValueError(f"Density matrix is not positive semidefinite (min eigenvalue {lowest:.3e})")


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product; result[(i*db+k),(j*db+l)] = a[i][j] * b[k][l]."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def outer(psi: PureState, tol: Tolerances = TOLERANCES) -> DensityMatrix:
    """Projector |psi><psi| as a DensityMatrix."""
    deviation = abs(psi.norm - 1.0)
    if deviation > tol.outer_norm_reject:
        raise NormalizationError(
            f"State over modes {psi.modes} has norm {psi.norm:.15g}; "
            f"a projector needs unit norm (deviation {deviation:.3e} > {tol.outer_norm_reject:.0e})"
        )
    amp = psi.amplitudes
    return DensityMatrix.model_validate(
        {"modes": psi.modes, "matrix": np.outer(amp, amp.conj())},
        context={"rank_one": True},
    )


def _mode_index(modes: tuple[str, ...], label: str) -> int:
    try:
        return modes.index(label)
    except ValueError:
        raise ModeLabelError(f"Unknown mode label '{label}'; available modes: {', '.join(modes)}") from None


def partial_trace(rho: DensityMatrix, keep: Iterable[str]) -> DensityMatrix:
    """
    Trace out every mode not in keep.

    Result modes follow rho.modes order, not the order of keep.
    """
    keep = set(keep)
    if not keep:
        raise EmptySubsystemError("Partial trace needs at least one mode to keep")
    for label in keep:
        _mode_index(rho.modes, label)

    n = len(rho.modes)
    kept = tuple(m for m in rho.modes if m in keep)
    if len(kept) == n:
        return rho

    # einsum subscripts: row index letters then column letters; traced modes share a letter
    letters = "abcdefghijklmnopqrstuvwxyz"
    rows = [letters[i] for i in range(n)]
    cols = [rows[i] if rho.modes[i] not in keep else letters[n + i] for i in range(n)]
    out = [rows[i] for i in range(n) if rho.modes[i] in keep] + [
        cols[i] for i in range(n) if rho.modes[i] in keep
    ]
    subscripts = "".join(rows) + "".join(cols) + "->" + "".join(out)

    tensor = rho.matrix.reshape((2,) * (2 * n))
    reduced_dim = 2 ** len(kept)
    reduced = np.einsum(subscripts, tensor).reshape(reduced_dim, reduced_dim)
    logger.debug("partial_trace %s -> %s", rho.modes, kept)
    return DensityMatrix(modes=kept, matrix=reduced)


def partial_transpose(rho: DensityMatrix, target: str) -> ComplexMatrix:
    """Swap the target mode's bit between row and column indices."""
    k = _mode_index(rho.modes, target)
    n = len(rho.modes)
    tensor = rho.matrix.reshape((2,) * (2 * n))
    swapped = np.swapaxes(tensor, k, n + k)
    return np.array(swapped, copy=True).reshape(rho.dim, rho.dim)
