"""
Eigenvalues of Hermitian matrices, trace norm and negativity.

The eigensolver is a cyclic Jacobi iteration written here rather than a
LAPACK call. Complex Hermitian input is diagonalized through its real
symmetric embedding [[X, -Y], [Y, X]], whose spectrum is the original one
with every eigenvalue doubled.
"""
from __future__ import annotations

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from unruh.config import TOLERANCES, Tolerances
from unruh.exceptions import ConsistencyError, ConvergenceError, NotHermitianError
from unruh.tensor_core import (
    ComplexMatrix,
    DensityMatrix,
    as_complex_matrix,
    frobenius_norm,
    hermitian_defect,
    partial_transpose,
)

logger = logging.getLogger(__name__)


class Spectrum(BaseModel):
    """Real eigenvalues in ascending order."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: np.ndarray
    source_dim: int

    @field_validator("eigenvalues", mode="before")
    @classmethod
    def _eigenvalues(cls, v):
        a = np.array(v, dtype=np.float64, copy=True)
        if a.ndim != 1:
            raise ValueError("Eigenvalues must be a vector")
        a.setflags(write=False)
        return a

    @model_validator(mode="after")
    def _consistent(self):
        if self.eigenvalues.shape[0] != self.source_dim:
            raise ValueError(
                f"Spectrum has {self.eigenvalues.shape[0]} eigenvalues for a "
                f"{self.source_dim}-dimensional matrix"
            )
        if np.any(np.diff(self.eigenvalues) < 0):
            raise ValueError("Eigenvalues must be in ascending order")
        return self

    @property
    def total(self) -> float:
        return float(np.sum(self.eigenvalues))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """One Jacobi rotation in the (p, q) plane that zeroes a[p, q]."""
    apq = a[p, q]
    app = a[p, p]
    aqq = a[q, q]
    diff = aqq - app
    if abs(apq) < abs(diff) * 1.0e-36:
        t = apq / diff
    else:
        theta = diff / (2.0 * apq)
        t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
        if theta < 0.0:
            t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q

    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = 0.0
    a[q, p] = 0.0


def _off_diagonal_mass(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(sym: np.ndarray, tol: Tolerances = TOLERANCES) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Stops when the off-diagonal Frobenius mass is at most
    jacobi_off_rel * frobenius_norm; raises ConvergenceError after
    jacobi_max_sweeps sweeps.
    """
    a = np.array(sym, dtype=np.float64, copy=True)
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n)

    target = tol.jacobi_off_rel * scale
    # entries at or below this cannot keep the off-diagonal mass above target
    skip = target / n

    for sweep in range(tol.jacobi_max_sweeps + 1):
        off = _off_diagonal_mass(a)
        if off <= target:
            logger.debug("Jacobi converged: n=%d sweeps=%d off=%.3e", n, sweep, off)
            return np.sort(np.diag(a))
        if sweep == tol.jacobi_max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip:
                    _rotate(a, p, q)

    raise ConvergenceError(
        f"Jacobi iteration on a {n}x{n} matrix did not converge in "
        f"{tol.jacobi_max_sweeps} sweeps (off-diagonal mass {off:.3e}, target {target:.3e})"
    )


def hermitian_eigenvalues(m: ComplexMatrix, tol: Tolerances = TOLERANCES) -> Spectrum:
    """All eigenvalues of a Hermitian matrix, ascending."""
    m = as_complex_matrix(m)
    n = m.shape[0]
    scale = frobenius_norm(m)
    defect = hermitian_defect(m)
    if defect > tol.hermitian_reject_rel * scale:
        raise NotHermitianError(
            f"Matrix of dimension {n} is not Hermitian: asymmetry {defect:.3e} "
            f"exceeds {tol.hermitian_reject_rel:.0e} x norm {scale:.3e}"
        )

    h = 0.5 * (m + m.conj().T)
    x = h.real
    y = h.imag
    if np.max(np.abs(y)) <= tol.real_imag_floor:
        values = jacobi_eigenvalues(x, tol)
    else:
        embedded = np.block([[x, -y], [y, x]])
        doubled = jacobi_eigenvalues(embedded, tol)
        values = 0.5 * (doubled[0::2] + doubled[1::2])

    return Spectrum(eigenvalues=values, source_dim=n)


def trace_norm(m: ComplexMatrix, tol: Tolerances = TOLERANCES) -> float:
    """Sum of singular values; for Hermitian input, the sum of |eigenvalues|."""
    spectrum = hermitian_eigenvalues(m, tol)
    return float(np.sum(np.abs(spectrum.eigenvalues)))


def negativity_formulations(m: ComplexMatrix, tol: Tolerances = TOLERANCES) -> tuple[float, float]:
    """
    (trace norm - 1, twice the negative-eigenvalue mass) for a unit-trace
    Hermitian matrix. Eigenvalues above -negative_eig_rel * norm count as zero.
    """
    m = as_complex_matrix(m)
    values = hermitian_eigenvalues(m, tol).eigenvalues
    via_norm = float(np.sum(np.abs(values))) - 1.0
    threshold = -tol.negative_eig_rel * frobenius_norm(m)
    negative = values[values < threshold]
    via_negative = 2.0 * float(np.sum(np.abs(negative)))
    return via_norm, via_negative


def negativity_of_matrix(m: ComplexMatrix, tol: Tolerances = TOLERANCES) -> float:
    """Trace norm minus one, cross-checked against the negative-eigenvalue mass."""
    via_norm, via_negative = negativity_formulations(m, tol)
    if abs(via_norm - via_negative) > tol.negativity_agreement:
        raise ConsistencyError(
            f"Negativity formulations disagree: trace norm - 1 = {via_norm:.15g}, "
            f"2 x negative mass = {via_negative:.15g}. "
            f"This points at an eigensolver defect or a non-unit-trace input."
        )
    return via_norm


def negativity(rho: DensityMatrix, target: str, tol: Tolerances = TOLERANCES) -> float:
    """||rho^{T_target}||_1 - 1"""
    return negativity_of_matrix(partial_transpose(rho, target), tol)
