"""
Numeric tolerances and grid defaults shared by every module.
All checks read from one record so acceptance thresholds change in one place.
"""
import math

from pydantic import BaseModel, ConfigDict, Field


class Tolerances(BaseModel):
    """Tolerance record. Defaults are the acceptance values."""

    model_config = ConfigDict(frozen=True)

    # Hermitian claim on a ComplexMatrix / DensityMatrix (relative to Frobenius norm)
    hermitian_rel: float = 1e-13
    # Eigensolver refuses matrices more asymmetric than this
    hermitian_reject_rel: float = 1e-10
    trace_abs: float = 1e-12
    psd_floor: float = 1e-12
    state_norm: float = 1e-12
    outer_norm_reject: float = 1e-9

    # Jacobi eigensolver
    jacobi_off_rel: float = 1e-14
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    real_imag_floor: float = 1e-15
    negative_eig_rel: float = 1e-13

    # Cross-checks
    negativity_agreement: float = 1e-11
    spectrum_trace: float = 1e-11
    oracle_agreement: float = 1e-11
    pi_agreement: float = 1e-10
    template_abs: float = 1e-14
    symmetry_abs: float = 1e-13
    two_tangle_ceiling: float = 1e-11
    range_slack: float = 1e-12
    single_acceleration_abs: float = 1e-15

    # Series residual: |dpi - series| <= series_constant * max(r)^6 inside the window
    series_window: float = 0.15
    series_constant: float = 2.0
    # Rounding floor for the residual bound; pi values near 1 carry ~1e-16 error
    series_floor: float = 1e-15

    # Random Hermitian matrices drawn by the eigensolver soundness suite
    eigen_samples: int = Field(default=200, ge=1)
    single_acceleration_samples: int = Field(default=100, ge=1)
    random_seed: int = 20241


TOLERANCES = Tolerances()

# Acceleration parameter range (pi/4 is infinite acceleration, inclusive)
R_MIN = 0.0
R_MAX = math.pi / 4

DEFAULT_GRID_N = 33
MAX_GRID_N = 4096

SWEEP_SCHEMA_LINE = "# unruh-tangle sweep v1"
