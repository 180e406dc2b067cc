"""
Entanglement of a fermionic GHZ state shared by an inertial observer and two
uniformly accelerated observers.
"""
from unruh.model import AccelPair, ModeLabel, build_phi, rho_abici, two_mode_reductions
from unruh.tangles import (
    Family,
    TangleReport,
    build_report,
    delta_pi_series,
    delta_surfaces,
    one_tangle_corrected,
    one_tangle_legacy,
    one_tangle_numeric,
    one_tangle_single_acceleration,
    pi_tangle,
    single_acceleration_tangles,
    two_tangle,
)
from unruh.sweep import SweepConfig, run_sweep, write_sweep
from unruh.verify import VerifyResult, run_verify

__all__ = [
    "AccelPair",
    "ModeLabel",
    "build_phi",
    "rho_abici",
    "two_mode_reductions",
    "Family",
    "TangleReport",
    "build_report",
    "delta_pi_series",
    "delta_surfaces",
    "one_tangle_corrected",
    "one_tangle_legacy",
    "one_tangle_numeric",
    "one_tangle_single_acceleration",
    "pi_tangle",
    "single_acceleration_tangles",
    "two_tangle",
    "SweepConfig",
    "run_sweep",
    "write_sweep",
    "VerifyResult",
    "run_verify",
]
