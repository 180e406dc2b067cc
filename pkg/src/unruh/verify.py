"""
Self-verification: every invariant of the closed forms, the state and the
eigensolver, checked over an inclusive grid and reported as a pass/fail table.

The corrected one-tangle is injectable so a deliberately broken formula can be
run through the same suites and must be caught.
"""
from __future__ import annotations

import itertools
import logging
import math

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from unruh.config import DEFAULT_GRID_N, R_MAX, TOLERANCES, Tolerances
from unruh.exceptions import ConsistencyError, ConvergenceError
from unruh.model import (
    AccelPair,
    ModeLabel,
    VERTICES,
    accel_grid,
    partial_transpose_template,
    reductions_of,
    rho_abici,
    rho_abici_template,
)
from unruh.spectra import hermitian_eigenvalues, negativity_formulations
from unruh.tangles import (
    INFINITE_ACCELERATION_CORRECTED,
    PAIRS,
    OneTangle,
    closed_pi,
    compose_pi,
    delta_pi_series,
    one_tangle_corrected,
    one_tangle_legacy,
    one_tangle_numeric,
    one_tangle_single_acceleration,
    two_tangle,
)
from unruh.tensor_core import partial_transpose

logger = logging.getLogger(__name__)

SUITES = (
    "oracle-equivalence",
    "symmetry",
    "two-tangle-vanishing",
    "matrix-template",
    "series-residual",
    "range",
    "single-acceleration",
    "eigensolver",
)


class Failure(BaseModel):
    """
    First check that broke inside a suite. r_b/r_c are None off the grid.

    order is the check's position in the whole run: grid points row-major,
    then the single-acceleration samples, then the eigensolver samples.
    """

    model_config = ConfigDict(frozen=True)

    suite: str
    order: int
    r_b: float | None
    r_c: float | None
    quantity: str
    deviation: float
    limit: float

    def describe(self) -> str:
        where = "off-grid" if self.r_b is None else f"r_b={self.r_b!r}, r_c={self.r_c!r}"
        return (
            f"[{self.suite}] {where}, quantity={self.quantity}: "
            f"deviation {self.deviation:.3e} > limit {self.limit:.3e}"
        )


class SuiteResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    checks: int
    max_deviation: float
    failure: Failure | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


class _Tally:
    """Running record for one suite. counter is shared by every suite of a run."""

    def __init__(self, name: str, counter: itertools.count):
        self.name = name
        self.counter = counter
        self.checks = 0
        self.max_deviation = 0.0
        self.failure: Failure | None = None

    def record(self, p: AccelPair | None, quantity: str, deviation: float, limit: float) -> None:
        order = next(self.counter)
        self.checks += 1
        if not math.isnan(deviation):
            self.max_deviation = max(self.max_deviation, deviation)
        # NaN deviations fail
        if not (deviation <= limit) and self.failure is None:
            self.failure = Failure(
                suite=self.name,
                order=order,
                r_b=None if p is None else p.r_b,
                r_c=None if p is None else p.r_c,
                quantity=quantity,
                deviation=deviation,
                limit=limit,
            )
            logger.debug("First failure: %s", self.failure.describe())

    def result(self) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            checks=self.checks,
            max_deviation=self.max_deviation,
            failure=self.failure,
        )


class VerifyResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    grid_n: int
    suites: tuple[SuiteResult, ...]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def first_failure(self) -> Failure | None:
        """Earliest failing check of the run, across suites."""
        failures = [s.failure for s in self.suites if s.failure is not None]
        return min(failures, key=lambda f: f.order, default=None)

    def table(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "suite": s.name,
                    "checks": s.checks,
                    "max_deviation": s.max_deviation,
                    "status": "PASS" if s.passed else "FAIL",
                }
                for s in self.suites
            ]
        )


def _max_abs(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def _swap_b_c(matrix: np.ndarray) -> np.ndarray:
    """Relabel B_I <-> C_I on an (A, B_I, C_I) operator."""
    t = matrix.reshape((2,) * 6)
    return t.transpose(0, 2, 1, 3, 5, 4).reshape(8, 8)


def _safe_numeric(fn, *args) -> float:
    try:
        return fn(*args)
    except (ConsistencyError, ConvergenceError) as e:
        logger.warning("Numeric evaluation failed: %s", e)
        return math.nan


def _check_point(
    p: AccelPair,
    corrected: OneTangle,
    tally: dict[str, _Tally],
    tol: Tolerances,
) -> None:
    rho = rho_abici(p)
    reductions = reductions_of(rho)

    # oracle-equivalence
    closed = {v: corrected(p, v) for v in VERTICES}
    numeric = {v: _safe_numeric(one_tangle_numeric, p, v, rho) for v in VERTICES}
    for v in VERTICES:
        tally["oracle-equivalence"].record(
            p, f"one_tangle[{v}]", abs(closed[v] - numeric[v]), tol.oracle_agreement
        )

    # symmetry
    q = p.swapped()
    for family, fn in (("corrected", corrected), ("legacy", one_tangle_legacy)):
        tally["symmetry"].record(
            p, f"{family} N_A swap", abs(fn(p, ModeLabel.A) - fn(q, ModeLabel.A)), tol.symmetry_abs
        )
        tally["symmetry"].record(
            p,
            f"{family} N_B_I vs swapped N_C_I",
            abs(fn(p, ModeLabel.B_I) - fn(q, ModeLabel.C_I)),
            tol.symmetry_abs,
        )
    tally["symmetry"].record(
        p, "state B_I<->C_I exchange", _max_abs(_swap_b_c(rho.matrix), rho_abici(q).matrix), tol.template_abs
    )

    # two-tangle-vanishing
    two = {pair: _safe_numeric(two_tangle, p, pair, reductions) for pair in PAIRS}
    for (alpha, beta), value in two.items():
        tally["two-tangle-vanishing"].record(
            p, f"two_tangle[{alpha},{beta}]", abs(value), tol.two_tangle_ceiling
        )
    tally["two-tangle-vanishing"].record(
        p,
        "pi numeric vs closed",
        abs(compose_pi(numeric, two) - closed_pi(p, corrected)),
        tol.pi_agreement,
    )

    # matrix-template
    tally["matrix-template"].record(p, "rho_ABICI", _max_abs(rho.matrix, rho_abici_template(p)), tol.template_abs)
    for v in VERTICES:
        tally["matrix-template"].record(
            p,
            f"partial_transpose[{v}]",
            _max_abs(partial_transpose(rho, v), partial_transpose_template(p, v)),
            tol.template_abs,
        )

    # series-residual
    r_max = max(p.r_b, p.r_c)
    if r_max <= tol.series_window:
        delta_pi = closed_pi(p, one_tangle_legacy) - closed_pi(p, corrected)
        tally["series-residual"].record(
            p,
            "delta_pi - series",
            abs(delta_pi - delta_pi_series(p)),
            tol.series_constant * r_max**6 + tol.series_floor,
        )

    # range
    lower = INFINITE_ACCELERATION_CORRECTED - tol.range_slack
    upper = 1.0 + tol.range_slack
    for v in VERTICES:
        value = closed[v]
        tally["range"].record(p, f"corrected N_{v}", max(lower - value, value - upper, 0.0), 0.0)
        value = one_tangle_legacy(p, v)
        tally["range"].record(p, f"legacy N_{v}", max(-tol.range_slack - value, value - upper, 0.0), 0.0)


def _check_single_acceleration(corrected: OneTangle, tally: _Tally, tol: Tolerances) -> None:
    for r_c in np.linspace(0.0, R_MAX, tol.single_acceleration_samples):
        p = AccelPair(r_b=0.0, r_c=float(r_c))
        n_ci = one_tangle_single_acceleration(p.r_c)
        tally.record(p, "N_C_I single vs two-observer", abs(n_ci - corrected(p, ModeLabel.C_I)), tol.single_acceleration_abs)
        cos_rc = math.cos(p.r_c)
        tally.record(p, "N_A equals cos r_c", abs(cos_rc - corrected(p, ModeLabel.A)), tol.single_acceleration_abs)
        tally.record(p, "N_B_I equals cos r_c", abs(cos_rc - corrected(p, ModeLabel.B_I)), tol.single_acceleration_abs)


def random_unit_trace_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    """A + A^H shifted along the identity to unit trace."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h = a + a.conj().T
    return h - (np.trace(h).real - 1.0) / dim * np.eye(dim)


def _check_eigensolver(tally: _Tally, tol: Tolerances) -> None:
    rng = np.random.default_rng(tol.random_seed)
    for k in range(tol.eigen_samples):
        dim = int(rng.integers(2, 9))
        m = random_unit_trace_hermitian(rng, dim)
        label = f"random hermitian #{k} (dim {dim})"
        try:
            spectrum = hermitian_eigenvalues(m, tol)
            via_norm, via_negative = negativity_formulations(m, tol)
        except ConvergenceError as e:
            logger.warning("%s: %s", label, e)
            tally.record(None, label, math.nan, 0.0)
            continue
        tally.record(None, f"{label} eigenvalue sum vs trace", abs(spectrum.total - 1.0), tol.spectrum_trace)
        tally.record(None, f"{label} negativity formulations", abs(via_norm - via_negative), tol.negativity_agreement)


def run_verify(
    grid_n: int = DEFAULT_GRID_N,
    corrected: OneTangle = one_tangle_corrected,
    tol: Tolerances = TOLERANCES,
) -> VerifyResult:
    """Run every suite. Grid points are visited row-major in r_b then r_c."""
    points = accel_grid(grid_n)
    counter = itertools.count()
    tally = {name: _Tally(name, counter) for name in SUITES}

    logger.info("Verifying %d grid points", len(points))
    for p in points:
        _check_point(p, corrected, tally, tol)
    _check_single_acceleration(corrected, tally["single-acceleration"], tol)
    _check_eigensolver(tally["eigensolver"], tol)

    result = VerifyResult(grid_n=grid_n, suites=tuple(tally[name].result() for name in SUITES))
    for s in result.suites:
        logger.info("%s: %d checks, max deviation %.3e, %s", s.name, s.checks, s.max_deviation, "pass" if s.passed else "FAIL")
    return result


def print_verification(result: VerifyResult) -> None:
    print(f"\n{'='*80}")
    print(f"Verification on a {result.grid_n}x{result.grid_n} grid")
    print(f"{'='*80}")
    table = result.table()
    table["max_deviation"] = table["max_deviation"].map(lambda x: f"{x:.3e}")
    print(table.to_string(index=False))
    print(f"{'='*80}")
    failure = result.first_failure
    if failure is None:
        print("All suites passed.")
    else:
        print(f"FIRST FAILURE: {failure.describe()}")
    print()
