"""
Closed-form one-tangles (corrected and legacy), pi-tangle composition,
the single-acceleration special case and the Delta-pi series, cross-checked
against the matrix pipeline (partial transpose -> Jacobi -> trace norm).

Delta convention everywhere: legacy minus corrected.
"""
from __future__ import annotations

import logging
import math
from enum import StrEnum
from typing import Callable, NamedTuple

from pydantic import BaseModel, ConfigDict

from unruh.config import R_MAX, TOLERANCES, Tolerances
from unruh.exceptions import ConsistencyError, ParameterRangeError
from unruh.model import AccelPair, ModeLabel, VERTICES, check_r, reductions_of, rho_abici
from unruh.spectra import negativity
from unruh.tensor_core import DensityMatrix

logger = logging.getLogger(__name__)

OneTangle = Callable[[AccelPair, str], float]


class Family(StrEnum):
    CORRECTED = "corrected"
    LEGACY = "legacy"
    NUMERIC = "numeric"


# Ordered pairs (alpha, beta) of the two-tangle N_{alpha beta}; alpha is transposed
PAIRS: tuple[tuple[ModeLabel, ModeLabel], ...] = (
    (ModeLabel.A, ModeLabel.B_I),
    (ModeLabel.A, ModeLabel.C_I),
    (ModeLabel.B_I, ModeLabel.A),
    (ModeLabel.B_I, ModeLabel.C_I),
    (ModeLabel.C_I, ModeLabel.A),
    (ModeLabel.C_I, ModeLabel.B_I),
)

# (1 + sqrt 5)/8 is what the legacy formula gives at pi/4. The value sometimes quoted,
# (1 - sqrt 5)/8, is negative and cannot be a negativity.
INFINITE_ACCELERATION_CORRECTED = (math.sqrt(17.0) - 1.0) / 8.0
INFINITE_ACCELERATION_LEGACY = (1.0 + math.sqrt(5.0)) / 8.0


def _vertex(vertex: str) -> ModeLabel:
    try:
        v = ModeLabel(vertex)
    except ValueError:
        v = None
    if v not in VERTICES:
        raise ParameterRangeError(f"Vertex must be one of A, B_I, C_I, got '{vertex}'")
    return v


def _trig(p: AccelPair) -> tuple[float, float, float, float]:
    return math.cos(p.r_b), math.sin(p.r_b), math.cos(p.r_c), math.sin(p.r_c)


def one_tangle_corrected(p: AccelPair, vertex: str) -> float:
    """Corrected closed-form one-tangle N_{vertex(rest)}."""
    v = _vertex(vertex)
    cb, sb, cc, sc = _trig(p)
    if v is ModeLabel.A:
        return 0.5 * (math.sqrt(sb**4 * sc**4 + 4 * cb**2 * cc**2) - sb**2 * sc**2)
    if v is ModeLabel.B_I:
        return 0.5 * cc * (math.sqrt(sb**4 * cc**2 + 4 * cb**2) - sb**2 * cc)
    return 0.5 * cb * (math.sqrt(cb**2 * sc**4 + 4 * cc**2) - cb * sc**2)


def one_tangle_legacy(p: AccelPair, vertex: str) -> float:
    """Legacy (incorrect) one-tangle in its symmetrized form."""
    v = _vertex(vertex)
    cb, sb, cc, sc = _trig(p)
    if v is ModeLabel.A:
        return 0.5 * (cb * cc - sb**2 * sc**2 + math.sqrt(sb**4 * sc**4 + cb**2 * cc**2))
    if v is ModeLabel.B_I:
        return 0.5 * (cb * cc - sb**2 * cc**2 + cc * math.sqrt(sb**4 * cc**2 + cb**2))
    return 0.5 * (cb * cc - cb**2 * sc**2 + cb * math.sqrt(cb**2 * sc**4 + cc**2))


def one_tangle_single_acceleration(r_c: float) -> float:
    """N_{C_I(AB_I)} when only Charlie accelerates (r_b = 0)."""
    r_c = check_r("r_c", r_c)
    cc, sc = math.cos(r_c), math.sin(r_c)
    return 0.5 * (math.sqrt(4 * cc**2 + sc**4) - sc**2)


class SingleAcceleration(NamedTuple):
    n_a: float
    n_bi: float
    n_ci: float
    pi: float


def single_acceleration_tangles(r_c: float) -> SingleAcceleration:
    """
    The r_b = 0 family. N_A and N_BI reduce to cos r_c; N_CI is the
    single-acceleration formula above.
    """
    r_c = check_r("r_c", r_c)
    n_a = math.cos(r_c)
    n_bi = math.cos(r_c)
    n_ci = one_tangle_single_acceleration(r_c)
    return SingleAcceleration(n_a, n_bi, n_ci, (n_a**2 + n_bi**2 + n_ci**2) / 3.0)


def one_tangle_numeric(p: AccelPair, vertex: str, rho: DensityMatrix | None = None) -> float:
    """Matrix-pipeline one-tangle ||rho^{T_vertex}||_1 - 1."""
    v = _vertex(vertex)
    if rho is None:
        rho = rho_abici(p)
    return negativity(rho, v)


def _reduction_for(pair: tuple[str, str], reductions: tuple[DensityMatrix, ...]) -> DensityMatrix:
    wanted = {ModeLabel(pair[0]), ModeLabel(pair[1])}
    for r in reductions:
        if set(r.modes) == wanted:
            return r
    raise ParameterRangeError(f"No two-mode reduction for pair {pair}")


def two_tangle(
    p: AccelPair,
    pair: tuple[str, str],
    reductions: tuple[DensityMatrix, ...] | None = None,
) -> float:
    """Negativity N_{alpha beta} of the two-mode reduction, transposing alpha."""
    alpha, beta = _vertex(pair[0]), _vertex(pair[1])
    if alpha is beta:
        raise ParameterRangeError(f"Two-tangle needs two distinct parties, got {pair}")
    if reductions is None:
        reductions = reductions_of(rho_abici(p))
    return negativity(_reduction_for((alpha, beta), reductions), alpha)


def compose_pi(n: dict[ModeLabel, float], two: dict[tuple[ModeLabel, ModeLabel], float]) -> float:
    """Average of the three residuals pi_alpha = N_alpha^2 - N_ab^2 - N_ag^2."""
    total = 0.0
    for alpha in VERTICES:
        residual = n[alpha] ** 2
        for beta in VERTICES:
            if beta is not alpha:
                residual -= two[(alpha, beta)] ** 2
        total += residual
    return total / 3.0


def closed_pi(p: AccelPair, one_tangle: OneTangle) -> float:
    return sum(one_tangle(p, v) ** 2 for v in VERTICES) / 3.0


def pi_tangle(p: AccelPair, family: Family | str) -> float:
    """
    pi-tangle for one formula family. corrected/legacy square and average the
    closed forms (two-tangles vanish); numeric evaluates all residuals in full.
    """
    family = Family(family)
    if family is Family.CORRECTED:
        return closed_pi(p, one_tangle_corrected)
    if family is Family.LEGACY:
        return closed_pi(p, one_tangle_legacy)

    rho = rho_abici(p)
    reductions = reductions_of(rho)
    n = {v: one_tangle_numeric(p, v, rho) for v in VERTICES}
    two = {pair: two_tangle(p, pair, reductions) for pair in PAIRS}
    return compose_pi(n, two)


class DeltaSurfaces(NamedTuple):
    delta_n_a: float
    delta_n_bi: float
    delta_n_ci: float
    delta_pi: float


def delta_surfaces(p: AccelPair) -> DeltaSurfaces:
    """Legacy minus corrected, per vertex and for the pi-tangle."""
    d = [one_tangle_legacy(p, v) - one_tangle_corrected(p, v) for v in VERTICES]
    dpi = pi_tangle(p, Family.LEGACY) - pi_tangle(p, Family.CORRECTED)
    return DeltaSurfaces(d[0], d[1], d[2], dpi)


def delta_pi_series(p: AccelPair) -> float:
    """Low-acceleration polynomial for Delta-pi through eighth order in r."""
    rb, rc = p.r_b, p.r_c
    return (
        (rb**4 + rc**4) / 12.0
        - rb**2 * rc**2 * (rb**2 + rc**2) / 6.0
        + 13.0 * rb**4 * rc**4 / 36.0
    )


class TangleReport(BaseModel):
    """Every entanglement quantity at one (r_b, r_c) point."""

    model_config = ConfigDict(frozen=True)

    params: AccelPair
    n_a: float
    n_bi: float
    n_ci: float
    n_a_legacy: float
    n_bi_legacy: float
    n_ci_legacy: float
    n_a_numeric: float
    n_bi_numeric: float
    n_ci_numeric: float
    # in PAIRS order
    two_tangles: tuple[float, float, float, float, float, float]
    pi_corrected: float
    pi_legacy: float
    pi_numeric: float
    delta_n_a: float
    delta_n_bi: float
    delta_n_ci: float
    delta_pi: float
    delta_pi_series: float

    @property
    def max_two_tangle(self) -> float:
        return max(abs(t) for t in self.two_tangles)

    @property
    def series_residual(self) -> float:
        return self.delta_pi - self.delta_pi_series

    def oracle_gaps(self) -> dict[str, float]:
        """|closed form - numeric| per vertex."""
        return {
            ModeLabel.A.value: abs(self.n_a - self.n_a_numeric),
            ModeLabel.B_I.value: abs(self.n_bi - self.n_bi_numeric),
            ModeLabel.C_I.value: abs(self.n_ci - self.n_ci_numeric),
        }

    def check(self, tol: Tolerances = TOLERANCES) -> None:
        """Raise ConsistencyError on any closed-form/oracle or range violation."""
        rb, rc = self.params.as_tuple()
        for vertex, gap in self.oracle_gaps().items():
            if gap > tol.oracle_agreement:
                raise ConsistencyError(
                    f"Closed-form and numeric one-tangle disagree at "
                    f"(r_b={rb!r}, r_c={rc!r}) for vertex {vertex}: gap {gap:.3e}"
                )
        if abs(self.pi_corrected - self.pi_numeric) > tol.pi_agreement:
            raise ConsistencyError(
                f"pi-tangle composition disagrees with the full residual sum at "
                f"(r_b={rb!r}, r_c={rc!r}): {self.pi_corrected!r} vs {self.pi_numeric!r}"
            )
        values = {
            "n_a": self.n_a, "n_bi": self.n_bi, "n_ci": self.n_ci,
            "n_a_legacy": self.n_a_legacy, "n_bi_legacy": self.n_bi_legacy, "n_ci_legacy": self.n_ci_legacy,
            "n_a_numeric": self.n_a_numeric, "n_bi_numeric": self.n_bi_numeric, "n_ci_numeric": self.n_ci_numeric,
            "pi_corrected": self.pi_corrected, "pi_legacy": self.pi_legacy, "pi_numeric": self.pi_numeric,
        }
        for name, value in values.items():
            if not (-tol.range_slack <= value <= 1.0 + tol.range_slack):
                raise ConsistencyError(
                    f"{name}={value!r} at (r_b={rb!r}, r_c={rc!r}) is outside [0, 1]"
                )


def build_report(p: AccelPair) -> TangleReport:
    """Evaluate every quantity at p, building the reduced state once."""
    rho = rho_abici(p)
    reductions = reductions_of(rho)

    corrected = {v: one_tangle_corrected(p, v) for v in VERTICES}
    legacy = {v: one_tangle_legacy(p, v) for v in VERTICES}
    numeric = {v: one_tangle_numeric(p, v, rho) for v in VERTICES}
    two = {pair: two_tangle(p, pair, reductions) for pair in PAIRS}

    pi_corrected = sum(x**2 for x in corrected.values()) / 3.0
    pi_legacy = sum(x**2 for x in legacy.values()) / 3.0
    a, bi, ci = VERTICES

    return TangleReport(
        params=p,
        n_a=corrected[a], n_bi=corrected[bi], n_ci=corrected[ci],
        n_a_legacy=legacy[a], n_bi_legacy=legacy[bi], n_ci_legacy=legacy[ci],
        n_a_numeric=numeric[a], n_bi_numeric=numeric[bi], n_ci_numeric=numeric[ci],
        two_tangles=tuple(two[pair] for pair in PAIRS),
        pi_corrected=pi_corrected,
        pi_legacy=pi_legacy,
        pi_numeric=compose_pi(numeric, two),
        delta_n_a=legacy[a] - corrected[a],
        delta_n_bi=legacy[bi] - corrected[bi],
        delta_n_ci=legacy[ci] - corrected[ci],
        delta_pi=pi_legacy - pi_corrected,
        delta_pi_series=delta_pi_series(p),
    )


def infinite_acceleration() -> AccelPair:
    return AccelPair(r_b=R_MAX, r_c=R_MAX)
