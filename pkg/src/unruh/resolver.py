"""
Sweep quantity registry with synonym normalization and fuzzy suggestions.
"""
from __future__ import annotations

from collections.abc import Iterable

from rapidfuzz import fuzz

from unruh.exceptions import UnknownQuantityError

# Quantity registry. Column order inside each entry, and entry order here,
# fix the column order of every sweep file.
QUANTITIES = {
    "corrected": {
        "label": "Corrected closed-form one-tangles and pi-tangle",
        "columns": {
            "n_a": lambda r: r.n_a,
            "n_bi": lambda r: r.n_bi,
            "n_ci": lambda r: r.n_ci,
            "pi_corrected": lambda r: r.pi_corrected,
        },
    },
    "legacy": {
        "label": "Legacy closed-form one-tangles and pi-tangle",
        "columns": {
            "n_a_legacy": lambda r: r.n_a_legacy,
            "n_bi_legacy": lambda r: r.n_bi_legacy,
            "n_ci_legacy": lambda r: r.n_ci_legacy,
            "pi_legacy": lambda r: r.pi_legacy,
        },
    },
    "numeric": {
        "label": "Matrix-pipeline one-tangles, pi-tangle and largest two-tangle",
        "columns": {
            "n_a_numeric": lambda r: r.n_a_numeric,
            "n_bi_numeric": lambda r: r.n_bi_numeric,
            "n_ci_numeric": lambda r: r.n_ci_numeric,
            "pi_numeric": lambda r: r.pi_numeric,
            "max_two_tangle": lambda r: r.max_two_tangle,
        },
    },
    "deltas": {
        "label": "Legacy minus corrected (Delta-N per vertex, Delta-pi)",
        "columns": {
            "delta_n_a": lambda r: r.delta_n_a,
            "delta_n_bi": lambda r: r.delta_n_bi,
            "delta_n_ci": lambda r: r.delta_n_ci,
            "delta_pi": lambda r: r.delta_pi,
        },
    },
    "series": {
        "label": "Low-acceleration Delta-pi polynomial and its residual",
        "columns": {
            "delta_pi_series": lambda r: r.delta_pi_series,
            "series_residual": lambda r: r.series_residual,
        },
    },
}

QUANTITY_SYNONYMS = {
    "fixed": "corrected",
    "correct": "corrected",
    "new": "corrected",
    "closed": "corrected",
    "old": "legacy",
    "original": "legacy",
    "incorrect": "legacy",
    "oracle": "numeric",
    "matrix": "numeric",
    "numerical": "numeric",
    "delta": "deltas",
    "differences": "deltas",
    "diff": "deltas",
    "expansion": "series",
    "polynomial": "series",
}

# Below this score the closest name is not offered as a suggestion
SUGGESTION_CUTOFF = 50


def normalize_quantity(name: str) -> str:
    """Normalize a quantity name using the synonym table."""
    name = name.lower().strip()
    return QUANTITY_SYNONYMS.get(name, name)


def suggest_quantity(name: str) -> str | None:
    """Closest known quantity or synonym by fuzzy score, if any is close enough."""
    name_normalized = name.lower().strip()
    vocabulary = list(QUANTITIES) + list(QUANTITY_SYNONYMS)
    score, best = max((fuzz.token_set_ratio(name_normalized, v), v) for v in vocabulary)
    if score < SUGGESTION_CUTOFF:
        return None
    return normalize_quantity(best)


def resolve_quantity(name: str) -> str:
    """Canonical quantity name; raises UnknownQuantityError with a suggestion."""
    normalized = normalize_quantity(name)
    if normalized in QUANTITIES:
        return normalized

    message = f"Unknown quantity '{name}'. Known quantities: {', '.join(QUANTITIES)}"
    suggestion = suggest_quantity(name)
    if suggestion:
        message += f". Did you mean '{suggestion}'?"
    raise UnknownQuantityError(message)


def resolve_quantities(names: Iterable[str]) -> tuple[str, ...]:
    """Resolve a list of names to canonical quantities in registry order, deduplicated."""
    wanted = {resolve_quantity(n) for n in names}
    return tuple(q for q in QUANTITIES if q in wanted)


def quantity_columns(quantities: Iterable[str]) -> list[str]:
    """Value columns for the requested quantities, in the fixed registry order."""
    wanted = set(resolve_quantities(quantities))
    columns = []
    for q, info in QUANTITIES.items():
        if q in wanted:
            columns.extend(info["columns"])
    return columns


def column_getters(quantities: Iterable[str]) -> dict:
    """Column name -> callable(TangleReport) for the requested quantities."""
    wanted = set(resolve_quantities(quantities))
    getters = {}
    for q, info in QUANTITIES.items():
        if q in wanted:
            getters.update(info["columns"])
    return getters
