"""Weighted-sum scoring, ranking, and what-if weight perturbation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .matrix import DEGENERATE_FILL, DecisionMatrix
from .registry import CATEGORIES, Registry
from .surveys import GlobalWeightTable


def _weight_vector(matrix: DecisionMatrix, weights: dict[str, float]) -> np.ndarray:
    if sorted(weights) != sorted(matrix.codes):
        raise InputError(
            "weight codes do not match matrix columns: "
            f"weights {sorted(weights)} vs columns {sorted(matrix.codes)}"
        )
    return np.array([weights[c] for c in matrix.codes])


def score(matrix: DecisionMatrix, weights: dict[str, float]) -> np.ndarray:
    """Weighted sum per site over the normalized matrix."""
    if not matrix.normalized:
        raise InputError("score requires a normalized decision matrix")
    return matrix.grid @ _weight_vector(matrix, weights)


def rank(scores) -> np.ndarray:
    """Competition ranks (1 = best, ties share the better rank)."""
    s = np.asarray(scores, dtype=float)
    if s.size == 0:
        raise InputError("cannot rank an empty score list")
    if not np.all(np.isfinite(s)):
        raise InputError("scores must be finite")
    return 1 + (s[None, :] > s[:, None]).sum(axis=1)


def listing_order(scores, site_ids) -> list[int]:
    """Row indices in output order: score descending, site id ascending on ties."""
    return sorted(range(len(site_ids)), key=lambda i: (-scores[i], site_ids[i]))


def group_weights(
    table: GlobalWeightTable, category: str, registry: Registry, renormalized: bool = False
) -> dict[str, float]:
    """Weights restricted to one category; zero elsewhere.  Unrenormalized
    by default so the four group scores sum to the overall score."""
    member = set(registry.category_codes(category))
    out = {c: (table.weights[c] if c in member else 0.0) for c in table.codes}
    if renormalized:
        total = sum(out.values())
        if total <= 0:
            raise InputError(f"category {category} carries zero total weight")
        out = {c: w / total for c, w in out.items()}
    return out


def group_scores(
    matrix: DecisionMatrix,
    table: GlobalWeightTable,
    category: str,
    registry: Registry,
    renormalized: bool = False,
) -> np.ndarray:
    return score(matrix, group_weights(table, category, registry, renormalized))


def display_normalize(scores) -> np.ndarray:
    """Min-max over sites: best -> 1, worst -> 0; all-equal -> 0.5."""
    s = np.asarray(scores, dtype=float)
    lo, hi = s.min(), s.max()
    if hi == lo:
        return np.full_like(s, DEGENERATE_FILL)
    return (s - lo) / (hi - lo)


def apply_overrides(table: GlobalWeightTable, overrides: dict[str, float]) -> dict[str, float]:
    """Fix the overridden weights and scale the rest by a common factor so
    the full set sums to 1."""
    if not overrides:
        return dict(table.weights)
    for code, v in overrides.items():
        if code not in table.weights:
            raise InputError(f"unknown code in overrides: {code!r}")
        if not isinstance(v, (int, float)) or not np.isfinite(v):
            raise InputError(f"override for {code} must be a finite number, got {v!r}")
        if v < 0:
            raise InputError(f"override for {code} must be nonnegative, got {v}")
    fixed = sum(float(v) for v in overrides.values())
    free = [c for c in table.codes if c not in overrides]
    if not free:
        if abs(fixed - 1.0) > 1e-9:
            raise InputError(f"overrides cover every code but sum to {fixed}, not 1")
        return {c: float(overrides[c]) for c in table.codes}
    if fixed > 1.0 + 1e-12:
        raise InputError(f"overrides sum to {fixed} > 1 with free codes remaining")
    free_total = sum(table.weights[c] for c in free)
    remaining = max(1.0 - fixed, 0.0)
    factor = remaining / free_total if free_total > 0 else 0.0
    out = {}
    for c in table.codes:
        out[c] = float(overrides[c]) if c in overrides else table.weights[c] * factor
    if free_total <= 0 and remaining > 0:
        # baseline gave the free codes zero mass; spread the remainder evenly
        for c in free:
            out[c] = remaining / len(free)
    return out


@dataclass(frozen=True)
class WhatIfReport:
    overrides: dict[str, float]
    weights: dict[str, float]  # full renormalized set
    scores: np.ndarray
    ranks: np.ndarray
    reversals: tuple[tuple[str, str], ...]  # unordered site-id pairs, each once
    reversal_count: int


def rank_reversals(baseline_scores, new_scores, site_ids) -> list[tuple[str, str]]:
    """Unordered site pairs whose strict relative order flips."""
    b = np.asarray(baseline_scores, dtype=float)
    t = np.asarray(new_scores, dtype=float)
    n = len(site_ids)
    pairs = []
    for i in range(n):
        db = b[i] - b[i + 1 :]
        dt = t[i] - t[i + 1 :]
        flipped = np.nonzero(db * dt < 0)[0]
        for off in flipped:
            j = i + 1 + int(off)
            a, c = sorted((site_ids[i], site_ids[j]))
            pairs.append((a, c))
    pairs.sort()
    return pairs


def whatif(
    table: GlobalWeightTable, overrides: dict[str, float], matrix: DecisionMatrix
) -> WhatIfReport:
    weights = apply_overrides(table, overrides)
    baseline = score(matrix, table.weights)
    new = score(matrix, weights)
    site_ids = matrix.site_ids
    reversals = rank_reversals(baseline, new, site_ids)
    return WhatIfReport(
        overrides={k: float(v) for k, v in overrides.items()},
        weights=weights,
        scores=new,
        ranks=rank(new),
        reversals=tuple(reversals),
        reversal_count=len(reversals),
    )
