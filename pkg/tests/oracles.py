"""Independent reference implementations used to cross-check the engine.

Nothing here may import from the solver paths it checks: the grid search
evaluates deviations directly from the chain definition, and the
weighted-sum oracle accumulates row by row in plain Python.
"""

from __future__ import annotations

import numpy as np


def deviation_profile(W: np.ndarray, phi: list[float]) -> np.ndarray:
    """Worst deviation for each candidate weight row, straight from the
    definition: adjacent terms and the skip-one transitivity products."""
    n = W.shape[1]
    chi = np.zeros(W.shape[0])
    for k in range(n - 1):
        chi = np.maximum(chi, np.abs(W[:, k] - phi[k] * W[:, k + 1]))
    for k in range(n - 2):
        chi = np.maximum(chi, np.abs(W[:, k] - phi[k] * phi[k + 1] * W[:, k + 2]))
    return chi


def _compositions(total: int, n: int) -> np.ndarray:
    out: list[list[int]] = []

    def rec(prefix, rem, slots):
        if slots == 1:
            out.append(prefix + [rem])
            return
        for v in range(rem + 1):
            rec(prefix + [v], rem - v, slots - 1)

    rec([], total, n)
    return np.array(out, dtype=np.int64)


def _box_offsets(n: int, half: int) -> np.ndarray:
    off = np.arange(-half, half + 1)
    grids = np.meshgrid(*[off] * (n - 1), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def grid_search_chi(phi: list[float], final_res: int = 10000, topk: int = 30) -> float:
    """Brute-force minimum deviation over a simplex grid.

    Full enumeration at fine resolution is intractable for n = 5, so the
    grid is refined hierarchically: enumerate a coarse simplex grid, then
    repeatedly shrink the step while sliding a box of candidates around
    the best points until no improvement, down to step 1/final_res.  The
    objective is convex in the weights, so the slide cannot get trapped.
    """
    n = len(phi) + 1
    s = 20
    C = _compositions(s, n)
    chi = deviation_profile(C / s, phi)
    order = np.argsort(chi)[: min(topk, len(chi))]
    seeds = C[order]
    best = float(chi[order[0]])
    D = _box_offsets(n, 3)
    while True:
        for _ in range(200):
            cand = (seeds[:, None, : n - 1] + D[None, :, :]).reshape(-1, n - 1)
            last = s - cand.sum(axis=1)
            cand = np.concatenate([cand, last[:, None]], axis=1)
            cand = cand[(cand >= 0).all(axis=1)]
            chi = deviation_profile(cand / s, phi)
            order = np.argsort(chi)[: min(topk, len(chi))]
            new_best = float(chi[order[0]])
            seeds = cand[order]
            if new_best > best - 1e-15:
                best = min(best, new_best)
                break
            best = new_best
        if s >= final_res:
            return best
        f = 5 if s * 5 <= final_res else max(2, final_res // s)
        s *= f
        seeds = seeds * f


def wsm_scores_loop(grid, weights) -> list[float]:
    """Row-by-row weighted-sum accumulation, no vectorization."""
    scores = []
    for row in grid:
        total = 0.0
        for x, w in zip(row, weights):
            total += x * w
        scores.append(total)
    return scores


def rank_by_enumeration(scores) -> list[int]:
    """Competition ranks by counting strictly better scores."""
    return [1 + sum(1 for t in scores if t > s) for s in scores]


def reversals_brute_force(base, new, ids) -> list[tuple[str, str]]:
    pairs = []
    n = len(ids)
    for i in range(n):
        for j in range(i + 1, n):
            if (base[i] - base[j]) * (new[i] - new[j]) < 0:
                pairs.append(tuple(sorted((ids[i], ids[j]))))
    return sorted(pairs)
