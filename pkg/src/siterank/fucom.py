"""Crisp and fuzzy full-consistency weight optimization.

Both solvers minimize the worst deviation chi between each weight and the
product of the next weight with its comparative significance, including
the second-order (transitivity) products, subject to weights forming a
(defuzzified) probability vector.  Every absolute-value bound is split
into two linear inequalities, so the whole model is a linear program and
is solved exactly with HiGHS via scipy.

The fuzzy model is solved lexicographically: first minimize chi, then,
holding chi at its optimum, minimize total spread sum(u_j - l_j).  This
pins down the otherwise non-unique optimum and makes re-solves
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .errors import InputError, SolverError
from .fuzzy import TFN, LinguisticScale, crisp, gmir, tfn_mul

# chi thresholds: crisp chains always admit an exact solution, so anything
# above numerical zero signals a problem; fuzzy solutions are accepted
# below 0.10.
CRISP_CHI_TOL = 1e-6
FUZZY_CHI_LIMIT = 0.10

_GMIR_ATOL = 1e-12


@dataclass(frozen=True)
class ComparativeChain:
    """Criteria ordered most-significant first with adjacent significances.

    phi[k] compares the criterion at position k against position k+1 and
    must have GMIR >= 1.  priorities, when present, are the raw values the
    ratios were built from (ratings or direct priorities).
    """

    codes: tuple[str, ...]
    phi: tuple[TFN, ...]
    priorities: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.codes:
            raise InputError("comparative chain needs at least one criterion")
        if len(set(self.codes)) != len(self.codes):
            raise InputError(f"duplicate criterion codes in chain: {self.codes}")
        if len(self.phi) != len(self.codes) - 1:
            raise InputError(
                f"chain of {len(self.codes)} criteria needs {len(self.codes) - 1} "
                f"significances, got {len(self.phi)}"
            )
        for k, p in enumerate(self.phi):
            if gmir(p) < 1.0 - 1e-9:
                raise InputError(
                    f"comparative significance phi[{k}] must have GMIR >= 1 "
                    f"(chain is ordered most-significant first), got {p}"
                )

    @property
    def n(self) -> int:
        return len(self.codes)

    @property
    def is_crisp(self) -> bool:
        return all(p.is_crisp for p in self.phi)


def chain_from_priorities(codes, priorities) -> ComparativeChain:
    """Build a crisp chain from per-criterion raw priorities.

    Criteria are sorted by priority descending (stable on ties, keeping
    the declared order) and phi[k] is the ratio of adjacent priorities.
    """
    codes = [str(c) for c in codes]
    if not codes:
        raise InputError("empty criteria list")
    if len(codes) != len(priorities):
        raise InputError(f"{len(codes)} codes but {len(priorities)} priorities")
    prios = [float(p) for p in priorities]
    for c, p in zip(codes, prios):
        if not p > 0:
            raise InputError(f"priority for {c} must be positive, got {p}")
    order = sorted(range(len(codes)), key=lambda i: -prios[i])
    sorted_codes = tuple(codes[i] for i in order)
    sorted_prios = tuple(prios[i] for i in order)
    phi = tuple(crisp(a / b) for a, b in zip(sorted_prios, sorted_prios[1:]))
    return ComparativeChain(sorted_codes, phi, sorted_prios)


def chain_from_terms(codes_in_rank_order, terms, scale: LinguisticScale) -> ComparativeChain:
    """Build a fuzzy chain from linguistic comparisons between adjacent ranks.

    terms[k] states how much more significant the criterion at rank k+1 is
    than the one at rank k+2 (n-1 terms for n criteria).
    """
    codes = tuple(str(c) for c in codes_in_rank_order)
    if not codes:
        raise InputError("empty criteria list")
    if len(terms) != len(codes) - 1:
        raise InputError(
            f"chain of {len(codes)} criteria needs {len(codes) - 1} linguistic "
            f"terms, got {len(terms)}"
        )
    phi = tuple(scale.lookup(t) for t in terms)
    return ComparativeChain(codes, phi)


@dataclass(frozen=True)
class CrispWeights:
    codes: tuple[str, ...]
    weights: tuple[float, ...]
    chi: float
    consistent: bool

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.codes, self.weights))


@dataclass(frozen=True)
class FuzzyWeights:
    codes: tuple[str, ...]
    weights: tuple[TFN, ...]
    chi: float
    consistent: bool


def check_consistency(chi: float, mode: str) -> bool:
    """Consistency flag: crisp solutions must hit numerical zero, fuzzy
    solutions are accepted below the 0.10 bound."""
    if chi < -1e-12:
        raise SolverError(f"negative consistency deviation chi = {chi}")
    chi = max(chi, 0.0)
    if mode == "crisp":
        return chi <= CRISP_CHI_TOL
    if mode == "fuzzy":
        return chi < FUZZY_CHI_LIMIT
    raise InputError(f"unknown consistency mode {mode!r}")


def _pair_indices(n: int) -> list[tuple[int, int, int]]:
    """(i, j, kind) deviation pairs: adjacent (kind 0) and skip-one (kind 1)."""
    pairs = [(k, k + 1, 0) for k in range(n - 1)]
    pairs += [(k, k + 2, 1) for k in range(n - 2)]
    return pairs


def _pair_factor(chain: ComparativeChain, i: int, kind: int) -> TFN:
    if kind == 0:
        return chain.phi[i]
    return tfn_mul(chain.phi[i], chain.phi[i + 1])


def lp_dump(chain: ComparativeChain) -> str:
    """Plain-text listing of the deviation model, for debugging and
    cross-checking against other solvers."""
    lines = ["minimize chi", "subject to:"]
    for i, j, kind in _pair_indices(chain.n):
        f = _pair_factor(chain, i, kind)
        if chain.is_crisp:
            lines.append(f"  |w[{chain.codes[i]}] - {f.m:g} * w[{chain.codes[j]}]| <= chi")
        else:
            lines.append(
                f"  |w[{chain.codes[i]}] - ({f.l:g}, {f.m:g}, {f.u:g}) (x) "
                f"w[{chain.codes[j]}]| <= chi  (componentwise)"
            )
    lines.append("  sum_j w_j = 1" + ("" if chain.is_crisp else "  (on GMIR values)"))
    lines.append("  w_j >= 0" if chain.is_crisp else "  l_j <= m_j <= u_j, l_j >= 0")
    return "\n".join(lines)


def _run_linprog(c, A_ub, b_ub, A_eq, b_eq, bounds, chain: ComparativeChain):
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    if not res.success:
        raise SolverError(
            f"weight optimization failed ({res.message}); model:\n{lp_dump(chain)}"
        )
    return res.x


def crisp_deviation(weights, phi) -> float:
    """Worst Eq-style deviation of a crisp weight vector for given
    adjacent significances; used to report chi from the final weights."""
    w = np.asarray(weights, dtype=float)
    n = len(w)
    chi = 0.0
    for i, j, kind in _pair_indices(n):
        f = phi[i] if kind == 0 else phi[i] * phi[i + 1]
        chi = max(chi, abs(w[i] - f * w[j]))
    return chi


def fuzzy_deviation(weights: tuple[TFN, ...], chain: ComparativeChain) -> float:
    chi = 0.0
    for i, j, kind in _pair_indices(chain.n):
        f = _pair_factor(chain, i, kind)
        wi, wj = weights[i], weights[j]
        chi = max(
            chi,
            abs(wi.l - f.l * wj.l),
            abs(wi.m - f.m * wj.m),
            abs(wi.u - f.u * wj.u),
        )
    return chi


def solve_fucom_crisp(chain: ComparativeChain) -> CrispWeights:
    """Minimize the worst deviation for a crisp chain (linear program)."""
    if not chain.is_crisp:
        raise InputError("crisp solver given a fuzzy chain; use solve_ffucom")
    n = chain.n
    phi = [p.m for p in chain.phi]
    nv = n + 1  # w_0..w_{n-1}, chi
    A_ub, b_ub = [], []
    for i, j, kind in _pair_indices(n):
        f = phi[i] if kind == 0 else phi[i] * phi[i + 1]
        for sign in (1.0, -1.0):
            row = [0.0] * nv
            row[i] = sign
            row[j] = -sign * f
            row[n] = -1.0
            A_ub.append(row)
            b_ub.append(0.0)
    A_eq = [[1.0] * n + [0.0]]
    c = [0.0] * n + [1.0]
    x = _run_linprog(c, A_ub or None, b_ub or None, A_eq, [1.0], [(0, None)] * nv, chain)
    w = np.clip(x[:n], 0.0, None)
    total = w.sum()
    if total <= 0:
        raise SolverError(f"degenerate crisp solution for chain {chain.codes}")
    w = w / total
    chi = float(crisp_deviation(w, phi))
    return CrispWeights(
        chain.codes, tuple(float(v) for v in w), chi, bool(check_consistency(chi, "crisp"))
    )


def solve_ffucom(chain: ComparativeChain) -> FuzzyWeights:
    """Minimize the worst componentwise deviation for a fuzzy chain, then
    minimize total spread at the optimal chi (lexicographic)."""
    n = chain.n
    nv = 3 * n + 1  # l_0.., m_0.., u_0.., chi
    li, mi, ui = range(0, n), range(n, 2 * n), range(2 * n, 3 * n)
    ci = 3 * n

    A_ub, b_ub = [], []

    def add_le(coefs: dict[int, float], rhs: float = 0.0):
        row = [0.0] * nv
        for idx, v in coefs.items():
            row[idx] = v
        A_ub.append(row)
        b_ub.append(rhs)

    for i, j, kind in _pair_indices(n):
        f = _pair_factor(chain, i, kind)
        for comp_idx, fc in ((li, f.l), (mi, f.m), (ui, f.u)):
            for sign in (1.0, -1.0):
                add_le({comp_idx[i]: sign, comp_idx[j]: -sign * fc, ci: -1.0})
    for j in range(n):
        add_le({li[j]: 1.0, mi[j]: -1.0})  # l_j <= m_j
        add_le({mi[j]: 1.0, ui[j]: -1.0})  # m_j <= u_j

    # sum over j of (l + 4m + u)/6 = 1
    eq_row = [0.0] * nv
    for j in range(n):
        eq_row[li[j]] = 1 / 6
        eq_row[mi[j]] = 4 / 6
        eq_row[ui[j]] = 1 / 6
    A_eq, b_eq = [eq_row], [1.0]

    bounds = [(0, None)] * nv
    c1 = [0.0] * nv
    c1[ci] = 1.0
    x1 = _run_linprog(c1, A_ub, b_ub, A_eq, b_eq, bounds, chain)
    chi_star = max(x1[ci], 0.0)

    # stage 2: freeze chi, minimize total spread
    c2 = [0.0] * nv
    for j in range(n):
        c2[ui[j]] = 1.0
        c2[li[j]] = -1.0
    bounds2 = list(bounds)
    bounds2[ci] = (0, chi_star)
    try:
        x2 = _run_linprog(c2, A_ub, b_ub, A_eq, b_eq, bounds2, chain)
    except SolverError:
        # exact chi bound can be infeasible at solver tolerance; retry with slack
        bounds2[ci] = (0, chi_star + 1e-9)
        x2 = _run_linprog(c2, A_ub, b_ub, A_eq, b_eq, bounds2, chain)

    # numerical cleanup: clamp tiny ordering/nonnegativity violations and
    # rescale so the GMIR values sum to exactly 1
    ls = np.clip(x2[list(li)], 0.0, None)
    us = np.maximum(np.asarray(x2[list(ui)]), ls)
    ms = np.clip(np.asarray(x2[list(mi)]), ls, us)
    total = float(np.sum(ls + 4.0 * ms + us) / 6.0)
    if total <= _GMIR_ATOL:
        raise SolverError(f"degenerate fuzzy solution for chain {chain.codes}")
    ls, ms, us = ls / total, ms / total, us / total
    weights = tuple(TFN(float(a), float(b), float(cc)) for a, b, cc in zip(ls, ms, us))
    chi = float(fuzzy_deviation(weights, chain))
    return FuzzyWeights(chain.codes, weights, chi, bool(check_consistency(chi, "fuzzy")))


def defuzzify_weights(sol: FuzzyWeights) -> CrispWeights:
    """GMIR each fuzzy weight and renormalize to sum exactly 1; chi and
    the consistency flag carry over from the fuzzy solve."""
    g = np.array([gmir(t) for t in sol.weights])
    total = g.sum()
    if total <= _GMIR_ATOL:
        raise InputError("cannot defuzzify: GMIR values sum to zero")
    g = g / total
    return CrispWeights(sol.codes, tuple(float(v) for v in g), sol.chi, sol.consistent)
