"""Expert survey ingestion and the per-expert / global weight pipeline.

Category weights come from the crisp solver on 1-5 ratings (or a direct
significance chain); each category's sub-attribute weights come from the
fuzzy solver on ranked linguistic comparisons (or ratings), defuzzified
afterwards.  Global weights multiply local by category weight and average
across experts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError, SolverError
from .fucom import (
    ComparativeChain,
    CrispWeights,
    FuzzyWeights,
    chain_from_priorities,
    chain_from_terms,
    defuzzify_weights,
    solve_ffucom,
    solve_fucom_crisp,
)
from .fuzzy import LinguisticScale, crisp
from .registry import CATEGORIES, Registry

RATING_RANGE = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class SubAttributeEntry:
    code: str
    rank: int
    term: str | None = None
    rating: int | None = None


@dataclass(frozen=True)
class ExpertSurvey:
    expert_id: str
    # either per-category ratings, or a direct chain {"order": [...], "phi": [...]}
    category_ratings: dict[str, int] | None
    category_chain: tuple[tuple[str, ...], tuple[float, ...]] | None
    sub_attributes: dict[str, tuple[SubAttributeEntry, ...]]


def _err(loc: str, msg: str) -> InputError:
    return InputError(f"{loc}: {msg}")


def _parse_entry(raw, loc: str, valid_codes: set[str]) -> SubAttributeEntry:
    if not isinstance(raw, dict):
        raise _err(loc, "sub-attribute entry must be an object")
    code = raw.get("code")
    if code not in valid_codes:
        raise _err(loc, f"unknown criterion code {code!r}")
    rank = raw.get("rank")
    if not isinstance(rank, int) or rank < 1:
        raise _err(loc, f"rank must be a positive integer, got {rank!r}")
    term = raw.get("term")
    rating = raw.get("rating")
    if rating is not None:
        if rating not in RATING_RANGE:
            raise _err(loc, f"rating out of range 1-5: {rating!r}")
    if term is not None and not isinstance(term, str):
        raise _err(loc, f"term must be a string, got {term!r}")
    return SubAttributeEntry(str(code), rank, term, rating)


def _parse_expert(raw, loc: str, registry: Registry) -> ExpertSurvey:
    if not isinstance(raw, dict):
        raise _err(loc, "expert entry must be an object")
    expert_id = raw.get("id")
    if not expert_id or not isinstance(expert_id, str):
        raise _err(loc, f"missing or invalid expert id: {expert_id!r}")

    cats = raw.get("categories")
    ratings = None
    chain = None
    if isinstance(cats, dict) and "order" in cats:
        order = cats.get("order")
        phi = cats.get("phi")
        if sorted(order or []) != sorted(CATEGORIES):
            raise _err(loc, f"categories.order must be a permutation of {CATEGORIES}")
        if not isinstance(phi, list) or len(phi) != len(CATEGORIES) - 1:
            raise _err(loc, f"categories.phi must list {len(CATEGORIES) - 1} values")
        vals = []
        for v in phi:
            if not isinstance(v, (int, float)) or v < 1:
                raise _err(loc, f"categories.phi values must be numbers >= 1, got {v!r}")
            vals.append(float(v))
        chain = (tuple(str(c) for c in order), tuple(vals))
    elif isinstance(cats, dict):
        if sorted(cats) != sorted(CATEGORIES):
            raise _err(loc, f"categories must rate exactly {CATEGORIES}")
        ratings = {}
        for cat, v in cats.items():
            if v not in RATING_RANGE:
                raise _err(f"{loc}.categories.{cat}", f"rating out of range 1-5: {v!r}")
            ratings[cat] = int(v)
    else:
        raise _err(loc, "categories must be a rating object or a direct chain")

    subs_raw = raw.get("sub_attributes")
    if not isinstance(subs_raw, dict) or sorted(subs_raw) != sorted(CATEGORIES):
        raise _err(loc, f"sub_attributes must cover exactly the categories {CATEGORIES}")
    subs: dict[str, tuple[SubAttributeEntry, ...]] = {}
    for cat in CATEGORIES:
        cat_codes = set(registry.category_codes(cat))
        entries = [
            _parse_entry(e, f"{loc}.sub_attributes.{cat}[{i}]", cat_codes)
            for i, e in enumerate(subs_raw[cat])
        ]
        codes = [e.code for e in entries]
        if sorted(codes) != sorted(cat_codes):
            raise _err(
                f"{loc}.sub_attributes.{cat}",
                f"entries must cover exactly {sorted(cat_codes)}, got {sorted(codes)}",
            )
        ranks = sorted(e.rank for e in entries)
        if ranks != list(range(1, len(entries) + 1)):
            raise _err(f"{loc}.sub_attributes.{cat}", f"ranks must be a permutation of 1..{len(entries)}")
        has_term = [e.term is not None for e in entries]
        has_rating = [e.rating is not None for e in entries]
        ordered = tuple(sorted(entries, key=lambda e: e.rank))
        if all(has_rating):
            pass
        elif any(has_rating):
            raise _err(f"{loc}.sub_attributes.{cat}", "mix of rating and term entries")
        else:
            # term path: every entry below rank 1 needs a term
            for e in ordered[1:]:
                if e.term is None:
                    raise _err(
                        f"{loc}.sub_attributes.{cat}",
                        f"entry {e.code} (rank {e.rank}) needs a linguistic term",
                    )
        subs[cat] = ordered
    return ExpertSurvey(expert_id, ratings, chain, subs)


def parse_surveys(doc, registry: Registry) -> list[ExpertSurvey]:
    """Validate a survey document (dict) into expert surveys."""
    if not isinstance(doc, dict) or not isinstance(doc.get("experts"), list):
        raise InputError("survey document must be an object with an 'experts' list")
    experts_raw = doc["experts"]
    if not experts_raw:
        raise InputError("no experts in survey document")
    surveys = []
    seen = set()
    for i, raw in enumerate(experts_raw):
        s = _parse_expert(raw, f"experts[{i}]", registry)
        if s.expert_id in seen:
            raise InputError(f"experts[{i}]: duplicate expert id {s.expert_id!r}")
        seen.add(s.expert_id)
        surveys.append(s)
    return surveys


def load_surveys(path: str | Path, registry: Registry) -> list[ExpertSurvey]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read survey file {path}: {e}") from e
    return parse_surveys(doc, registry)


def _category_chain(survey: ExpertSurvey) -> ComparativeChain:
    if survey.category_chain is not None:
        order, phi = survey.category_chain
        return ComparativeChain(order, tuple(crisp(v) for v in phi))
    ratings = survey.category_ratings
    # stable tie order by canonical category declaration
    codes = sorted(CATEGORIES, key=lambda c: (-ratings[c], CATEGORIES.index(c)))
    return chain_from_priorities(codes, [ratings[c] for c in codes])


def _sub_chain(entries: tuple[SubAttributeEntry, ...], scale: LinguisticScale) -> ComparativeChain:
    codes = [e.code for e in entries]
    if entries[0].rating is not None:
        ratings = [e.rating for e in entries]
        for k in range(len(ratings) - 1):
            if ratings[k + 1] > ratings[k]:
                raise InputError(
                    f"ratings must not increase down the ranking (criterion {codes[k + 1]})"
                )
        return chain_from_priorities(codes, ratings)
    if len(entries) == 1:
        return ComparativeChain(tuple(codes), ())
    return chain_from_terms(codes, [e.term for e in entries[1:]], scale)


@dataclass(frozen=True)
class ExpertWeights:
    expert_id: str
    category_weights: CrispWeights
    local: dict[str, CrispWeights]  # per category, defuzzified
    fuzzy_local: dict[str, FuzzyWeights]

    @property
    def chi(self) -> dict[str, float]:
        out = {"categories": self.category_weights.chi}
        out.update({cat: w.chi for cat, w in self.local.items()})
        return out

    @property
    def consistent(self) -> dict[str, bool]:
        out = {"categories": self.category_weights.consistent}
        out.update({cat: w.consistent for cat, w in self.local.items()})
        return out


def per_expert_weights(
    survey: ExpertSurvey, scale: LinguisticScale, registry: Registry
) -> ExpertWeights:
    try:
        cat_sol = solve_fucom_crisp(_category_chain(survey))
    except SolverError as e:
        raise SolverError(f"expert {survey.expert_id}, categories: {e}") from e
    local: dict[str, CrispWeights] = {}
    fuzzy_local: dict[str, FuzzyWeights] = {}
    for cat in CATEGORIES:
        try:
            fsol = solve_ffucom(_sub_chain(survey.sub_attributes[cat], scale))
            fuzzy_local[cat] = fsol
            local[cat] = defuzzify_weights(fsol)
        except SolverError as e:
            raise SolverError(f"expert {survey.expert_id}, category {cat}: {e}") from e
    return ExpertWeights(survey.expert_id, cat_sol, local, fuzzy_local)


@dataclass(frozen=True)
class GlobalWeightTable:
    codes: tuple[str, ...]  # registry order
    weights: dict[str, float]  # code -> global weight, sums to 1
    category_of: dict[str, str]
    per_expert: tuple[ExpertWeights, ...] = ()
    chi: dict = field(default_factory=dict)

    @property
    def category_totals(self) -> dict[str, float]:
        totals = {cat: 0.0 for cat in CATEGORIES}
        for code, w in self.weights.items():
            totals[self.category_of[code]] += w
        return totals


def global_weights(expert_sets: list[ExpertWeights], registry: Registry) -> GlobalWeightTable:
    """global(sub) = local(sub) x weight(category), averaged over experts,
    then renormalized to sum exactly 1."""
    if not expert_sets:
        raise InputError("need at least one expert weight set")
    codes = registry.codes
    acc = np.zeros(len(codes))
    for ew in expert_sets:
        cat_w = ew.category_weights.as_dict()
        if sorted(cat_w) != sorted(CATEGORIES):
            raise InputError(f"expert {ew.expert_id}: category weights do not cover {CATEGORIES}")
        per_code = {}
        for cat in CATEGORIES:
            loc = ew.local[cat].as_dict()
            if sorted(loc) != sorted(registry.category_codes(cat)):
                raise InputError(
                    f"expert {ew.expert_id}, category {cat}: local weights do not match registry"
                )
            for code, w in loc.items():
                per_code[code] = w * cat_w[cat]
        acc += np.array([per_code[c] for c in codes])
    mean = acc / len(expert_sets)
    total = mean.sum()
    if total <= 0:
        raise InputError("aggregated weights sum to zero")
    mean = mean / total
    weights = {c: float(w) for c, w in zip(codes, mean)}
    chi = {ew.expert_id: ew.chi for ew in expert_sets}
    return GlobalWeightTable(
        codes,
        weights,
        {c.code: c.category for c in registry.criteria},
        tuple(expert_sets),
        chi,
    )
