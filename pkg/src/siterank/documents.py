"""Output document schemas shared by the CLI and the HTTP service.

Every document carries schema_version so downstream consumers (golden
tests, the browser UI) can pin the format.  Serialization goes through
canonical_json so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputError
from .fuzzy import LinguisticScale
from .matrix import DecisionMatrix, load_sites, normalize
from .registry import CATEGORIES, Registry
from .surveys import ExpertWeights, GlobalWeightTable
from .wsm import WhatIfReport, display_normalize, group_scores, listing_order, rank, score

SCHEMA_VERSION = 1


def canonical_json(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def write_document(doc, path: str | Path) -> None:
    Path(path).write_text(canonical_json(doc), encoding="utf-8")


def _expert_block(ew: ExpertWeights) -> dict:
    return {
        "id": ew.expert_id,
        "category_weights": {c: w for c, w in ew.category_weights.as_dict().items()},
        "local": {cat: sol.as_dict() for cat, sol in ew.local.items()},
        "fuzzy_local": {
            cat: {code: t.as_list() for code, t in zip(sol.codes, sol.weights)}
            for cat, sol in ew.fuzzy_local.items()
        },
        "chi": ew.chi,
        "consistent": ew.consistent,
    }


def weights_document(table: GlobalWeightTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "global": [
            {"code": c, "category": table.category_of[c], "weight": table.weights[c]}
            for c in table.codes
        ],
        "category_totals": table.category_totals,
        "chi": table.chi,
        "per_expert": [_expert_block(ew) for ew in table.per_expert],
    }


def weight_table_from_document(doc, registry: Registry) -> GlobalWeightTable:
    """Load a weight document (possibly external, e.g. published figures)
    back into a table.  Weights are renormalized to sum exactly 1."""
    if not isinstance(doc, dict) or not isinstance(doc.get("global"), list):
        raise InputError("weight document must be an object with a 'global' list")
    weights = {}
    for i, entry in enumerate(doc["global"]):
        code = entry.get("code")
        if code not in registry.by_code:
            raise InputError(f"global[{i}]: unknown criterion code {code!r}")
        if code in weights:
            raise InputError(f"global[{i}]: duplicate code {code!r}")
        w = entry.get("weight")
        if not isinstance(w, (int, float)) or w < 0:
            raise InputError(f"global[{i}]: weight must be a nonnegative number, got {w!r}")
        cat = entry.get("category")
        if cat is not None and cat != registry.by_code[code].category:
            raise InputError(
                f"global[{i}]: code {code} declared in category {cat!r} but the "
                f"registry puts it in {registry.by_code[code].category!r}"
            )
        weights[code] = float(w)
    missing = [c for c in registry.codes if c not in weights]
    if missing:
        raise InputError(f"weight document missing codes: {', '.join(missing)}")
    total = sum(weights.values())
    if total <= 0:
        raise InputError("weight document weights sum to zero")
    weights = {c: w / total for c, w in weights.items()}
    return GlobalWeightTable(
        registry.codes,
        weights,
        {c.code: c.category for c in registry.criteria},
        per_expert=(),
        chi=doc.get("chi", {}) or {},
    )


def load_weight_document(path: str | Path, registry: Registry) -> GlobalWeightTable:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read weight document {path}: {e}") from e
    return weight_table_from_document(doc, registry)


@dataclass(frozen=True)
class Dataset:
    """Immutable snapshot of everything scoring needs."""

    registry: Registry
    table: GlobalWeightTable
    raw: DecisionMatrix
    norm: DecisionMatrix

    @classmethod
    def load(
        cls,
        sites_path: str | Path,
        registry: Registry,
        table: GlobalWeightTable,
        method: str = "minmax",
    ) -> "Dataset":
        raw = load_sites(sites_path, registry)
        return cls(registry, table, raw, normalize(raw, registry, method))


def _site_entries(ds: Dataset, scores, extra_per_site=None) -> list[dict]:
    ranks = rank(scores)
    disp = display_normalize(scores)
    entries = []
    for i in listing_order(scores, ds.norm.site_ids):
        site = ds.norm.sites[i]
        entry = {
            "site_id": site.site_id,
            "name": site.name,
            "state": site.state,
            "score": float(scores[i]),
            "score_display": float(disp[i]),
            "rank": int(ranks[i]),
        }
        if extra_per_site is not None:
            entry.update(extra_per_site(i))
        entries.append(entry)
    return entries


def ranking_document(ds: Dataset, group: str | None = None, mode: str = "overall") -> dict:
    """Overall + per-group ranking document; a single-group table when
    group is given."""
    if mode not in ("overall", "renormalized"):
        raise InputError(f"unknown group-weight mode {mode!r}")
    renorm = mode == "renormalized"
    if group is not None:
        if group not in CATEGORIES:
            raise InputError(f"unknown category {group!r}; expected one of {CATEGORIES}")
        g_scores = group_scores(ds.norm, ds.table, group, ds.registry, renorm)
        return {
            "schema_version": SCHEMA_VERSION,
            "group": group,
            "mode": mode,
            "sites": _site_entries(ds, g_scores),
            "weights_used": {c: ds.table.weights[c] for c in ds.registry.category_codes(group)},
            "chi_summary": ds.table.chi,
        }

    overall = score(ds.norm, ds.table.weights)
    per_group = {
        cat: group_scores(ds.norm, ds.table, cat, ds.registry, renorm) for cat in CATEGORIES
    }
    group_ranks = {cat: rank(s) for cat, s in per_group.items()}
    group_disp = {cat: display_normalize(s) for cat, s in per_group.items()}

    def extra(i):
        return {
            "groups": {
                cat: {
                    "score": float(per_group[cat][i]),
                    "score_display": float(group_disp[cat][i]),
                    "rank": int(group_ranks[cat][i]),
                }
                for cat in CATEGORIES
            }
        }

    return {
        "schema_version": SCHEMA_VERSION,
        "group": None,
        "mode": mode,
        "sites": _site_entries(ds, overall, extra),
        "weights_used": dict(ds.table.weights),
        "chi_summary": ds.table.chi,
    }


def whatif_document(ds: Dataset, report: WhatIfReport) -> dict:
    disp = display_normalize(report.scores)
    entries = []
    for i in listing_order(report.scores, ds.norm.site_ids):
        site = ds.norm.sites[i]
        entries.append(
            {
                "site_id": site.site_id,
                "name": site.name,
                "state": site.state,
                "score": float(report.scores[i]),
                "score_display": float(disp[i]),
                "rank": int(report.ranks[i]),
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "overrides": dict(report.overrides),
        "weights": dict(report.weights),
        "sites": entries,
        "reversals": [list(p) for p in report.reversals],
        "reversal_count": report.reversal_count,
    }


def sites_document(ds: Dataset) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "sites": [
            {
                "site_id": s.site_id,
                "name": s.name,
                "state": s.state,
                "lat": s.lat,
                "lon": s.lon,
            }
            for s in ds.raw.sites
        ],
    }


def default_scale() -> LinguisticScale:
    from .fuzzy import DEFAULT_SCALE

    return DEFAULT_SCALE
