"""Criteria registry: codes, categories, value kinds, and directions.

The registry is plain config so display names and benefit/cost directions
can be edited without touching code.  The category partition is fixed by
the attribute taxonomy (SP x6, FP x3, RHM x8, CSF x5).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError

CATEGORIES = ("SP", "FP", "RHM", "CSF")
CATEGORY_SIZES = {"SP": 6, "FP": 3, "RHM": 8, "CSF": 5}

_KINDS = ("numeric", "binary")
_DIRECTIONS = ("benefit", "cost")


@dataclass(frozen=True)
class CriterionSpec:
    code: str
    category: str
    name: str
    kind: str  # numeric | binary
    direction: str  # benefit | cost

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise InputError(f"criterion {self.code}: unknown category {self.category!r}")
        if self.kind not in _KINDS:
            raise InputError(f"criterion {self.code}: kind must be one of {_KINDS}")
        if self.direction not in _DIRECTIONS:
            raise InputError(f"criterion {self.code}: direction must be one of {_DIRECTIONS}")


class Registry:
    def __init__(self, criteria: list[CriterionSpec]):
        codes = [c.code for c in criteria]
        if len(set(codes)) != len(codes):
            raise InputError("registry criterion codes must be unique")
        for cat, size in CATEGORY_SIZES.items():
            have = sum(1 for c in criteria if c.category == cat)
            if have != size:
                raise InputError(
                    f"registry must have {size} {cat} criteria, got {have}"
                )
        self.criteria = tuple(criteria)
        self.by_code = {c.code: c for c in criteria}

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(c.code for c in self.criteria)

    def category_codes(self, category: str) -> tuple[str, ...]:
        if category not in CATEGORIES:
            raise InputError(f"unknown category {category!r}; expected one of {CATEGORIES}")
        return tuple(c.code for c in self.criteria if c.category == category)

    def __len__(self) -> int:
        return len(self.criteria)


def registry_from_document(doc: dict) -> Registry:
    if not isinstance(doc, dict) or "criteria" not in doc:
        raise InputError("registry document must be an object with a 'criteria' list")
    specs = []
    for i, entry in enumerate(doc["criteria"]):
        try:
            specs.append(
                CriterionSpec(
                    code=str(entry["code"]),
                    category=str(entry["category"]),
                    name=str(entry.get("name", entry["code"])),
                    kind=str(entry.get("kind", "numeric")),
                    direction=str(entry.get("direction", "benefit")),
                )
            )
        except KeyError as e:
            raise InputError(f"registry criteria[{i}]: missing field {e}") from None
    return Registry(specs)


def load_registry(path: str | Path) -> Registry:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read registry {path}: {e}") from e
    return registry_from_document(doc)


def default_registry() -> Registry:
    text = resources.files("siterank.data").joinpath("default_registry.json").read_text("utf-8")
    return registry_from_document(json.loads(text))
