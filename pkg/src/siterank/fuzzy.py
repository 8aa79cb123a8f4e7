"""Triangular fuzzy numbers, linguistic significance scales, and GMIR.

Only the arithmetic the weighting model needs: componentwise
multiplication of nonnegative triangular numbers and graded-mean
defuzzification.  No division, no alpha-cuts.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError


@dataclass(frozen=True, order=False)
class TFN:
    """Triangular fuzzy number (l, m, u) with 0 <= l <= m <= u."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        for name, v in (("l", self.l), ("m", self.m), ("u", self.u)):
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise InputError(f"TFN component {name} must be a finite number, got {v!r}")
        if self.l > self.m:
            raise InputError(f"TFN ordering violated: l > m ({self.l} > {self.m})")
        if self.m > self.u:
            raise InputError(f"TFN ordering violated: m > u ({self.m} > {self.u})")
        if self.l < 0:
            raise InputError(f"TFN lower bound must be nonnegative, got {self.l}")

    @property
    def is_crisp(self) -> bool:
        return self.l == self.m == self.u

    @property
    def spread(self) -> float:
        return self.u - self.l

    def as_list(self) -> list[float]:
        return [self.l, self.m, self.u]


def tfn(l: float, m: float, u: float) -> TFN:
    return TFN(float(l), float(m), float(u))


def crisp(x: float) -> TFN:
    x = float(x)
    return TFN(x, x, x)


def tfn_mul(a: TFN, b: TFN) -> TFN:
    """Componentwise product; exact for nonnegative triangular numbers."""
    return TFN(a.l * b.l, a.m * b.m, a.u * b.u)


def gmir(t: TFN) -> float:
    """Graded mean integration representation: (l + 4m + u) / 6."""
    return (t.l + 4.0 * t.m + t.u) / 6.0


def report_key(t: TFN) -> tuple[float, float]:
    """Deterministic ordering key for fuzzy quantities: GMIR, then modal value."""
    return (gmir(t), t.m)


class LinguisticScale:
    """Ordered term -> TFN table with strictly increasing modal values."""

    def __init__(self, entries: list[tuple[str, TFN]]):
        if not entries:
            raise InputError("linguistic scale must have at least one term")
        names = [name for name, _ in entries]
        if len(set(names)) != len(names):
            raise InputError("linguistic scale terms must be unique")
        keys = [report_key(t) for _, t in entries]
        if any(b <= a for a, b in zip(keys, keys[1:])):
            raise InputError(
                "linguistic scale entries must be strictly increasing in (GMIR, modal) order"
            )
        self._entries = tuple(entries)
        self._by_name = dict(entries)

    @property
    def entries(self) -> tuple[tuple[str, TFN], ...]:
        return self._entries

    def terms(self) -> list[str]:
        return [name for name, _ in self._entries]

    def lookup(self, term: str) -> TFN:
        try:
            return self._by_name[term]
        except KeyError:
            raise InputError(
                f"unknown linguistic term {term!r}; valid terms: {', '.join(self.terms())}"
            ) from None

    def __contains__(self, term: str) -> bool:
        return term in self._by_name

    def __eq__(self, other) -> bool:
        return isinstance(other, LinguisticScale) and self._entries == other._entries

    @classmethod
    def from_mapping(cls, mapping: dict) -> "LinguisticScale":
        entries = []
        for name, triple in mapping.items():
            if not isinstance(triple, (list, tuple)) or len(triple) != 3:
                raise InputError(f"scale entry {name!r} must be a [l, m, u] triple")
            entries.append((str(name), tfn(*triple)))
        entries.sort(key=lambda e: report_key(e[1]))
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path) -> "LinguisticScale":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"cannot read linguistic scale {path}: {e}") from e
        if not isinstance(doc, dict):
            raise InputError(f"linguistic scale {path}: expected an object of term -> [l, m, u]")
        return cls.from_mapping(doc)


# Default significance scale; user-overridable via a scale file.  The top
# term triple widens with intensity, and every non-identity term has
# GMIR >= 1 so it can serve as a comparative significance.
DEFAULT_SCALE = LinguisticScale(
    [
        ("Equally Significant", TFN(1.0, 1.0, 1.0)),
        ("Weakly Significant", TFN(2 / 3, 1.0, 3 / 2)),
        ("Moderately Significant", TFN(3 / 2, 2.0, 5 / 2)),
        ("Very Significant", TFN(5 / 2, 3.0, 7 / 2)),
        ("Absolutely Significant", TFN(7 / 2, 4.0, 9 / 2)),
    ]
)
