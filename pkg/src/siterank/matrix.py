"""Site table ingestion and decision-matrix normalization."""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import InputError
from .registry import Registry

META_COLUMNS = ("site_id", "name", "state", "lat", "lon")

NORMALIZATION_METHODS = ("minmax", "vector")

# value used for a column with zero range, so degenerate criteria neither
# reward nor penalize any site
DEGENERATE_FILL = 0.5


@dataclass(frozen=True)
class SiteRecord:
    site_id: str
    name: str
    state: str
    lat: float
    lon: float


@dataclass(frozen=True)
class DecisionMatrix:
    sites: tuple[SiteRecord, ...]
    codes: tuple[str, ...]
    grid: np.ndarray  # shape (n_sites, n_criteria)
    normalized: bool = False

    @property
    def site_ids(self) -> tuple[str, ...]:
        return tuple(s.site_id for s in self.sites)

    def column(self, code: str) -> np.ndarray:
        try:
            j = self.codes.index(code)
        except ValueError:
            raise InputError(f"unknown criterion code {code!r}") from None
        return self.grid[:, j]


def coerce_binary(value, *, site: str = "?", code: str = "?") -> float:
    """Booleans only: True -> 1.0, False -> 0.0."""
    if value is True:
        return 1.0
    if value is False:
        return 0.0
    raise InputError(
        f"site {site}, criterion {code}: binary criterion needs true/false, got {value!r}"
    )


def _parse_cell(raw: str, kind: str, *, site: str, code: str, row: int, col: str) -> float:
    text = raw.strip()
    where = f"row {row}, column {col}"
    if kind == "binary":
        low = text.lower()
        if low == "true":
            return coerce_binary(True, site=site, code=code)
        if low == "false":
            return coerce_binary(False, site=site, code=code)
        raise InputError(
            f"{where}: binary criterion {code} needs true/false, got {raw!r}"
        )
    try:
        return float(text)
    except ValueError:
        raise InputError(f"{where}: cannot parse {raw!r} as a number") from None


def load_sites(path: str | Path, registry: Registry) -> DecisionMatrix:
    """Read the delimited site table; header must carry the metadata
    columns followed by every registry code."""
    path = Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            rows = list(reader)
    except OSError as e:
        raise InputError(f"cannot read site table {path}: {e}") from e
    if not rows:
        raise InputError(f"site table {path} is empty")
    header = [h.strip() for h in rows[0]]
    expected = list(META_COLUMNS) + list(registry.codes)
    missing = [c for c in expected if c not in header]
    if missing:
        raise InputError(f"site table missing columns: {', '.join(missing)}")
    idx = {c: header.index(c) for c in expected}

    sites: list[SiteRecord] = []
    grid: list[list[float]] = []
    seen: set[str] = set()
    for r, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) < len(header):
            raise InputError(f"row {r}: expected {len(header)} cells, got {len(row)}")
        site_id = row[idx["site_id"]].strip()
        if not site_id:
            raise InputError(f"row {r}: empty site_id")
        if site_id in seen:
            raise InputError(f"row {r}: duplicate site id {site_id!r}")
        seen.add(site_id)
        try:
            lat = float(row[idx["lat"]])
            lon = float(row[idx["lon"]])
        except ValueError:
            raise InputError(f"row {r}: cannot parse lat/lon") from None
        sites.append(
            SiteRecord(site_id, row[idx["name"]].strip(), row[idx["state"]].strip(), lat, lon)
        )
        values = []
        for code in registry.codes:
            raw = row[idx[code]]
            if raw is None or not raw.strip():
                raise InputError(f"row {r}, column {code}: missing value (no imputation)")
            values.append(
                _parse_cell(
                    raw, registry.by_code[code].kind, site=site_id, code=code, row=r, col=code
                )
            )
        grid.append(values)
    if not sites:
        raise InputError(f"site table {path} has no data rows")
    return DecisionMatrix(tuple(sites), tuple(registry.codes), np.array(grid, dtype=float))


def normalize(matrix: DecisionMatrix, registry: Registry, method: str = "minmax") -> DecisionMatrix:
    """Column-wise normalization into [0, 1], honoring benefit/cost
    directions.  Constant columns map to DEGENERATE_FILL everywhere."""
    if method not in NORMALIZATION_METHODS:
        raise InputError(f"unknown normalization method {method!r}; expected {NORMALIZATION_METHODS}")
    if matrix.grid.size == 0:
        raise InputError("cannot normalize an empty decision matrix")
    out = np.empty_like(matrix.grid)
    for j, code in enumerate(matrix.codes):
        col = matrix.grid[:, j]
        direction = registry.by_code[code].direction
        lo, hi = col.min(), col.max()
        if hi == lo:
            out[:, j] = DEGENERATE_FILL
            continue
        if method == "minmax":
            scaled = (col - lo) / (hi - lo)
        else:  # vector: shift to nonnegative, then scale by Euclidean norm
            shifted = col - lo
            scaled = shifted / np.linalg.norm(shifted)
        if direction == "cost":
            scaled = scaled.max() - scaled if method == "vector" else 1.0 - scaled
        out[:, j] = scaled
    return replace(matrix, grid=out, normalized=True)
