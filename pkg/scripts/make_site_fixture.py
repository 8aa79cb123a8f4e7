#!/usr/bin/env python3
"""Generate the deterministic synthetic 220-site fixture CSV.

The real site-attribute table behind the study is unpublished; this
script fabricates one with the right shape (220 rows x 22 criteria,
binary columns as true/false) using a fixed seed so the committed file
never changes.  Run from the repo root:

    python scripts/make_site_fixture.py
"""

import csv
from pathlib import Path

import numpy as np

from siterank.registry import default_registry

SEED = 2026
OUT = Path(__file__).resolve().parent.parent / "fixtures" / "sites_220.csv"

STATES = [
    "AL", "AZ", "AR", "CA", "CO", "FL", "GA", "IL", "IN", "IA", "KS", "KY",
    "LA", "MD", "MI", "MN", "MS", "MO", "MT", "NE", "NV", "NM", "NY", "NC",
    "ND", "OH", "OK", "PA", "SC", "SD", "TN", "TX", "UT", "VA", "WA", "WV",
    "WI", "WY",
]

# per-criterion (low, high) ranges for the numeric columns; arbitrary but
# scaled differently on purpose so normalization is actually exercised
RANGES = {
    "SP1": (0, 3), "SP2": (0, 10), "SP3": (45, 140), "SP5": (0, 1),
    "SP6": (2026, 2045), "FP1": (-20, 60), "FP2": (0, 500), "FP3": (0, 25),
    "RHM2": (0, 100), "RHM3": (0, 250), "RHM4": (0, 10), "RHM6": (0, 1),
    "RHM7": (0, 50), "RHM8": (0, 5), "CSF1": (500, 900000), "CSF2": (0, 120),
    "CSF3": (0, 6), "CSF4": (0, 15), "CSF5": (0, 40),
}


def main():
    rng = np.random.default_rng(SEED)
    registry = default_registry()
    header = ["site_id", "name", "state", "lat", "lon"] + list(registry.codes)
    rows = []
    for i in range(1, 221):
        site_id = f"S{i:03d}"
        name = f"Plant {i:03d}"
        state = STATES[int(rng.integers(len(STATES)))]
        lat = round(float(rng.uniform(25.0, 49.0)), 4)
        lon = round(float(rng.uniform(-124.0, -67.0)), 4)
        row = [site_id, name, state, f"{lat:.4f}", f"{lon:.4f}"]
        for spec in registry.criteria:
            if spec.kind == "binary":
                row.append("true" if rng.random() < 0.3 else "false")
            else:
                lo, hi = RANGES[spec.code]
                row.append(f"{rng.uniform(lo, hi):.4f}")
        rows.append(row)
    with OUT.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {len(rows)} sites to {OUT}")


if __name__ == "__main__":
    main()
