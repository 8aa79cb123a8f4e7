#!/usr/bin/env python3
"""Record real service responses as UI test fixtures.

The UI tests run without a live backend, so they replay these captures.
Re-run after any change to the service document formats:

    python frontend/scripts/record_fixtures.py
"""

from pathlib import Path

from fastapi.testclient import TestClient

from siterank.documents import Dataset, load_weight_document
from siterank.registry import default_registry
from siterank.service import create_app

ROOT = Path(__file__).resolve().parent.parent.parent
FIXTURES = ROOT / "fixtures"
OUT = ROOT / "frontend" / "test" / "fixtures"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    registry = default_registry()
    table = load_weight_document(FIXTURES / "golden" / "weights.json", registry)
    ds = Dataset.load(FIXTURES / "sites_220.csv", registry, table)
    client = TestClient(create_app(ds))

    captures = {
        "ranking.json": client.get("/api/ranking"),
        "weights.json": client.get("/api/weights"),
        "whatif_fp3.json": client.post("/api/whatif", json={"overrides": {"FP3": 0.2}}),
        "whatif_sp6_only.json": client.post(
            "/api/whatif", json={"overrides": {"SP6": 1.0}}
        ),
        "whatif_error_unknown_code.json": client.post(
            "/api/whatif", json={"overrides": {"ZZ9": 0.1}}
        ),
    }
    for name, resp in captures.items():
        (OUT / name).write_bytes(resp.content)
        print(f"{name}: HTTP {resp.status_code}, {len(resp.content)} bytes")


if __name__ == "__main__":
    main()
