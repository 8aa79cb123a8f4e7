#!/usr/bin/env python3
"""Regenerate the golden output documents from the committed fixtures.

Run only when an intentional format or pipeline change invalidates the
golden files; the end-to-end test compares byte for byte against them.

    python scripts/regenerate_golden.py
"""

from pathlib import Path

from siterank.documents import (
    Dataset,
    ranking_document,
    weights_document,
    whatif_document,
    write_document,
)
from siterank.fuzzy import DEFAULT_SCALE
from siterank.registry import default_registry
from siterank.surveys import global_weights, load_surveys, per_expert_weights
from siterank.documents import weight_table_from_document
from siterank.wsm import whatif

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"


def main():
    GOLDEN.mkdir(exist_ok=True)
    registry = default_registry()
    surveys = load_surveys(FIXTURES / "surveys_5experts.json", registry)
    expert_sets = [per_expert_weights(s, DEFAULT_SCALE, registry) for s in surveys]
    table = global_weights(expert_sets, registry)
    wdoc = weights_document(table)
    write_document(wdoc, GOLDEN / "weights.json")

    # rank with the weights document exactly as the CLI would reload it
    reloaded = weight_table_from_document(wdoc, registry)
    ds = Dataset.load(FIXTURES / "sites_220.csv", registry, reloaded)
    write_document(ranking_document(ds), GOLDEN / "ranking.json")
    write_document(
        whatif_document(ds, whatif(ds.table, {"FP3": 0.2}, ds.norm)),
        GOLDEN / "whatif_fp3.json",
    )
    print(f"regenerated golden documents in {GOLDEN}")


if __name__ == "__main__":
    main()
