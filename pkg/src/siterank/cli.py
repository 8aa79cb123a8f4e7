"""Command-line pipeline: derive weights, rank sites, explore what-ifs,
and serve the HTTP API.

Exit codes: 0 success, 2 input error, 3 internal/solver error.
Set SITERANK_LOG=debug|info|warning to control verbosity.
"""

from __future__ import annotations

import functools
import json
import logging
import os
import sys
from pathlib import Path

import click

from .documents import (
    Dataset,
    load_weight_document,
    ranking_document,
    weights_document,
    whatif_document,
    write_document,
)
from .errors import InputError, SiteRankError
from .fuzzy import DEFAULT_SCALE, LinguisticScale
from .registry import CATEGORIES, Registry, default_registry, load_registry
from .surveys import global_weights, load_surveys, per_expert_weights
from .wsm import whatif as run_whatif

log = logging.getLogger("siterank")


def _setup_logging():
    level = os.environ.get("SITERANK_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as e:
            click.echo(f"input error: {e}", err=True)
            sys.exit(2)
        except SiteRankError as e:
            click.echo(f"internal error: {e}", err=True)
            sys.exit(3)

    return wrapper


def _load_registry(path: str | None) -> Registry:
    return load_registry(path) if path else default_registry()


def _load_scale(path: str | None) -> LinguisticScale:
    return LinguisticScale.load(path) if path else DEFAULT_SCALE


def _load_dataset(sites, registry_path, weights_path, method="minmax") -> Dataset:
    registry = _load_registry(registry_path)
    table = load_weight_document(weights_path, registry)
    return Dataset.load(sites, registry, table, method)


@click.group()
def main():
    _setup_logging()


@main.command()
@click.option("--surveys", "surveys_path", required=True, type=click.Path())
@click.option("--scale", "scale_path", type=click.Path(), default=None, help="linguistic scale file (default: built-in)")
@click.option("--registry", "registry_path", type=click.Path(), default=None, help="criteria registry file (default: built-in)")
@click.option("--out", "out_path", required=True, type=click.Path())
@handle_errors
def weights(surveys_path, scale_path, registry_path, out_path):
    """Solve per-expert weight models and write the global weight document."""
    registry = _load_registry(registry_path)
    scale = _load_scale(scale_path)
    surveys = load_surveys(surveys_path, registry)
    log.info("solving weight models for %d experts", len(surveys))
    expert_sets = [per_expert_weights(s, scale, registry) for s in surveys]
    table = global_weights(expert_sets, registry)
    write_document(weights_document(table), out_path)
    click.echo(f"wrote weights for {len(table.codes)} criteria to {out_path}")


@main.command()
@click.option("--sites", "sites_path", required=True, type=click.Path())
@click.option("--registry", "registry_path", type=click.Path(), default=None)
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--group", type=click.Choice(CATEGORIES), default=None)
@click.option("--mode", type=click.Choice(["overall", "renormalized"]), default="overall")
@click.option("--normalization", type=click.Choice(["minmax", "vector"]), default="minmax")
@click.option("--out", "out_path", required=True, type=click.Path())
@handle_errors
def rank(sites_path, registry_path, weights_path, group, mode, normalization, out_path):
    """Score and rank sites; optionally a single attribute-group table."""
    ds = _load_dataset(sites_path, registry_path, weights_path, normalization)
    doc = ranking_document(ds, group=group, mode=mode)
    write_document(doc, out_path)
    click.echo(f"wrote ranking of {len(doc['sites'])} sites to {out_path}")


def parse_adjust(spec: str) -> dict[str, float]:
    overrides: dict[str, float] = {}
    if not spec:
        return overrides
    for piece in spec.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise InputError(f"invalid override {piece!r}; expected CODE=WEIGHT")
        code, _, value = piece.partition("=")
        code = code.strip()
        try:
            overrides[code] = float(value)
        except ValueError:
            raise InputError(f"invalid override weight in {piece!r}") from None
    return overrides


@main.command()
@click.option("--sites", "sites_path", required=True, type=click.Path())
@click.option("--registry", "registry_path", type=click.Path(), default=None)
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--adjust", default="", help="overrides as CODE=W[,CODE=W...]")
@click.option("--normalization", type=click.Choice(["minmax", "vector"]), default="minmax")
@click.option("--out", "out_path", required=True, type=click.Path())
@handle_errors
def whatif(sites_path, registry_path, weights_path, adjust, normalization, out_path):
    """Re-rank with overridden weights and report rank reversals."""
    ds = _load_dataset(sites_path, registry_path, weights_path, normalization)
    overrides = parse_adjust(adjust)
    report = run_whatif(ds.table, overrides, ds.norm)
    write_document(whatif_document(ds, report), out_path)
    click.echo(f"wrote what-if report ({report.reversal_count} reversals) to {out_path}")


@main.command()
@click.option("--port", type=click.IntRange(1, 65535), default=8000)
@click.option("--host", default="127.0.0.1")
@click.option("--sites", "sites_path", required=True, type=click.Path())
@click.option("--registry", "registry_path", type=click.Path(), default=None)
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--normalization", type=click.Choice(["minmax", "vector"]), default="minmax")
@handle_errors
def serve(port, host, sites_path, registry_path, weights_path, normalization):
    """Serve the read-only API over an immutable dataset snapshot."""
    import uvicorn

    from .service import create_app

    ds = _load_dataset(sites_path, registry_path, weights_path, normalization)
    app = create_app(ds)
    click.echo(f"serving {len(ds.norm.site_ids)} sites on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
