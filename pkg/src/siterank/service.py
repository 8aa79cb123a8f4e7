"""Read-only HTTP facade over a loaded dataset snapshot.

All endpoints serve canonical JSON produced by the same document builders
as the CLI, so both surfaces are byte-identical on the same inputs.  The
snapshot is immutable; reloading data means restarting the service.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .documents import (
    Dataset,
    canonical_json,
    ranking_document,
    sites_document,
    weights_document,
    whatif_document,
)
from .errors import InputError
from .wsm import whatif


def _canonical(doc) -> Response:
    return Response(content=canonical_json(doc), media_type="application/json")


def _error(status: int, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": detail})


def create_app(ds: Dataset) -> FastAPI:
    app = FastAPI(title="siterank", docs_url=None, redoc_url=None)

    @app.get("/api/weights")
    def get_weights():
        doc = weights_document(ds.table)
        return _canonical(doc)

    @app.get("/api/ranking")
    def get_ranking(group: str | None = None, mode: str = "overall"):
        try:
            doc = ranking_document(ds, group=group or None, mode=mode)
        except InputError as e:
            return _error(422, str(e))
        return _canonical(doc)

    @app.get("/api/sites")
    def get_sites():
        return _canonical(sites_document(ds))

    @app.post("/api/whatif")
    async def post_whatif(request: Request):
        try:
            body = await request.body()
            payload = json.loads(body) if body else {}
        except json.JSONDecodeError as e:
            return _error(400, f"request body is not valid JSON: {e}")
        if not isinstance(payload, dict):
            return _error(400, "request body must be a JSON object")
        overrides = payload.get("overrides", {})
        if not isinstance(overrides, dict):
            return _error(400, "overrides must be an object of code -> weight")
        for code, v in overrides.items():
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                return _error(400, f"override for {code!r} must be a number, got {v!r}")
        try:
            report = whatif(ds.table, {str(k): float(v) for k, v in overrides.items()}, ds.norm)
        except InputError as e:
            return _error(422, str(e))
        return _canonical(whatif_document(ds, report))

    return app
