"""Stateless JSON HTTP facade over scheme construction, regularity, sampling.

Every endpoint is a GET returning a pure function of its query string, so
identical requests produce identical bodies.  Parameter problems always
surface as 400 with {"error": reason}; the reason strings are the same ones
the CLI prints, because both front ends share the grammar in serialize.
"""

from __future__ import annotations

from typing import Mapping, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import regularity as regmod
from . import serialize, subdivision
from .laurent import format_rational
from .regularity import exact_regularity
from .schemes import ParameterError, SchemeSpec, recentered
from .serialize import bounded_int, build_scheme

MAX_SAMPLE_LEVELS = 10
DEFAULT_SAMPLE_LEVELS = 5

SCHEME_KEYS = ("family", "m", "n", "l", "lprime", "omega")


def _scheme_from_query(params: Mapping[str, str]) -> SchemeSpec:
    family = params.get("family")
    if family is None:
        raise ParameterError("family is required")
    kw = {key: params.get(key) for key in SCHEME_KEYS[2:]}
    return build_scheme(family, params.get("m"), **kw)


def _folded_rows(spec: SchemeSpec) -> Optional[list[list[str]]]:
    b = recentered(spec.b)
    support = b.support()
    if b.symmetry().kind != "odd" or support is None or support[1] < 1:
        return None
    fold = regmod.folded_matrix(b, spec.m)
    return [[format_rational(entry) for entry in row] for row in fold.rows]


def scheme_document(spec: SchemeSpec) -> dict:
    """The /api/scheme body: CLI documents plus display conveniences."""
    report = exact_regularity(spec)
    lo, hi = subdivision.support_interval(spec)
    return {
        "spec": serialize.scheme_to_json(spec),
        "regularity": serialize.regularity_to_json(report),
        "display": serialize.display_regularity(report),
        "tau_float": float(spec.tau),
        "support": [format_rational(lo), format_rational(hi)],
        "support_float": [float(lo), float(hi)],
        "mask_float": [float(c) for c in spec.a.coeffs],
        "mask_offset": spec.a.offset,
        "b_float": [float(c) for c in spec.b.coeffs],
        "b_offset": spec.b.offset,
        "folded": _folded_rows(spec),
    }


def sample_document(spec: SchemeSpec, levels: int) -> dict:
    samples = subdivision.cardinal_samples(spec, levels)
    lo, hi = subdivision.support_interval(spec)
    return {
        "level": levels,
        "points": [[float(t), float(v)] for t, v in samples],
        "points_exact": [
            [format_rational(t), format_rational(v)] for t, v in samples
        ],
        "support": [float(lo), float(hi)],
        "support_exact": [format_rational(lo), format_rational(hi)],
    }


def sweep_document(m, steps) -> dict:
    rows = serialize.sweep_tension(m, steps)
    return {
        "m": int(m),
        "steps": len(rows) - 1,
        "omega_exact": [format_rational(w) for w, _ in rows],
        "rows": [
            [float(w), serialize.rho_value(report), report.regularity]
            for w, report in rows
        ],
    }


def create_app(static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="pseudospline service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(ParameterError)
    async def _parameter_error(request: Request, exc: ParameterError):
        return JSONResponse({"error": str(exc)}, status_code=400)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse({"error": "invalid query"}, status_code=400)

    @app.get("/api/health")
    def health() -> dict:
        return {"ok": True}

    @app.get("/api/scheme")
    def scheme(request: Request) -> dict:
        return scheme_document(_scheme_from_query(request.query_params))

    @app.get("/api/sample")
    def sample(request: Request) -> dict:
        params = request.query_params
        levels = params.get("levels")
        if levels is None:
            levels = DEFAULT_SAMPLE_LEVELS
        levels = bounded_int(levels, "levels", 1, MAX_SAMPLE_LEVELS)
        return sample_document(_scheme_from_query(params), levels)

    @app.get("/api/sweep")
    def sweep(request: Request) -> dict:
        params = request.query_params
        m = params.get("m")
        if m is None:
            raise ParameterError("m is required")
        steps = params.get("steps")
        if steps is None:
            raise ParameterError("steps is required")
        return sweep_document(m, steps)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
