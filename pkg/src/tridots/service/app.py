"""FastAPI application exposing the library over HTTP.

GET endpoints compute placements, certificates, LP solutions and LP files;
POST endpoints verify client-supplied placements and certificates.  Every
response is deterministic for a given request.  Errors map to JSON bodies
with a "kind" of domain (bad input), cap (size refused) or internal
(invariant violation, which is a bug).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..errors import DomainError, SizeCapError, TridotsError
from . import ops, schemas

app = FastAPI(
    title="tridots",
    version=__version__,
    description="Exact dot maxima, LP relaxations and dual certificates for triangular boards",
)


@app.exception_handler(DomainError)
async def _domain_error(_: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "domain"})


@app.exception_handler(SizeCapError)
async def _cap_error(_: Request, exc: SizeCapError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "cap"})


@app.exception_handler(TridotsError)
async def _internal_error(_: Request, exc: TridotsError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc), "kind": "internal"})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/table", response_model=schemas.TableOut)
def table(max_n: int = 12, format: schemas.OutputFormat = schemas.OutputFormat.json):
    if format == schemas.OutputFormat.json:
        return ops.op_table(max_n)
    return PlainTextResponse(ops.table_text(max_n, format))


@app.get("/placements/{n}", response_model=schemas.PlacementOut)
def construct(n: int, format: schemas.OutputFormat = schemas.OutputFormat.json):
    ops.ensure_format(format)
    if format == schemas.OutputFormat.json:
        return ops.op_construct(n)
    return PlainTextResponse(ops.construct_text(n))


@app.post("/placements/validate", response_model=schemas.PlacementReportOut)
def validate_placement(body: schemas.PlacementIn):
    return ops.op_validate_placement(body)


@app.get("/certificates/{n}", response_model=schemas.CertifyOut)
def certify(n: int, format: schemas.OutputFormat = schemas.OutputFormat.json):
    ops.ensure_format(format)
    if format == schemas.OutputFormat.json:
        return ops.op_certify(n)
    return PlainTextResponse(ops.certify_text(n))


@app.post("/certificates/verify", response_model=schemas.CertificateReportOut)
def verify_certificate(body: schemas.CertificateIn):
    return ops.op_verify_certificate(body)


@app.get("/solutions/{n}", response_model=schemas.SolveOut)
def solve(
    n: int,
    which: schemas.SolveTarget,
    format: schemas.OutputFormat = schemas.OutputFormat.json,
):
    ops.ensure_format(format)
    if format == schemas.OutputFormat.json:
        return ops.op_solve(n, which)
    return PlainTextResponse(ops.solve_text(n, which))


@app.get("/lp-files/{n}", response_class=PlainTextResponse)
def lp_file(n: int, which: schemas.ExportTarget):
    return PlainTextResponse(ops.op_export(n, which))
