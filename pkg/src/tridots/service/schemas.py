"""Pydantic request/response models for the HTTP API.

Exact rationals travel as "p/q" strings (integers as plain "5") so that no
client ever sees a rounded value; placements are {"n": ..., "dots":
[[row, pos], ...]} with dots sorted, matching the library's JSON form.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field


class OutputFormat(str, Enum):
    ascii = "ascii"
    json = "json"
    csv = "csv"


class SolveTarget(str, Enum):
    primal = "primal"
    dual = "dual"
    ilp = "ilp"


class ExportTarget(str, Enum):
    primal = "primal"
    dual = "dual"


class PlacementIn(BaseModel):
    """A placement as submitted for validation; may be invalid."""

    n: int
    dots: list[tuple[int, int]]


class PlacementOut(BaseModel):
    n: int
    dots: list[tuple[int, int]]


class LineViolationOut(BaseModel):
    family: str
    index: int
    cells: list[tuple[int, int]]


class PlacementReportOut(BaseModel):
    ok: bool
    violations: list[LineViolationOut]


class CertificateIn(BaseModel):
    """A dual certificate as submitted for verification; prices are "p/q" strings."""

    n: int
    r: list[str]
    c: list[str]
    d: list[str]


class CertificateOut(BaseModel):
    n: int
    r: list[str]
    c: list[str]
    d: list[str]
    objective: str
    feasible: bool


class CellCheckOut(BaseModel):
    cell: tuple[int, int]
    lhs: str


class CertificateReportOut(BaseModel):
    ok: bool
    objective: str
    violations: list[CellCheckOut]


class CertifyOut(BaseModel):
    """The full proof record: certificate, both bounds, and the verdict."""

    n: int
    certificate: CertificateOut
    objective: str
    upper_bound: int
    lower_bound: int
    proved: bool
    statement: str


class SolveOut(BaseModel):
    n: int
    which: SolveTarget
    status: str
    objective: str | None = None
    values: dict[str, str] | None = None
    witness: PlacementOut | None = None


class TableRowOut(BaseModel):
    n: int
    max_dots: int
    lp_optimum: str
    gap: str


class TableOut(BaseModel):
    rows: list[TableRowOut]


class ErrorOut(BaseModel):
    detail: str
    kind: str = Field(description="domain | cap | internal")
