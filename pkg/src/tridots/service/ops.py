"""One implementation of every command, shared by the HTTP app and the CLI.

Each operation returns a response model for JSON output plus a text
renderer for the ascii/csv formats.  The CLI in local mode calls these
functions directly and a running server calls the very same ones, so both
transports emit identical bytes.

The TRIDOTS_SOLVER_CAP environment variable, when set, overrides both
solver caps (backtracking search, default 25, and exact simplex, default
60); it is read per call so a long-running server honors changes.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import floor

from .. import construction, dual_certificate, exact_solver, lp_model, render
from ..errors import DomainError, InfeasibleCertificateError, SizeCapError, TridotsError
from ..geometry import all_cells, check_size
from ..rational_simplex import DEFAULT_LP_CAP, lp_value, solve
from . import schemas

CAP_ENV_VAR = "TRIDOTS_SOLVER_CAP"


def _env_cap(default: int) -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None


def ilp_cap() -> int:
    return _env_cap(exact_solver.DEFAULT_SEARCH_CAP)


def lp_cap() -> int:
    return _env_cap(DEFAULT_LP_CAP)


def ensure_format(fmt: schemas.OutputFormat, allow_csv: bool = False) -> None:
    """Reject csv outside the table command, which is the only tabular output."""
    if fmt == schemas.OutputFormat.csv and not allow_csv:
        raise DomainError("format 'csv' is only supported by the table command")


# -- table ------------------------------------------------------------------

def _table_entries(max_n: int) -> list[tuple[int, int, Fraction]]:
    if max_n < 3:
        raise DomainError(f"table needs max >= 3, got {max_n}")
    search_cap, simplex_cap = ilp_cap(), lp_cap()
    return [
        (n, exact_solver.max_dots(n, search_cap).count, lp_value(n, simplex_cap))
        for n in range(3, max_n + 1)
    ]


def op_table(max_n: int) -> schemas.TableOut:
    rows = [
        schemas.TableRowOut(n=n, max_dots=dots, lp_optimum=str(lp), gap=str(lp - dots))
        for n, dots, lp in _table_entries(max_n)
    ]
    return schemas.TableOut(rows=rows)


def table_text(max_n: int, fmt: schemas.OutputFormat) -> str:
    entries = _table_entries(max_n)
    if fmt == schemas.OutputFormat.csv:
        return render.table_csv(entries)
    return render.table_ascii(entries)


# -- construct ---------------------------------------------------------------

def _placement_out(placement: construction.Placement) -> schemas.PlacementOut:
    return schemas.PlacementOut(n=placement.n, dots=[(c.row, c.pos) for c in placement.dots])


def op_construct(n: int) -> schemas.PlacementOut:
    return _placement_out(construction.build_placement(n))


def construct_text(n: int) -> str:
    placement = construction.build_placement(n)
    header = f"n = {n}, dots = {len(placement.dots)}"
    return f"{header}\n{render.placement_ascii(placement)}"


def op_validate_placement(body: schemas.PlacementIn) -> schemas.PlacementReportOut:
    placement = construction.Placement.from_json_dict(body.model_dump())
    report = construction.validate_placement(placement)
    return schemas.PlacementReportOut(
        ok=report.ok,
        violations=[
            schemas.LineViolationOut(
                family=v.family, index=v.index, cells=[(c.row, c.pos) for c in v.cells]
            )
            for v in report.violations
        ],
    )


# -- certify -----------------------------------------------------------------

def op_certify(n: int) -> schemas.CertifyOut:
    check_size(n)
    cert = dual_certificate.build_certificate(n)
    report = dual_certificate.verify_feasible(cert)
    if not report.ok:
        raise InfeasibleCertificateError(
            f"built certificate for n={n} failed verification at {len(report.violations)} cells"
        )
    objective = dual_certificate.certificate_objective(cert)
    upper = floor(objective)
    placement = construction.build_placement(n)
    if not construction.validate_placement(placement).ok:
        raise TridotsError(f"internal error: built placement for n={n} is invalid")
    lower = len(placement.dots)
    if lower > objective:  # weak duality between two verified feasible points
        raise TridotsError(f"internal error: weak duality violated for n={n}")
    proved = lower == upper
    statement = f"N({n}) = {upper} proved" if proved else f"{lower} <= N({n}) <= {upper}"
    return schemas.CertifyOut(
        n=n,
        certificate=schemas.CertificateOut(
            n=n,
            r=[str(p) for p in cert.row_prices],
            c=[str(p) for p in cert.col_prices],
            d=[str(p) for p in cert.diag_prices],
            objective=str(objective),
            feasible=True,
        ),
        objective=str(objective),
        upper_bound=upper,
        lower_bound=lower,
        proved=proved,
        statement=statement,
    )


def render_certify(result: schemas.CertifyOut) -> str:
    lines = [
        f"dual certificate for n = {result.n}",
        "r: " + " ".join(result.certificate.r),
        "c: " + " ".join(result.certificate.c),
        "d: " + " ".join(result.certificate.d),
        f"objective: {render.mixed_fraction(render.parse_fraction(result.objective))}",
        f"upper bound: {result.upper_bound}",
        f"lower bound: {result.lower_bound} (constructed placement)",
        result.statement,
    ]
    return "\n".join(lines)


def certify_text(n: int) -> str:
    return render_certify(op_certify(n))


def op_verify_certificate(body: schemas.CertificateIn) -> schemas.CertificateReportOut:
    cert = dual_certificate.DualCertificate.from_json_dict(body.model_dump())
    report = dual_certificate.verify_feasible(cert)
    return schemas.CertificateReportOut(
        ok=report.ok,
        objective=str(dual_certificate.certificate_objective(cert)),
        violations=[
            schemas.CellCheckOut(cell=(c.cell.row, c.cell.pos), lhs=str(c.lhs))
            for c in report.violations
        ],
    )


# -- solve -------------------------------------------------------------------

def op_solve(n: int, which: schemas.SolveTarget) -> schemas.SolveOut:
    check_size(n)
    if which == schemas.SolveTarget.ilp:
        result = exact_solver.max_dots(n, ilp_cap())
        return schemas.SolveOut(
            n=n,
            which=which,
            status="optimal",
            objective=str(result.count),
            witness=_placement_out(result.placement),
        )
    cap = lp_cap()
    if n > cap:
        raise SizeCapError(f"exact simplex for n={n} exceeds the cap of {cap}")
    problem = lp_model.build_primal(n) if which == schemas.SolveTarget.primal else lp_model.build_dual(n)
    solution = solve(problem)
    values = None
    if solution.status == "optimal":
        values = {name: str(v) for name, v in solution.named_values(problem).items()}
    return schemas.SolveOut(
        n=n,
        which=which,
        status=solution.status,
        objective=str(solution.objective) if solution.objective is not None else None,
        values=values,
    )


def solve_text(n: int, which: schemas.SolveTarget) -> str:
    result = op_solve(n, which)
    if which == schemas.SolveTarget.ilp:
        placement = construction.Placement.from_json_dict(
            {"n": result.witness.n, "dots": result.witness.dots}
        )
        return "\n".join(
            [
                f"ILP (backtracking) for n = {n}: {result.status}",
                f"objective: {result.objective}",
                render.placement_ascii(placement),
            ]
        )
    label = "primal LP" if which == schemas.SolveTarget.primal else "dual LP"
    lines = [f"{label} for n = {n}: {result.status}"]
    if result.status != "optimal":
        return "\n".join(lines)
    objective = render.parse_fraction(result.objective)
    lines.append(f"objective: {render.mixed_fraction(objective)} ({objective})")
    if which == schemas.SolveTarget.primal:
        values = {
            cell: render.parse_fraction(result.values[f"x_{cell.row}_{cell.pos}"])
            for cell in all_cells(n)
        }
        lines.append(render.values_ascii(n, values))
    else:
        for family in ("r", "c", "d"):
            row = " ".join(result.values[f"{family}_{i}"] for i in range(1, n + 1))
            lines.append(f"{family}: {row}")
    return "\n".join(lines)


# -- export ------------------------------------------------------------------

def op_export(n: int, which: schemas.ExportTarget) -> str:
    check_size(n)
    problem = lp_model.build_primal(n) if which == schemas.ExportTarget.primal else lp_model.build_dual(n)
    return lp_model.export_lp_text(problem)


def export_filename(n: int, which: schemas.ExportTarget) -> str:
    return f"triangle_{which.value}_{n}.lp"
