"""LP relaxation of the dot problem, its dual, and a portable text export.

The primal maximizes the sum of one variable per cell subject to a <= 1
constraint per line (rows, then columns, then diagonals, each indexed by
length 1..n), with variables nonnegative.  Explicit x <= 1 bounds are
omitted: every variable already sits in a <= 1 line constraint.

The dual minimizes the sum of one variable per line subject to one >= 1
constraint per cell, whose three unit coefficients are the lengths of the
lines through that cell.  Variable order r_1..r_n, c_1..c_n, d_1..d_n and
cell-major constraint order make the dual's coefficient matrix exactly the
transpose of the primal's, which the tests assert.

Orderings are fixed so that exports are byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .geometry import (
    all_cells,
    cell_index,
    cells_of_col,
    cells_of_diag,
    cells_of_row,
    check_size,
    line_indices,
)

LESS_EQUAL = "<="
GREATER_EQUAL = ">="


@dataclass(frozen=True)
class Constraint:
    """One sparse row: sum of coeff * variable  (<= or >=)  rhs."""

    name: str
    coeffs: tuple[tuple[int, Fraction], ...]  # (variable index, coefficient)
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LpProblem:
    """A linear program in standard inequality form; all variables are >= 0."""

    name: str
    sense: str  # "max" | "min"
    variable_names: tuple[str, ...]
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        if self.sense not in ("max", "min"):
            raise DomainError(f"sense must be 'max' or 'min', got {self.sense!r}")
        if len(self.objective) != len(self.variable_names):
            raise DomainError("objective length does not match variable count")
        if len(set(self.variable_names)) != len(self.variable_names):
            raise DomainError("variable names must be unique")
        for con in self.constraints:
            if con.relation not in (LESS_EQUAL, GREATER_EQUAL):
                raise DomainError(f"constraint {con.name}: bad relation {con.relation!r}")
            for j, _ in con.coeffs:
                if not 0 <= j < len(self.variable_names):
                    raise DomainError(f"constraint {con.name}: variable index {j} out of range")

    @property
    def num_vars(self) -> int:
        return len(self.variable_names)


@dataclass(frozen=True)
class LpSolution:
    """Solver outcome; when optimal, values satisfy every constraint exactly."""

    status: str  # "optimal" | "infeasible" | "unbounded"
    objective: Fraction | None = None
    values: tuple[Fraction, ...] = field(default=())

    def named_values(self, problem: LpProblem) -> dict[str, Fraction]:
        return dict(zip(problem.variable_names, self.values))


def constraint_residuals(problem: LpProblem, values: tuple[Fraction, ...]) -> list[Fraction]:
    """Exact left-hand-side values of every constraint at the given point."""
    if len(values) != problem.num_vars:
        raise DomainError("value vector length does not match variable count")
    return [sum((c * values[j] for j, c in con.coeffs), Fraction(0)) for con in problem.constraints]


def is_feasible(problem: LpProblem, values: tuple[Fraction, ...]) -> bool:
    """Exact feasibility check: nonnegativity plus every constraint."""
    if any(v < 0 for v in values):
        return False
    for con, lhs in zip(problem.constraints, constraint_residuals(problem, values)):
        if con.relation == LESS_EQUAL and lhs > con.rhs:
            return False
        if con.relation == GREATER_EQUAL and lhs < con.rhs:
            return False
    return True


def build_primal(n: int) -> LpProblem:
    """LP relaxation: maximize the dot mass, one <= 1 constraint per line."""
    check_size(n)
    cells = all_cells(n)
    names = tuple(f"x_{c.row}_{c.pos}" for c in cells)
    one = Fraction(1)
    constraints = []
    for family, of_line in (("row", cells_of_row), ("col", cells_of_col), ("diag", cells_of_diag)):
        for length in range(1, n + 1):
            coeffs = tuple((cell_index(c, n), one) for c in of_line(length, n))
            constraints.append(Constraint(f"{family}_{length}", coeffs, LESS_EQUAL, one))
    return LpProblem(
        name=f"triangle_primal_{n}",
        sense="max",
        variable_names=names,
        objective=tuple(one for _ in names),
        constraints=tuple(constraints),
    )


def build_dual(n: int) -> LpProblem:
    """Dual LP: minimize the total line mass, one >= 1 constraint per cell."""
    check_size(n)
    names = tuple(
        f"{family}_{length}" for family in ("r", "c", "d") for length in range(1, n + 1)
    )
    one = Fraction(1)
    constraints = []
    for cell in all_cells(n):
        idx = line_indices(cell, n)
        coeffs = (
            (idx.row_len - 1, one),
            (n + idx.col_len - 1, one),
            (2 * n + idx.diag_len - 1, one),
        )
        constraints.append(Constraint(f"cell_{cell.row}_{cell.pos}", coeffs, GREATER_EQUAL, one))
    return LpProblem(
        name=f"triangle_dual_{n}",
        sense="min",
        variable_names=names,
        objective=tuple(one for _ in names),
        constraints=tuple(constraints),
    )


def _decimal_exact(q: Fraction) -> str | None:
    """Terminating decimal for q, or None when the expansion does not terminate."""
    den = q.denominator
    e2 = e5 = 0
    while den % 2 == 0:
        den //= 2
        e2 += 1
    while den % 5 == 0:
        den //= 5
        e5 += 1
    if den != 1:
        return None
    places = max(e2, e5)
    scaled = abs(q.numerator) * (10**places // q.denominator)
    sign = "-" if q < 0 else ""
    if places == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def _lp_number(q: Fraction) -> tuple[str, bool]:
    """Decimal rendering and whether it is exact; inexact values are rounded."""
    exact = _decimal_exact(q)
    if exact is not None:
        return exact, True
    return repr(float(q)), False


def _terms(coeffs, variable_names, inexact_out: list[str]) -> str:
    parts: list[str] = []
    for j, coeff in coeffs:
        name = variable_names[j]
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if mag == 1:
            body = name
        else:
            text, exact = _lp_number(mag)
            if not exact:
                inexact_out.append(f"{mag} {name}")
            body = f"{text} {name}"
        if not parts:
            parts.append(body if sign == "+" else f"- {body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0 " + variable_names[0]


def _wrap(prefix: str, body: str, suffix: str = "", width: int = 72) -> list[str]:
    lines = []
    current = prefix
    for word in body.split(" "):
        if len(current) + 1 + len(word) > width and current != prefix:
            lines.append(current)
            current = "   " + word
        else:
            current = f"{current} {word}"
    lines.append(current + suffix)
    return lines


def export_lp_text(problem: LpProblem) -> str:
    """Render the problem in the conventional LP text file format.

    Numbers appear as decimals; any coefficient without a terminating decimal
    expansion is rounded, flagged in the header, and restated exactly as a
    fraction in a trailing comment on its line.
    """
    inexact_anywhere: list[str] = []
    obj_inexact: list[str] = []
    obj_terms = _terms(
        tuple((j, c) for j, c in enumerate(problem.objective) if c != 0),
        problem.variable_names,
        obj_inexact,
    )
    body: list[str] = ["Maximize" if problem.sense == "max" else "Minimize"]
    suffix = f"  \\ exact: {', '.join(obj_inexact)}" if obj_inexact else ""
    body.extend(_wrap(" obj:", obj_terms, suffix))
    inexact_anywhere.extend(obj_inexact)

    body.append("Subject To")
    for con in problem.constraints:
        con_inexact: list[str] = []
        terms = _terms(con.coeffs, problem.variable_names, con_inexact)
        rhs_text, rhs_exact = _lp_number(con.rhs)
        if not rhs_exact:
            con_inexact.append(f"rhs {con.rhs}")
        suffix = f"  \\ exact: {', '.join(con_inexact)}" if con_inexact else ""
        body.extend(_wrap(f" {con.name}:", f"{terms} {con.relation} {rhs_text}", suffix))
        inexact_anywhere.extend(con_inexact)

    body.append("Bounds")
    body.extend(f" {name} >= 0" for name in problem.variable_names)
    body.append("End")

    out: list[str] = [f"\\ {problem.name}"]
    if inexact_anywhere:
        out.append("\\ warning: some coefficients have no terminating decimal;")
        out.append("\\ rounded values below, exact fractions in trailing comments")
    out.extend(body)
    return "\n".join(out) + "\n"
