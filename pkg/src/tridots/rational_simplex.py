"""Exact simplex over arbitrary-precision rationals.

The tableau is kept fraction-free: every entry is an integer and the whole
tableau is implicitly divided by a single positive denominator, which is
the previous pivot element (integer pivoting).  Each pivot step is

    new[i][j] = (old[i][j] * pivot - old[i][col] * old[row][j]) // den

and the division is exact because the entries are minors of the original
integer-scaled matrix.  This avoids per-entry gcd normalization, so it is
much faster than a tableau of Fraction objects while staying exact; the
solution and objective are converted back to Fractions at the end.

Pivot selection is Bland's anti-cycling rule: the entering column is the
lowest-index column with a negative reduced cost, the leaving row breaks
ratio-test ties by the lowest basis variable index.  This guarantees
termination and makes every solve deterministic.

Constraints with >= relations (after sign normalization) get a surplus and
an artificial variable and are handled by a two-phase method; there are no
big-M constants, which would be awkward in exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import PivotLimitError, SizeCapError, TridotsError
from .geometry import check_size
from .lp_model import (
    GREATER_EQUAL,
    LESS_EQUAL,
    LpProblem,
    LpSolution,
    build_primal,
    is_feasible,
)

DEFAULT_LP_CAP = 60
DEFAULT_PIVOT_LIMIT = 100_000

_OPTIMAL = "optimal"
_INFEASIBLE = "infeasible"
_UNBOUNDED = "unbounded"


class _Tableau:
    """Integer-pivoting simplex tableau; rhs is the last column of each row."""

    def __init__(self, rows: list[list[int]], objectives: list[list[int]], basis: list[int]):
        self.rows = rows
        self.objectives = objectives  # updated alongside the rows on every pivot
        self.basis = basis
        self.den = 1
        self.pivots = 0

    def pivot(self, row: int, col: int) -> None:
        rows = self.rows
        den = self.den
        prow = rows[row]
        piv = prow[col]
        for target in (*rows, *self.objectives):
            if target is prow:
                continue
            f = target[col]
            if f == 0:
                if piv != den:
                    target[:] = [x * piv // den for x in target]
            else:
                target[:] = [(x * piv - f * y) // den for x, y in zip(target, prow)]
        self.basis[row] = col
        if piv < 0:  # keep the shared denominator positive so sign tests stay true
            piv = -piv
            for target in (*rows, *self.objectives):
                target[:] = [-x for x in target]
        self.den = piv
        self.pivots += 1

    def run(self, obj: list[int], columns: int, max_pivots: int) -> str:
        """Bland-rule pivoting on the given objective row until optimal or unbounded."""
        rows = self.rows
        basis = self.basis
        while True:
            enter = -1
            for j in range(columns):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return _OPTIMAL
            leave = -1
            best_num = best_den = best_var = 0
            for i, r in enumerate(rows):
                a = r[enter]
                if a > 0:
                    b = r[-1]  # compare b/a < best_num/best_den by cross-multiplying
                    if (
                        leave < 0
                        or b * best_den < best_num * a
                        or (b * best_den == best_num * a and basis[i] < best_var)
                    ):
                        leave, best_num, best_den, best_var = i, b, a, basis[i]
            if leave < 0:
                return _UNBOUNDED
            if self.pivots >= max_pivots:
                raise PivotLimitError(
                    f"exceeded {max_pivots} pivots; Bland's rule should terminate, "
                    "so this is a solver bug"
                )
            self.pivot(leave, enter)


def _scaled_constraint(con) -> tuple[list[tuple[int, int]], str, int]:
    """Integer-scale one constraint and normalize it to a nonnegative rhs."""
    scale = lcm(con.rhs.denominator, *(c.denominator for _, c in con.coeffs))
    coeffs = [(j, int(c * scale)) for j, c in con.coeffs]
    rhs = int(con.rhs * scale)
    relation = con.relation
    if rhs < 0:
        coeffs = [(j, -c) for j, c in coeffs]
        rhs = -rhs
        relation = GREATER_EQUAL if relation == LESS_EQUAL else LESS_EQUAL
    if relation == GREATER_EQUAL and rhs == 0:
        coeffs = [(j, -c) for j, c in coeffs]
        relation = LESS_EQUAL
    return coeffs, relation, rhs


def solve(problem: LpProblem, max_pivots: int = DEFAULT_PIVOT_LIMIT) -> LpSolution:
    """Solve an LpProblem exactly; deterministic for a given problem."""
    nv = problem.num_vars
    maximize = problem.sense == "max"
    obj_scale = lcm(1, *(c.denominator for c in problem.objective)) if nv else 1
    c_int = [int(c * obj_scale) * (1 if maximize else -1) for c in problem.objective]

    scaled = [_scaled_constraint(con) for con in problem.constraints]
    n_le = sum(1 for _, rel, _ in scaled if rel == LESS_EQUAL)
    n_ge = len(scaled) - n_le
    slack_at, surplus_at = nv, nv + n_le
    art_at = surplus_at + n_ge
    width = art_at + n_ge + 1  # + rhs column

    rows: list[list[int]] = []
    basis: list[int] = []
    art_rows: list[int] = []
    si = gi = 0
    for coeffs, relation, rhs in scaled:
        row = [0] * width
        for j, coeff in coeffs:
            row[j] += coeff
        row[-1] = rhs
        if relation == LESS_EQUAL:
            row[slack_at + si] = 1
            basis.append(slack_at + si)
            si += 1
        else:
            row[surplus_at + gi] = -1
            row[art_at + gi] = 1
            basis.append(art_at + gi)
            art_rows.append(len(rows))
            gi += 1
        rows.append(row)

    z_row = [0] * width
    for j, coeff in enumerate(c_int):
        z_row[j] = -coeff

    if art_rows:
        w_row = [0] * width
        for i in art_rows:
            for j, x in enumerate(rows[i]):
                w_row[j] -= x
        for k in range(n_ge):
            w_row[art_at + k] = 0  # artificials start basic, reduced cost zero
        tab = _Tableau(rows, [w_row, z_row], basis)
        status = tab.run(w_row, width - 1, max_pivots)
        if status != _OPTIMAL:
            raise TridotsError("internal error: the phase-1 objective cannot be unbounded")
        if w_row[-1] != 0:
            return LpSolution(status=_INFEASIBLE)
        _drive_out_artificials(tab, art_at)
        rows = [r[:art_at] + [r[-1]] for r in tab.rows]
        z_row = z_row[:art_at] + [z_row[-1]]
        tableau = _Tableau(rows, [z_row], tab.basis)
        tableau.den = tab.den
        tableau.pivots = tab.pivots
    else:
        tableau = _Tableau(rows, [z_row], basis)

    status = tableau.run(z_row, len(rows[0]) - 1 if rows else nv, max_pivots)
    if status != _OPTIMAL:
        return LpSolution(status=status)

    values = [Fraction(0)] * nv
    for i, var in enumerate(tableau.basis):
        if var < nv:
            values[var] = Fraction(tableau.rows[i][-1], tableau.den)
    objective = Fraction(z_row[-1], tableau.den) / obj_scale
    if not maximize:
        objective = -objective
    solution = LpSolution(status=_OPTIMAL, objective=objective, values=tuple(values))
    _check_exactness(problem, solution)
    return solution


def _drive_out_artificials(tab: _Tableau, art_at: int) -> None:
    """Pivot zero-valued artificial variables out of the basis, dropping redundant rows."""
    for i in reversed(range(len(tab.rows))):
        if tab.basis[i] < art_at:
            continue
        row = tab.rows[i]
        enter = next((j for j in range(art_at) if row[j] != 0), None)
        if enter is None:
            del tab.rows[i]
            del tab.basis[i]
        else:
            tab.pivot(i, enter)


def _check_exactness(problem: LpProblem, solution: LpSolution) -> None:
    """Guard against integer-pivoting bugs: re-check the optimum exactly."""
    if not is_feasible(problem, solution.values):
        raise TridotsError("internal error: reported optimum violates a constraint")
    value = sum((c * v for c, v in zip(problem.objective, solution.values)), Fraction(0))
    if value != solution.objective:
        raise TridotsError("internal error: reported objective does not match the point")


def lp_value(n: int, cap: int = DEFAULT_LP_CAP) -> Fraction:
    """Exact LP relaxation optimum for the size-n board."""
    check_size(n)
    if n > cap:
        raise SizeCapError(
            f"exact simplex for n={n} exceeds the cap of {cap}; "
            "raise the cap explicitly to solve anyway"
        )
    solution = solve(build_primal(n))
    if solution.status != _OPTIMAL or solution.objective is None:
        raise TridotsError(f"internal error: primal LP for n={n} reported {solution.status}")
    return solution.objective
