import random
from fractions import Fraction
from math import gcd

import pytest

from tridots.closed_forms import lpf, nf
from tridots.errors import DomainError, PivotLimitError, SizeCapError
from tridots.lp_model import Constraint, LpProblem, build_dual, build_primal, is_feasible
from tridots.rational_simplex import lp_value, solve

ONE = Fraction(1)


def make_problem(sense, c, rows, name="adhoc"):
    names = tuple(f"x{i}" for i in range(len(c)))
    constraints = tuple(
        Constraint(
            f"c{i}",
            tuple((j, Fraction(v)) for j, v in enumerate(coeffs) if v != 0),
            rel,
            Fraction(rhs),
        )
        for i, (coeffs, rel, rhs) in enumerate(rows)
    )
    return LpProblem(name, sense, names, tuple(Fraction(v) for v in c), constraints)


@pytest.mark.parametrize(
    "n,expected",
    [(6, Fraction(30, 7)), (1, Fraction(1)), (9, Fraction(63, 10))],
)
def test_primal_optimum(n, expected):
    solution = solve(build_primal(n))
    assert solution.status == "optimal"
    assert solution.objective == expected


def test_optimal_point_is_exactly_feasible():
    problem = build_primal(8)
    solution = solve(problem)
    assert is_feasible(problem, solution.values)
    assert sum(solution.values, Fraction(0)) == solution.objective


@pytest.mark.parametrize(
    "n,expected",
    [(5, Fraction(18, 5)), (4, Fraction(3)), (13, Fraction(9))],
)
def test_lp_value_examples(n, expected):
    assert lp_value(n) == expected


def test_lp_value_matches_conjectured_form_small_range():
    for n in range(1, 16):
        assert lp_value(n) == lpf(n)


def test_relaxation_sandwich():
    from math import floor

    for n in range(1, 16):
        value = lp_value(n)
        assert nf(n) <= value
        assert value <= lpf(n)  # certificate objective, checked exact elsewhere
        assert floor(value) == nf(n)


def test_dual_problems_reach_the_same_optimum():
    for n in (1, 2, 4, 6):
        primal = solve(build_primal(n)).objective
        dual = solve(build_dual(n)).objective
        assert primal == dual  # strong duality, numerically


def test_solver_is_deterministic():
    a = solve(build_primal(7))
    b = solve(build_primal(7))
    assert a == b


def test_min_sense_and_two_phase():
    # minimize x + y with x + y >= 3, x <= 2: optimum 3
    problem = make_problem(
        "min", [1, 1], [([1, 1], ">=", 3), ([1, 0], "<=", 2)]
    )
    solution = solve(problem)
    assert solution.status == "optimal"
    assert solution.objective == 3


def test_degenerate_cycling_prone_problem():
    # a classic cycling example for naive pivot rules; Bland's rule finishes
    problem = make_problem(
        "max",
        [Fraction(3, 4), -150, Fraction(1, 50), -6],
        [
            ([Fraction(1, 4), -60, Fraction(-1, 25), 9], "<=", 0),
            ([Fraction(1, 2), -90, Fraction(-1, 50), 3], "<=", 0),
            ([0, 0, 1, 0], "<=", 1),
        ],
    )
    solution = solve(problem)
    assert solution.status == "optimal"
    assert solution.objective == Fraction(1, 20)


def test_unbounded_detection():
    problem = make_problem("max", [1], [([-1], "<=", 1)])
    assert solve(problem).status == "unbounded"


def test_infeasible_detection():
    problem = make_problem("max", [1], [([1], "<=", -1)])
    assert solve(problem).status == "infeasible"
    # two contradictory one-variable constraints
    problem = make_problem("max", [0], [([1], "<=", 1), ([1], ">=", 2)])
    assert solve(problem).status == "infeasible"


def test_redundant_equality_like_rows():
    # x >= 1 twice plus x <= 1 leaves a redundant artificial row to drop
    problem = make_problem(
        "min", [1], [([1], ">=", 1), ([1], ">=", 1), ([1], "<=", 1)]
    )
    solution = solve(problem)
    assert solution.status == "optimal"
    assert solution.objective == 1
    assert solution.values == (Fraction(1),)


def test_fractional_inputs_are_scaled_exactly():
    # maximize (2/3)x with (3/7)x <= 5/2: x = 35/6, objective 35/9
    problem = make_problem("max", [Fraction(2, 3)], [([Fraction(3, 7)], "<=", Fraction(5, 2))])
    solution = solve(problem)
    assert solution.objective == Fraction(35, 9)
    assert solution.values == (Fraction(35, 6),)


def test_pivot_limit_is_a_resource_error():
    with pytest.raises(PivotLimitError):
        solve(build_primal(5), max_pivots=1)


def test_lp_value_cap():
    with pytest.raises(SizeCapError):
        lp_value(61)
    with pytest.raises(SizeCapError):
        lp_value(10, cap=9)
    with pytest.raises(DomainError):
        lp_value(0)


# -- rational arithmetic closure ----------------------------------------------


class NaiveFraction:
    """Unreduced pair arithmetic; equality by cross-multiplication."""

    def __init__(self, num, den=1):
        self.num, self.den = num, den

    def add(self, other):
        return NaiveFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def sub(self, other):
        return NaiveFraction(self.num * other.den - other.num * self.den, self.den * other.den)

    def mul(self, other):
        return NaiveFraction(self.num * other.num, self.den * other.den)

    def div(self, other):
        return NaiveFraction(self.num * other.den, self.den * other.num)

    def equals(self, q: Fraction) -> bool:
        return self.num * q.denominator == q.numerator * self.den


def test_fraction_ops_match_naive_oracle_and_stay_canonical():
    rng = random.Random(52)
    for _ in range(500):
        a_num, b_num = rng.randint(-9999, 9999), rng.randint(-9999, 9999)
        a_den, b_den = rng.randint(1, 9999), rng.randint(1, 9999)
        a, b = Fraction(a_num, a_den), Fraction(b_num, b_den)
        na, nb = NaiveFraction(a_num, a_den), NaiveFraction(b_num, b_den)
        pairs = [(a + b, na.add(nb)), (a - b, na.sub(nb)), (a * b, na.mul(nb))]
        if b != 0:
            pairs.append((a / b, na.div(nb)))
        for exact, naive in pairs:
            assert naive.equals(exact)
            assert exact.denominator > 0
            assert gcd(exact.numerator, exact.denominator) == 1
