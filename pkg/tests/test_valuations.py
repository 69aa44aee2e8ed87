"""Tests for the valuation ring classes."""

import random
from fractions import Fraction

import pytest

from blowup.errors import BranchError, InputError
from blowup.expr import INF, parse_element, parse_path
from blowup.poly import Poly, RatFunc, X, Y
from blowup.tree import Point
from blowup.valuations import (
    FirstKind,
    MinimalCurveBranch,
    MinimalEventuallyPeriodic,
    SecondKind,
    branch_step,
    monomial_path,
    monomial_valuation,
)

x = Poly.variable(X)
y = Poly.variable(Y)


def P(literal):
    return Point.from_path(parse_path(literal))


def E(text):
    return parse_element(text)


# -- first kind --------------------------------------------------------------

def test_first_kind_values():
    v = FirstKind(y ** 2 - x ** 3)
    assert v.value(E("y^2 - x^3")) == 1
    assert v.value(E("(y^2 - x^3)^2 * x")) == 2
    assert v.value(E("x/(y^2 - x^3)")) == -1
    assert v.value(E("x*y + 1")) == 0


def test_first_kind_membership():
    v = FirstKind(x + y)
    assert v.contains_element(E("x/(1 + x)"))
    assert v.contains_element(E("(x + y)/x"))
    assert v.contains_element(E("x/(x + y)")) is False


def test_first_kind_ring_containment_follows_the_curve():
    v = FirstKind(x ** 2 - y ** 3)
    assert v.ring_contains(P("[]"))
    assert v.ring_contains(P("[inf]"))
    assert v.ring_contains(P("[inf, inf]"))
    assert not v.ring_contains(P("[0]"))
    assert not v.ring_contains(P("[inf, 0]"))


def test_first_kind_away_from_origin_contains_no_point():
    v = FirstKind(x + Poly.const(1))
    assert not v.ring_contains(P("[]"))
    assert v.value(E("x + 1")) == 1


def test_first_kind_rejects_bad_curves():
    with pytest.raises(InputError):
        FirstKind(Poly.const(3))
    with pytest.raises(InputError):
        FirstKind(x * y)
    with pytest.raises(InputError):
        FirstKind((x + y) ** 2)
    with pytest.raises(InputError):
        FirstKind(x + Poly.variable(2))  # parameter slot


# -- second kind -------------------------------------------------------------

def test_second_kind_value_is_parameter_order():
    v = SecondKind(P("[0, inf]"))
    assert v.value(E("x")) == 2
    assert v.value(E("y")) == 3
    assert v.value(E("y/x")) == 1
    assert v.value(E("x^3/y")) == 3


def test_second_kind_membership():
    v = SecondKind(P("[0]"))
    assert v.contains_element(E("y/x"))
    assert v.contains_element(E("x/y")) is False


def test_second_kind_ring_containment():
    v = SecondKind(P("[0]"))
    assert v.ring_contains(P("[]"))
    assert v.ring_contains(P("[0, 4]"))
    assert v.ring_contains(P("[0, 1, inf, 0]"))
    assert not v.ring_contains(P("[0, 1, 2]"))
    assert not v.ring_contains(P("[2]"))


def test_second_kind_rejects_symbolic_point():
    from blowup.tree import TSYM
    with pytest.raises(InputError):
        SecondKind(Point.root().child(TSYM))


# -- monomial ----------------------------------------------------------------

def test_monomial_path_examples():
    assert monomial_path(5, 2) == (INF, Fraction(0), INF)
    assert monomial_path(1, 1) == ()
    assert monomial_path(1, 2) == (Fraction(0),)
    assert monomial_path(2, 1) == (INF,)


def test_monomial_valuation_reaches_stated_weights():
    v = monomial_valuation(5, 2)
    assert v.value(E("x")) == 5
    assert v.value(E("y")) == 2
    assert v.value(E("x*y^2")) == 9


def test_monomial_valuation_scales_with_gcd():
    v = monomial_valuation(4, 2)
    assert v.point == P("[inf]")
    assert v.value(E("x")) == 4
    assert v.value(E("y")) == 2
    # as rings, the scaled valuation and the plain order valuation agree
    assert v == SecondKind(P("[inf]"))


def test_monomial_valuation_rational_weights():
    v = monomial_valuation(Fraction(5, 2), 1)
    assert v.point == P(("[inf, 0, inf]"))
    assert v.value(E("x")) == 5
    assert v.value(E("y")) == 2


def test_monomial_rejects_nonpositive():
    with pytest.raises(InputError):
        monomial_path(0, 1)
    with pytest.raises(InputError):
        monomial_path(3, -2)


# -- minimal valuations ------------------------------------------------------

def test_periodic_canonical_form():
    v = MinimalEventuallyPeriodic([1, 0], [0])
    assert v.prefix == (Fraction(1),)
    assert v.period == (Fraction(0),)
    w = MinimalEventuallyPeriodic([], [0, 1, 0, 1])
    assert w.period == (Fraction(0), Fraction(1))
    assert MinimalEventuallyPeriodic([1], [0]) == v


def test_periodic_points_and_steps():
    v = MinimalEventuallyPeriodic([], [0, INF])
    assert v.step_at(0) == Fraction(0)
    assert v.step_at(1) is INF
    assert v.step_at(2) == Fraction(0)
    assert v.point_at(2) == P("[0, inf]")


def test_periodic_requires_period():
    with pytest.raises(InputError):
        MinimalEventuallyPeriodic([0], [])


def test_periodic_ring_containment_is_path_prefix():
    v = MinimalEventuallyPeriodic([], [0])
    assert v.ring_contains(P("[]"))
    assert v.ring_contains(P("[0, 0, 0]"))
    assert not v.ring_contains(P("[0, 1]"))
    assert not v.ring_contains(P("[inf]"))


def test_periodic_membership_by_stabilization():
    # along the all-zero path, y/x^k eventually stabilizes to a unit or zero
    v = MinimalEventuallyPeriodic([], [0])
    assert v.contains_element(E("y/x"))
    assert v.contains_element(E("y/x^3"))
    assert not v.contains_element(E("x^2/y"))
    assert v.contains_element(E("x + y"))
    assert not v.contains_element(E("1/x"))
    assert v.contains_element(E("0"))


def test_branch_follows_the_cusp():
    v = MinimalCurveBranch(x ** 2 - y ** 3)
    assert [v.step_at(i) for i in range(5)] == [INF, INF, Fraction(1),
                                               Fraction(0), Fraction(0)]
    assert v.point_at(2) == P("[inf, inf]")
    # the curve element itself lies in the union ring
    assert v.contains_element(E("x^2 - y^3"))
    assert not v.contains_element(E("1/(x^2 - y^3)"))
    assert v.contains_element(E("x^2/y^2"))


def test_branch_membership_distinguishes_sides():
    v = MinimalCurveBranch(x ** 2 - y ** 3)
    # x^2/y^3 tends to 1 along the branch; its inverse is also there
    assert v.contains_element(E("x^2/y^3"))
    assert v.contains_element(E("y^3/x^2"))


def test_branch_of_smooth_curve():
    v = MinimalCurveBranch(y - x ** 2)
    assert [v.step_at(i) for i in range(4)] == [Fraction(0), Fraction(1),
                                               Fraction(0), Fraction(0)]


def test_branch_step_errors():
    with pytest.raises(BranchError):
        branch_step(Poly.const(1) + x)
    # a node has two rational branches
    with pytest.raises(BranchError):
        MinimalCurveBranch(y ** 2 - x ** 2 * (x + Poly.const(1))).step_at(0)
    # tangent cone irreducible over the rationals
    with pytest.raises(BranchError):
        MinimalCurveBranch(y ** 2 - Poly.const(2) * x ** 2 - x ** 3).step_at(0)


def test_branch_requires_origin():
    with pytest.raises(InputError):
        MinimalCurveBranch(x + Poly.const(1))


def test_branch_coherence_cusp():
    # the strict transform vanishes at the origin of every expanded level
    v = MinimalCurveBranch(x ** 2 - y ** 3)
    for level in range(11):
        assert v.strict_at(level).xy_order() >= 1


def test_branch_coherence_tacnode():
    v = MinimalCurveBranch((y - x) ** 2 - x ** 5)
    orders = [v.strict_at(level).xy_order() for level in range(11)]
    assert all(o >= 1 for o in orders)
    # the double point survives one blow-up, then the branch is smooth
    assert orders[:3] == [2, 2, 1]
    assert v.step_at(0) == Fraction(1)


def test_monomial_value_is_min_term_weight():
    rng = random.Random(20240817)
    for _ in range(10):
        a, b = rng.randint(1, 12), rng.randint(1, 12)
        v = monomial_valuation(a, b)
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exps = (rng.randint(0, 5), rng.randint(0, 5), 0, 0)
            terms[exps] = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        p = Poly(terms)
        # positive coefficients rule out cancellation of minimizing terms:
        # monomial charts substitute monomials, so no signs ever mix
        expected = min(a * e[X] + b * e[Y] for e in terms)
        assert v.value(RatFunc(p)) == expected


def test_same_path_across_constructors():
    v = MinimalCurveBranch(x ** 2 - y ** 3)
    w = MinimalEventuallyPeriodic([INF, INF, 1], [0])
    assert v.same_path(w)
    assert not v.same_path(MinimalEventuallyPeriodic([], [0]))


def test_cross_kind_rings_agree_on_samples():
    v = MinimalCurveBranch(y - x)
    w = MinimalEventuallyPeriodic([1], [0])
    assert v.same_path(w)
    for text in ("y/x", "y - x", "x + y", "1/x", "1/(y - x)"):
        assert v.contains_element(E(text)) == w.contains_element(E(text))
