"""Tests for the exact polynomial / rational function kernel."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from blowup.poly import (
    A,
    Poly,
    RatFunc,
    T,
    X,
    Y,
    factor_multiplicity,
    format_poly,
    format_ratfunc,
    has_irrational_factor,
    poly_gcd,
    rational_roots,
    sylvester_resultant,
)

x = Poly.variable(X)
y = Poly.variable(Y)
a = Poly.variable(A)
t = Poly.variable(T)
one = Poly.const(1)


def C(v):
    return Poly.const(v)


# -- strategies -------------------------------------------------------------

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)


@st.composite
def polys(draw, max_terms=5, max_exp=3, slots=(X, Y, A)):
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        exps = [0, 0, 0, 0]
        for s in slots:
            exps[s] = draw(st.integers(min_value=0, max_value=max_exp))
        coeff = draw(small_fractions)
        if coeff:
            terms[tuple(exps)] = coeff
    return Poly(terms)


nonzero_polys = polys().filter(lambda p: not p.is_zero)


# -- basic arithmetic -------------------------------------------------------

def test_addition_with_zero():
    p = y ** 2 + x ** 3
    assert p + Poly.zero() == p
    assert Poly.zero() + p == p


def test_product_difference_of_squares():
    lhs = (x + a * y) * (x - a * y)
    assert lhs == x ** 2 - a ** 2 * y ** 2


def test_scalar_arithmetic_stays_exact():
    p = C(Fraction(1, 3)) * x + C(Fraction(1, 6)) * x
    assert p == C(Fraction(1, 2)) * x
    assert p.terms[(1, 0, 0, 0)] == Fraction(1, 2)


def test_subtraction_cancels_terms():
    p = x * y + y ** 2
    q = x * y - y ** 2
    assert (p - q) == C(2) * y ** 2
    assert (p - p).is_zero


def test_pow_matches_repeated_product():
    p = x + y + one
    assert p ** 3 == p * p * p
    assert p ** 0 == one


@given(polys(), polys(), polys())
def test_mul_distributes_over_add(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys(), polys())
def test_mul_commutes(p, q):
    assert p * q == q * p


# -- orders and lowest forms ------------------------------------------------

def test_xy_order_counts_only_plane_variables():
    p = a * x ** 2 * y + t * x ** 4
    assert p.xy_order() == 3
    assert (a * t).xy_order() == 0


def test_lowest_xy_form_picks_minimal_degree_slice():
    p = y ** 2 + x ** 3 + x * y ** 3
    assert p.lowest_xy_form() == y ** 2
    q = x * y + y ** 2 + x ** 3
    assert q.lowest_xy_form() == x * y + y ** 2


def test_xy_constant_part():
    p = a ** 2 + t - a * x + y ** 5
    assert p.xy_constant_part() == a ** 2 + t
    assert (x + y).xy_constant_part().is_zero


def test_order_of_zero_raises():
    with pytest.raises(ValueError):
        Poly.zero().xy_order()


# -- exact division ---------------------------------------------------------

def test_divmod_exact_round_trip():
    p = (x + y) * (x ** 2 + a * y)
    q = p.divmod_exact(x + y)
    assert q == x ** 2 + a * y


def test_divmod_exact_rejects_non_divisor():
    assert (x ** 2 + y).divmod_exact(x + y) is None


def test_divmod_exact_constant_divisor():
    p = C(6) * x + C(4)
    assert p.divmod_exact(C(2)) == C(3) * x + C(2)


@given(nonzero_polys, nonzero_polys)
def test_divmod_exact_inverts_multiplication(p, q):
    r = (p * q).divmod_exact(q)
    assert r == p


def test_shift_down_strips_monomial_factor():
    p = x ** 2 * y + x ** 3
    assert p.shift_down(X, 2) == y + x
    with pytest.raises(ValueError):
        (x + y).shift_down(X, 1)


# -- substitution -----------------------------------------------------------

def test_subst_xy_blowup_chart():
    # x -> x, y -> x*y sends y^2 + x^3 to x^2*(y^2 + x)
    p = y ** 2 + x ** 3
    q = p.subst_xy(x, x * y)
    assert q == x ** 2 * y ** 2 + x ** 3
    assert q.shift_down(X, 2) == y ** 2 + x


def test_subst_const_in_parameter_slot():
    p = x + a * y
    assert p.subst_const(A, 2) == x + C(2) * y
    assert p.subst_const(A, 0) == x


def test_subst_poly_replaces_symbol():
    p = a ** 2 + a * x
    q = p.subst_poly(A, y + one)
    assert q == (y + one) ** 2 + (y + one) * x


def test_derivative_basic():
    p = x ** 3 + C(2) * x * y + C(5)
    assert p.derivative(X) == C(3) * x ** 2 + C(2) * y
    assert p.derivative(Y) == C(2) * x
    assert C(7).derivative(X).is_zero


# -- gcd --------------------------------------------------------------------

def test_gcd_of_coprime_pair_is_one():
    assert poly_gcd(x * y, y ** 2 + x ** 3) == one


def test_gcd_recovers_common_factor():
    h = y ** 2 + x ** 3
    p = (x + y) * h
    q = (x - y) * h
    g = poly_gcd(p, q)
    assert g == h  # h already has leading coefficient 1


def test_gcd_handles_monomial_content():
    p = x ** 2 * y ** 3
    q = x ** 4 * y
    assert poly_gcd(p, q) == x ** 2 * y


def test_gcd_with_parameter_slot():
    h = x + a * y
    g = poly_gcd(h * (x + y), h * (y ** 2))
    assert g == h


def test_gcd_of_equal_inputs():
    p = C(3) * x * y + C(3) * y ** 2
    assert poly_gcd(p, p) == x * y + y ** 2


def test_gcd_with_zero_argument():
    p = C(2) * x + C(2) * y
    assert poly_gcd(p, Poly.zero()) == x + y
    with pytest.raises(ValueError):
        poly_gcd(Poly.zero(), Poly.zero())


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both_inputs(p, q):
    g = poly_gcd(p, q)
    assert p.divmod_exact(g) is not None
    assert q.divmod_exact(g) is not None


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=30, deadline=None)
def test_gcd_detects_planted_factor(p, q, h):
    g = poly_gcd(p * h, q * h)
    assert g.divmod_exact(h) is not None
    assert (p * h).divmod_exact(g) is not None
    assert (q * h).divmod_exact(g) is not None


def test_factor_multiplicity():
    p = (x + y) ** 3 * (y ** 2 + x ** 3)
    assert factor_multiplicity(p, x + y) == 3
    assert factor_multiplicity(p, y ** 2 + x ** 3) == 1
    assert factor_multiplicity(p, x - y) == 0


# -- resultant --------------------------------------------------------------

def test_resultant_of_coprime_lines_is_nonzero():
    f = x + a * y
    g = x - a * y
    r = sylvester_resultant(f, g, X)
    assert r == C(-2) * a * y


def test_resultant_vanishes_on_common_factor():
    h = x + y
    f = h * (x + one)
    g = h * (y + one)
    r = sylvester_resultant(f, g, X)
    assert r.is_zero


def test_resultant_matches_sympy():
    sympy = pytest.importorskip("sympy")
    sx, sy, sa = sympy.symbols("x y a")
    f = x ** 2 + a * y
    g = x * y + C(3)
    r = sylvester_resultant(f, g, X)
    expected = sympy.resultant(sx ** 2 + sa * sy, sx * sy + 3, sx)
    got = sum(
        c * sy ** e[Y] * sa ** e[A] for e, c in r.terms.items()
    )
    assert sympy.simplify(got - expected) == 0


# -- univariate helpers -----------------------------------------------------

def test_rational_roots_basic():
    p = (t - C(2)) * (t + C(Fraction(1, 3))) * t
    assert rational_roots(p, T) == [Fraction(-1, 3), Fraction(0), Fraction(2)]


def test_rational_roots_none_found():
    p = t ** 2 + one
    assert rational_roots(p, T) == []


def test_rational_roots_rejects_multivariate():
    with pytest.raises(ValueError):
        rational_roots(x + t, T)


def test_has_irrational_factor():
    assert has_irrational_factor(t ** 2 - C(2), T)
    assert not has_irrational_factor((t - one) ** 2, T)
    assert has_irrational_factor((t - one) * (t ** 2 + one), T)
    assert not has_irrational_factor(C(5), T)


# -- rational functions -----------------------------------------------------

def test_ratfunc_cancels_common_factor():
    r = RatFunc(x * y, x)
    assert r.num == y
    assert r.den == one


def test_ratfunc_monomial_times_inverse():
    # x * y * (y / x) reduces to y^2
    r = RatFunc(x * y) * RatFunc(y, x)
    assert r == RatFunc(y ** 2)
    assert r.is_polynomial


def test_ratfunc_normalizes_denominator_leading_coeff():
    r = RatFunc(y, C(2) * x)
    assert r.den == x
    assert r.num == C(Fraction(1, 2)) * y


def test_ratfunc_addition():
    r = RatFunc(one, x) + RatFunc(one, y)
    assert r == RatFunc(x + y, x * y)


def test_ratfunc_division_and_powers():
    r = RatFunc(x, y)
    assert r / r == RatFunc.from_const(1)
    assert r ** -2 == RatFunc(y ** 2, x ** 2)
    with pytest.raises(ZeroDivisionError):
        r / RatFunc.from_const(0)


def test_ratfunc_zero_canonical():
    r = RatFunc(Poly.zero(), x ** 5)
    assert r.is_zero
    assert r.den == one


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=40, deadline=None)
def test_ratfunc_reduction_is_sound(p, q, h):
    lhs = RatFunc(p * h, q * h)
    rhs = RatFunc(p, q)
    assert lhs == rhs


def test_ratfunc_subst_ratfunc():
    # substitute y -> y/x inside y^2/x: get y^2/x^3
    r = RatFunc(y ** 2, x)
    s = r.subst_ratfunc(Y, RatFunc(y, x))
    assert s == RatFunc(y ** 2, x ** 3)


def test_ratfunc_subst_const_detects_zero_denominator():
    r = RatFunc(one, a * x)
    with pytest.raises(ZeroDivisionError):
        r.subst_const(A, 0)


# -- printing ---------------------------------------------------------------

def test_format_descending_graded_order():
    p = x ** 3 + y ** 2 + x * y
    assert format_poly(p) == "x^3 + x*y + y^2"


def test_format_signs_and_coefficients():
    p = -x ** 2 + C(Fraction(1, 2)) * y - C(3)
    assert format_poly(p) == "-x^2 + 1/2*y - 3"
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(one) == "1"


def test_format_ratfunc_shapes():
    assert format_ratfunc(RatFunc(y ** 2 + x ** 3)) == "x^3 + y^2"
    assert format_ratfunc(RatFunc(y, x + y)) == "(y)/(x + y)"


def test_format_custom_names():
    p = x * y ** 2
    assert format_poly(p, names=("u", "v", "a", "t")) == "u*v^2"
