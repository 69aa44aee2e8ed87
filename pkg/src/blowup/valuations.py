"""Valuation rings attached to the tree.

Four flavors appear:

  * first kind: the h-adic valuation of an irreducible curve h through the
    origin.  Its ring contains a tree point's ring exactly when the strict
    transform of h still vanishes at that point.
  * second kind: the order valuation of a tree point.  Its ring contains
    the rings at or above the point, and the rings of proximate points.
  * minimal valuations: unions of the local rings along an infinite path.
    Two constructors are provided, an eventually periodic step sequence and
    lazy curve following (step after step along the branch of a curve).
  * monomial valuations v(x) = a, v(y) = b.  Subtracting exponents walks
    the path to a tree point, so these normalize to a scaled order
    valuation and bring nothing new.

Element membership in a minimal valuation ring is decided by walking the
path until the position stabilizes; two coprime curves separate after
finitely many steps, so the walk always ends (the cap is a safety net).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import List, Tuple

from .errors import BranchError, DepthCapError, InputError
from .expr import INF, Step, format_path, is_inf
from .poly import A, Poly, RatFunc, T, X, Y, factor_multiplicity, poly_gcd, rational_roots
from .position import Position, classify_expressed, direction_poly
from .proximity import second_kind_contains
from .tree import AnyStep, Point, TSYM, _same_step


def _check_curve(h: Poly, through_origin: bool) -> Poly:
    """Validate a polynomial standing for an irreducible curve.

    Full irreducibility over the rationals is not tested; the cheap and
    decisive failure modes are: constants, extra symbols, monomial factors
    next to other terms, and repeated factors.
    """
    if h.is_zero or h.is_constant:
        raise InputError("a curve needs a nonconstant polynomial")
    if h.has_slot(A) or h.has_slot(T):
        raise InputError("a curve must be a polynomial in x and y only")
    content = h.monomial_content()
    if content != (0, 0, 0, 0):
        if len(h.terms) > 1 or sum(content) > 1:
            raise InputError(f"{h} is divisible by a monomial, so it is not irreducible")
        return h
    for slot in (X, Y):
        d = h.derivative(slot)
        if not d.is_zero:
            if not poly_gcd(h, d).is_constant:
                raise InputError(f"{h} has a repeated factor")
            break
    if through_origin and h.constant_term() != 0:
        raise InputError(f"{h} does not pass through the origin")
    return h


class FirstKind:
    """The h-adic valuation of an irreducible curve h."""

    kind = "first"

    def __init__(self, h: Poly):
        self.h = _check_curve(h, through_origin=False).normalized()

    def value(self, f: RatFunc) -> int:
        if f.is_zero:
            raise ValueError("value of zero undefined")
        return factor_multiplicity(f.num, self.h) - factor_multiplicity(f.den, self.h)

    def contains_element(self, f: RatFunc) -> bool:
        return f.is_zero or self.value(f) >= 0

    def ring_contains(self, beta: Point) -> bool:
        if self.h.constant_term() != 0:
            return False
        return beta.strict_transform(self.h).xy_order() >= 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FirstKind) and self.h == other.h

    def __hash__(self) -> int:
        return hash(("first", self.h))

    def __repr__(self) -> str:
        return f"FirstKind({self.h})"


class SecondKind:
    """The order valuation of the ring at a tree point, possibly scaled."""

    kind = "second"

    def __init__(self, point: Point, scale: int = 1):
        if point.has_symbolic:
            raise InputError("an order valuation needs a concrete point")
        if scale < 1:
            raise InputError("scale must be a positive integer")
        self.point = point
        self.scale = scale

    def value(self, f: RatFunc) -> int:
        return self.scale * self.point.ord_at(f)

    def contains_element(self, f: RatFunc) -> bool:
        return f.is_zero or self.point.ord_at(f) >= 0

    def ring_contains(self, beta: Point) -> bool:
        return second_kind_contains(self.point, beta)

    def __eq__(self, other) -> bool:
        return isinstance(other, SecondKind) and self.point == other.point

    def __hash__(self) -> int:
        return hash(("second", self.point))

    def __repr__(self) -> str:
        return f"SecondKind({self.point})"


class _MinimalBase:
    """Common machinery for valuations given by an infinite path."""

    kind = "minimal"

    def step_at(self, index: int) -> AnyStep:
        raise NotImplementedError

    def point_at(self, level: int) -> Point:
        raise NotImplementedError

    def contains_element(self, f: RatFunc, max_depth: int = 64) -> bool:
        """Walk the path until f settles into or out of the union ring."""
        if f.has_slot(A):
            raise InputError("membership needs a concrete element")
        if f.is_zero:
            return True
        for level in range(max_depth + 1):
            pos = classify_expressed(self.point_at(level).express(f))
            if pos in (Position.ZERO, Position.UNIT):
                return True
            if pos is Position.POLE:
                return False
        raise DepthCapError(
            f"position of {f} along the path did not settle within {max_depth} steps")

    def ring_contains(self, beta: Point) -> bool:
        return all(_same_step(beta.steps[i], self.step_at(i))
                   for i in range(beta.level))

    def same_path(self, other: "_MinimalBase", bound: int = 64) -> bool:
        """Step-by-step comparison up to a bound.

        Paths from different constructors can describe the same valuation;
        agreement over `bound` steps is taken as equality.  Distinct
        eventually periodic paths separate well before the default bound,
        and a curve branch that tracks a periodic path settles into the
        period at latest when its strict transform becomes smooth.
        """
        return all(_same_step(self.step_at(i), other.step_at(i))
                   for i in range(bound))


class MinimalEventuallyPeriodic(_MinimalBase):
    """The union ring along prefix + period, period repeated forever."""

    def __init__(self, prefix, period):
        prefix = tuple(_concrete(s) for s in prefix)
        period = tuple(_concrete(s) for s in period)
        if not period:
            raise InputError("the period must not be empty")
        self.prefix, self.period = _canonical_path_form(prefix, period)
        self._points: List[Point] = [Point.root()]

    def step_at(self, index: int) -> AnyStep:
        if index < len(self.prefix):
            return self.prefix[index]
        return self.period[(index - len(self.prefix)) % len(self.period)]

    def point_at(self, level: int) -> Point:
        while len(self._points) <= level:
            self._points.append(self._points[-1].child(self.step_at(len(self._points) - 1)))
        return self._points[level]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MinimalEventuallyPeriodic)
                and self.prefix == other.prefix and self.period == other.period)

    def __hash__(self) -> int:
        return hash(("periodic", self.prefix, self.period))

    def __repr__(self) -> str:
        return (f"MinimalEventuallyPeriodic({format_path(self.prefix)}, "
                f"{format_path(self.period)})")


class MinimalCurveBranch(_MinimalBase):
    """The union ring along the branch of an irreducible curve.

    The path is discovered lazily: each step is the unique direction in
    which the strict transform keeps vanishing.  A split tangent cone or a
    non-rational direction raises `BranchError`.
    """

    def __init__(self, h: Poly):
        self.h = _check_curve(h, through_origin=True).normalized()
        self._entries: List[Tuple[Point, Poly]] = [(Point.root(), self.h)]
        self._lock = threading.Lock()

    def _extend_to(self, level: int) -> None:
        with self._lock:
            while len(self._entries) <= level:
                point, strict = self._entries[-1]
                step = branch_step(strict)
                self._entries.append((point.child(step), _one_step(strict, step)))

    def step_at(self, index: int) -> AnyStep:
        self._extend_to(index + 1)
        return self._entries[index + 1][0].steps[index]

    def point_at(self, level: int) -> Point:
        self._extend_to(level)
        return self._entries[level][0]

    def strict_at(self, level: int) -> Poly:
        self._extend_to(level)
        return self._entries[level][1]

    def __eq__(self, other) -> bool:
        return isinstance(other, MinimalCurveBranch) and self.h == other.h

    def __hash__(self) -> int:
        return hash(("branch", self.h))

    def __repr__(self) -> str:
        return f"MinimalCurveBranch({self.h})"


# -- path steps from curves and monomials -----------------------------------


def _one_step(h: Poly, step: AnyStep) -> Poly:
    if is_inf(step):
        out = h.subst_xy(Poly.variable(X) * Poly.variable(Y), Poly.variable(X))
    else:
        shift = Poly.variable(T) if step is TSYM else Poly.const(step)
        out = h.subst_xy(Poly.variable(X),
                         Poly.variable(X) * (Poly.variable(Y) + shift))
    return out.shift_down(X, out.min_exponent(X))


def branch_step(strict: Poly) -> AnyStep:
    """The unique direction in which a curve germ continues, or an error."""
    if strict.xy_order() < 1:
        raise BranchError("the curve does not pass through this point")
    lowest = strict.lowest_xy_form()
    phi = direction_poly(lowest)
    candidates: List[AnyStep] = []
    if not phi.is_constant:
        candidates.extend(rational_roots(phi, T))
    if lowest.min_exponent(X) > 0:
        candidates.append(INF)
    if len(candidates) == 1:
        return candidates[0]
    if not candidates:
        raise BranchError("the branch continues in a non-rational direction")
    raise BranchError(
        "the curve has several branches here; directions " +
        ", ".join("inf" if is_inf(c) else str(c) for c in candidates))


def monomial_path(a, b) -> Tuple[Step, ...]:
    """The path of the monomial valuation v(x) = a, v(y) = b.

    While the weights differ, the smaller one is subtracted from the larger:
    a 0 step when x carries the smaller weight, an inf step (which swaps the
    parameters) otherwise.  The walk ends when the weights agree.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise InputError("monomial weights must be positive")
    scale = 1
    for v in (a, b):
        scale = scale * v.denominator // _gcd(scale, v.denominator)
    ia, ib = int(a * scale), int(b * scale)
    steps: List[Step] = []
    while ia != ib:
        if ia < ib:
            steps.append(Fraction(0))
            ib -= ia
        else:
            steps.append(INF)
            ia, ib = ib, ia - ib
    return tuple(steps)


def monomial_valuation(a, b) -> SecondKind:
    """The monomial valuation, normalized to a scaled order valuation."""
    path = monomial_path(a, b)
    a, b = Fraction(a), Fraction(b)
    denom_lcm = 1
    for v in (a, b):
        denom_lcm = denom_lcm * v.denominator // _gcd(denom_lcm, v.denominator)
    g = _gcd(int(a * denom_lcm), int(b * denom_lcm))
    point = Point.from_path(path)
    return SecondKind(point, scale=g)


# -- helpers ----------------------------------------------------------------


def _concrete(step) -> Step:
    if step is TSYM:
        raise InputError("an infinite path must use concrete steps")
    if is_inf(step):
        return step
    return Fraction(step)


def _canonical_path_form(prefix: Tuple[Step, ...], period: Tuple[Step, ...]):
    # shortest repeating block
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period == period[:d] * (n // d):
            period = period[:d]
            break
    # absorb a prefix tail that already lies on the cycle
    prefix = list(prefix)
    period = list(period)
    while prefix and _same_step(prefix[-1], period[-1]):
        prefix.pop()
        period = [period[-1]] + period[:-1]
    return tuple(prefix), tuple(period)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
