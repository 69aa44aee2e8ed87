"""Points of the quadratic tree and their local charts.

A point is a finite path of steps from the root ring D (the localization of
k[x, y] at the origin).  Each step picks a point in the first neighborhood
of the current ring:

    step b (a rational):  new parameters (p, q/p - b)
    step inf:             new parameters (q, p/q)

The first parameter of the new chart always cuts out the exceptional curve
of the step.  A path therefore determines a chain of quadratic transforms,
and the ring at the end is again two-dimensional regular local.

Two translations between charts are kept on every point:

    down_x, down_y   the root coordinates x, y written as polynomials in
                     the local parameters of this point
    param_x, param_y the local parameters written as fractions in x, y

`express` pushes any element of the fraction field into the local chart;
all order, membership and position questions reduce to looking at it there.

A path may contain one symbolic step `TSYM`: a child in a generic position
on the exceptional curve, with the direction kept as the symbol t.  These
points drive the one-parameter family machinery; they are never printed in
path literals.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import InputError
from .expr import Step, format_step, is_inf
from .poly import Poly, RatFunc, T, X, Y


class _SymbolicStep:
    """Singleton marker for a generic (symbolic) direction t."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "t"


TSYM = _SymbolicStep()

AnyStep = Union[Step, _SymbolicStep]

_PX = Poly.variable(X)
_PY = Poly.variable(Y)


class Comparison(Enum):
    EQUAL = "equal"
    BELOW = "below"          # first path is a proper prefix of the second
    ABOVE = "above"          # second path is a proper prefix of the first
    INCOMPARABLE = "incomparable"


class Point:
    """A point of the quadratic tree, with its chart data precomputed."""

    __slots__ = ("steps", "parent", "down_x", "down_y", "param_x", "param_y")

    def __init__(self, steps: Tuple[AnyStep, ...], parent: Optional["Point"],
                 down_x: Poly, down_y: Poly, param_x: RatFunc, param_y: RatFunc):
        self.steps = steps
        self.parent = parent
        self.down_x = down_x
        self.down_y = down_y
        self.param_x = param_x
        self.param_y = param_y

    # -- construction ------------------------------------------------------

    @staticmethod
    def root() -> "Point":
        return Point((), None, _PX, _PY, RatFunc(_PX), RatFunc(_PY))

    @staticmethod
    def from_path(steps: Iterable[AnyStep]) -> "Point":
        point = Point.root()
        for step in steps:
            point = point.child(step)
        return point

    def child(self, step: AnyStep) -> "Point":
        step = normalize_step(step)
        if is_inf(step):
            down_x = self.down_x.subst_xy(_PX * _PY, _PX)
            down_y = self.down_y.subst_xy(_PX * _PY, _PX)
            param_x = self.param_y
            param_y = self.param_x / self.param_y
        else:
            if step is TSYM:
                if self.has_symbolic:
                    raise InputError("a path may carry at most one symbolic step")
                shift = Poly.variable(T)
                offset = RatFunc(shift)
            else:
                shift = Poly.const(step)
                offset = RatFunc.from_const(step)
            image_y = _PX * (_PY + shift)
            down_x = self.down_x.subst_xy(_PX, image_y)
            down_y = self.down_y.subst_xy(_PX, image_y)
            param_x = self.param_x
            param_y = self.param_y / self.param_x - offset
        return Point(self.steps + (step,), self, down_x, down_y, param_x, param_y)

    def ancestor(self, level: int) -> "Point":
        """The point `level` steps from the root along this path."""
        if not 0 <= level <= self.level:
            raise ValueError("ancestor level out of range")
        point = self
        while point.level > level:
            point = point.parent
        return point

    # -- identity ----------------------------------------------------------

    @property
    def level(self) -> int:
        return len(self.steps)

    @property
    def is_root(self) -> bool:
        return not self.steps

    @property
    def has_symbolic(self) -> bool:
        return any(s is TSYM for s in self.steps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __str__(self) -> str:
        return "D" + "".join(f"<{format_any_step(s)}>" for s in self.steps)

    def __repr__(self) -> str:
        return f"Point({self})"

    # -- chart work --------------------------------------------------------

    def express(self, f: RatFunc) -> RatFunc:
        """Rewrite an element of k(x, y) in the local parameters here."""
        return f.subst_xy(self.down_x, self.down_y)

    def express_poly(self, h: Poly) -> Poly:
        return h.subst_xy(self.down_x, self.down_y)

    def in_ring(self, f: RatFunc) -> bool:
        """Membership in the local ring at this point.

        The expressed fraction is reduced, so membership is exactly a unit
        denominator: nonzero constant term.
        """
        expressed = self.express(f)
        return bool(expressed.den.constant_term())

    def ord_at(self, f: RatFunc) -> int:
        """Value of the order valuation of this ring on a nonzero element."""
        expressed = self.express(f)
        if expressed.is_zero:
            raise ValueError("order of zero undefined")
        return expressed.num.xy_order() - expressed.den.xy_order()

    def residue_of(self, f: RatFunc) -> Poly:
        """Image of a ring element in the residue field.

        The result is a constant polynomial for a concrete point; a point
        with a symbolic step may give a polynomial in t.  Raises if f is
        not in the local ring (or lands outside the polynomial part of the
        residue field).
        """
        expressed = self.express(f)
        num = expressed.num.xy_constant_part()
        den = expressed.den.xy_constant_part()
        if den.is_zero:
            raise ValueError("element is not in the local ring at this point")
        value = num.divmod_exact(den)
        if value is None:
            raise ValueError("residue is not polynomial in the symbolic direction")
        return value

    # -- strict transforms -------------------------------------------------

    def strict_transform(self, h: Poly) -> Poly:
        """Strict transform of a plane curve germ h in this point's chart.

        Per step the curve is rewritten in the new chart and the exceptional
        factor (the full power of the first parameter) is stripped.
        """
        if h.is_zero:
            raise ValueError("strict transform of zero undefined")
        current = h
        for step in self.steps:
            if is_inf(step):
                current = current.subst_xy(_PX * _PY, _PX)
            elif step is TSYM:
                current = current.subst_xy(_PX, _PX * (_PY + Poly.variable(T)))
            else:
                current = current.subst_xy(_PX, _PX * (_PY + Poly.const(step)))
            current = current.shift_down(X, current.min_exponent(X))
        return current

    def multiplicity_of(self, h: Poly) -> int:
        """Multiplicity of the strict transform of h at this point."""
        return self.strict_transform(h).xy_order()


# -- steps -----------------------------------------------------------------


def normalize_step(step) -> AnyStep:
    if step is TSYM or is_inf(step):
        return step
    try:
        return Fraction(step)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad step {step!r}: expected a rational, inf, or the symbolic step") from exc


def format_any_step(step: AnyStep) -> str:
    if step is TSYM:
        return "t"
    return format_step(step)


def concrete_steps(steps: Sequence[AnyStep]) -> Tuple[Step, ...]:
    """Reject symbolic steps; used before printing a path literal."""
    for s in steps:
        if s is TSYM:
            raise ValueError("path contains a symbolic step")
    return tuple(steps)


# -- path order ------------------------------------------------------------


def compare(a: Point, b: Point) -> Comparison:
    """Prefix comparison of paths; BELOW means a is a proper prefix of b,
    so the ring at a is contained in the ring at b."""
    return compare_steps(a.steps, b.steps)


def compare_steps(a: Sequence[AnyStep], b: Sequence[AnyStep]) -> Comparison:
    n = min(len(a), len(b))
    for i in range(n):
        if not _same_step(a[i], b[i]):
            return Comparison.INCOMPARABLE
    if len(a) == len(b):
        return Comparison.EQUAL
    return Comparison.BELOW if len(a) < len(b) else Comparison.ABOVE


def _same_step(s: AnyStep, t: AnyStep) -> bool:
    if s is TSYM or t is TSYM:
        return s is t
    if is_inf(s) or is_inf(t):
        return s is t
    return s == t


def is_prefix(a: Point, b: Point) -> bool:
    """True when the ring at a is contained in the ring at b (a at or above b)."""
    return compare(a, b) in (Comparison.EQUAL, Comparison.BELOW)
