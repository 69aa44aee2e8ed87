"""Independent oracles used by the acceptance and property suites.

These deliberately avoid the package's own proximity formula: containment
of a tree ring inside an order valuation is decided here from first
principles, by scanning parameter monomials for a negative order and then
searching for a unit 1 + (combination of parameter monomials) whose order
is positive, via an exact linear system on expressed coefficients.  The
inverse of such a unit is an element of the smaller ring with negative
order, so finding one refutes containment; finding neither is evidence of
containment at the searched degree.
"""

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from blowup.expr import INF
from blowup.poly import Poly, RatFunc, poly_gcd
from blowup.tree import Point


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    quotient = b.divmod_exact(poly_gcd(a, b))
    assert quotient is not None
    return a * quotient


def _solve_affine(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """One solution of rows * c = rhs over the rationals, or None."""
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        scale = m[r][col]
        m[r] = [v / scale for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][-1] != 0:
            return None
    solution = [Fraction(0)] * cols
    for row_index, col in enumerate(pivots):
        solution[col] = m[row_index][-1]
    return solution


def ord_contained(alpha: Point, beta: Point,
                  degree: int = 4) -> Tuple[bool, Optional[RatFunc]]:
    """Does the ring at beta sit inside the order valuation at alpha?

    Returns (verdict, witness): a witness is an element of the ring at
    beta with negative order at alpha.  The verdict True means no witness
    exists among parameter monomials of total degree <= degree and
    inverses of units built from them, which refutes every escape a
    bounded-degree element could provide.  Orders are additive on
    products, so a monomial in the parameters has negative order exactly
    when one of the parameters does.
    """
    if alpha.ord_at(beta.param_x) < 0:
        return False, beta.param_x
    if alpha.ord_at(beta.param_y) < 0:
        return False, beta.param_y
    # no monomial in the parameters escapes; look for a unit
    # 1 + sum c*u^i*v^j with positive order, whose inverse then escapes.
    # Work with parameters already expressed in the chart at alpha, where
    # the order is plain order of vanishing at the origin.
    u = alpha.express(beta.param_x)
    v = alpha.express(beta.param_y)
    monomials = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if i == j == 0:
                continue
            if i == 0 and j == 1:
                g = v
            elif j == 0 and i == 1:
                g = u
            elif j == 0:
                g = monomials[(i - 1, 0)] * u
            else:
                g = monomials[(i, j - 1)] * v
            monomials[(i, j)] = g
    keys = sorted(monomials)
    common = Poly.const(1)
    for key in keys:
        common = _poly_lcm(common, monomials[key].den)
    numerators = []
    for key in keys:
        g = monomials[key]
        factor = common.divmod_exact(g.den)
        assert factor is not None
        numerators.append(g.num * factor)
    cut = common.xy_order()
    wanted = set()
    for p in numerators + [common]:
        for exps in p.terms:
            if exps[0] + exps[1] <= cut:
                wanted.add(exps)
    ordered = sorted(wanted)
    rows = [[p.terms.get(exps, Fraction(0)) for p in numerators]
            for exps in ordered]
    rhs = [-common.terms.get(exps, Fraction(0)) for exps in ordered]
    if not rows:
        return True, None
    solution = _solve_affine(rows, rhs)
    if solution is None:
        return True, None
    unit = RatFunc(Poly.const(1))
    for value, key in zip(solution, keys):
        if value:
            unit = unit + RatFunc(Poly.const(value)) * _monomial_at(beta, key)
    witness = RatFunc(unit.den, unit.num)
    assert alpha.ord_at(witness) < 0
    return False, witness


def _monomial_at(beta: Point, key: Tuple[int, int]) -> RatFunc:
    return _power(beta.param_x, key[0]) * _power(beta.param_y, key[1])


def _power(f: RatFunc, n: int) -> RatFunc:
    out = RatFunc(Poly.const(1))
    for _ in range(n):
        out = out * f
    return out


def proximate_by_containment(beta: Point, alpha: Point) -> bool:
    """Independent proximity decision: beta proximate to alpha means the
    ring at beta lies inside the order valuation at alpha."""
    return ord_contained(alpha, beta)[0]


# -- seeded enumeration ------------------------------------------------------


DEFAULT_SEED = 20240817
STEP_ALPHABET = (Fraction(-1), Fraction(0), Fraction(1), INF)


def random_point(rng: random.Random, max_level: int = 6,
                 alphabet=STEP_ALPHABET) -> Point:
    level = rng.randint(1, max_level)
    return Point.from_path(rng.choice(alphabet) for _ in range(level))


def random_comparable_pair(rng: random.Random, max_level: int = 6,
                           alphabet=STEP_ALPHABET) -> Tuple[Point, Point]:
    """A point and one of its proper ancestors."""
    beta = random_point(rng, max_level, alphabet)
    alpha = beta.ancestor(rng.randint(0, beta.level - 1))
    return beta, alpha
