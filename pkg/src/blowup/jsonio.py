"""JSON encodings for paths, valuations, and families.

Steps travel as strings ("0", "-1/2", "inf") so that exact rationals
survive the trip; integers are accepted on input for convenience.  A
family is a tagged object; a family set is a JSON array of them.  The
encoders and parsers are exact inverses up to value equality: a monomial
valuation is spelled {"kind": "monomial", ...} on the way in but comes
back as the order valuation it constructs.
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .errors import InputError
from .expr import Step, format_step, parse_element, parse_step
from .families import (Chain, Family, Fiber, MoebiusMap, Siblings, Singleton,
                       family_parts)
from .poly import A, Poly, RatFunc, T
from .tree import Point
from .valuations import (FirstKind, MinimalCurveBranch,
                         MinimalEventuallyPeriodic, SecondKind, _MinimalBase,
                         monomial_valuation)

JsonValue = Union[dict, list, str, int]


def _parse_one_step(value) -> Step:
    if isinstance(value, bool):
        raise InputError(f"bad step {value!r}: expected a rational or inf")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_step(value)
    raise InputError(f"bad step {value!r}: expected a rational or inf")


def steps_from_json(data) -> Tuple[Step, ...]:
    if not isinstance(data, list):
        raise InputError(f"bad path {data!r}: expected an array of steps")
    return tuple(_parse_one_step(s) for s in data)


def steps_to_json(steps: Sequence[Step]) -> List[str]:
    return [format_step(s) for s in steps]


def _curve_poly(text) -> Poly:
    if not isinstance(text, str):
        raise InputError(f"bad curve {text!r}: expected an expression string")
    value = parse_element(text)
    if value.den != Poly.const(1) or value.num.has_slot(A) or value.num.has_slot(T):
        raise InputError(f"bad curve {text!r}: expected a polynomial in x and y")
    return value.num


def _expect(data: dict, key: str):
    try:
        return data[key]
    except KeyError:
        raise InputError(f"missing key {key!r} in {data!r}") from None


# -- valuations --------------------------------------------------------------


def valuation_from_json(data) -> object:
    if not isinstance(data, dict):
        raise InputError(f"bad valuation {data!r}: expected an object")
    kind = _expect(data, "kind")
    if kind == "second":
        point = Point.from_path(steps_from_json(_expect(data, "point")))
        scale = data.get("scale", 1)
        if not isinstance(scale, int) or scale < 1:
            raise InputError(f"bad scale {scale!r}: expected a positive integer")
        return SecondKind(point, scale)
    if kind == "first":
        return FirstKind(_curve_poly(_expect(data, "h")))
    if kind == "minimal":
        return MinimalEventuallyPeriodic(
            steps_from_json(_expect(data, "prefix")),
            steps_from_json(_expect(data, "period")))
    if kind == "curve":
        return MinimalCurveBranch(_curve_poly(_expect(data, "h")))
    if kind == "monomial":
        a, b = _expect(data, "a"), _expect(data, "b")
        for w in (a, b):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InputError(f"bad weight {w!r}: expected a positive integer")
        return monomial_valuation(a, b)
    raise InputError(f"unknown valuation kind {kind!r}")


def valuation_to_json(v) -> Dict[str, JsonValue]:
    if isinstance(v, SecondKind):
        data: Dict[str, JsonValue] = {
            "kind": "second", "point": steps_to_json(v.point.steps)}
        if v.scale != 1:
            data["scale"] = v.scale
        return data
    if isinstance(v, FirstKind):
        return {"kind": "first", "h": str(v.h)}
    if isinstance(v, MinimalEventuallyPeriodic):
        return {"kind": "minimal", "prefix": steps_to_json(v.prefix),
                "period": steps_to_json(v.period)}
    if isinstance(v, MinimalCurveBranch):
        return {"kind": "curve", "h": str(v.h)}
    raise InputError(f"not a valuation: {v!r}")


# -- families ----------------------------------------------------------------


def _minimal_from_json(data) -> _MinimalBase:
    v = valuation_from_json(data)
    if not isinstance(v, _MinimalBase):
        raise InputError("chains and siblings follow a minimal valuation")
    return v


def _fraction_from_json(value, what: str) -> Fraction:
    step = _parse_one_step(value)
    if not isinstance(step, Fraction):
        raise InputError(f"bad {what} {value!r}: expected a finite rational")
    return step


def family_from_json(data) -> Family:
    if not isinstance(data, dict):
        raise InputError(f"bad family {data!r}: expected an object")
    kind = _expect(data, "kind")
    if kind == "singleton":
        return Singleton(Point.from_path(steps_from_json(_expect(data, "point"))))
    if kind == "fiber":
        base = Point.from_path(steps_from_json(_expect(data, "base")))
        excluded = frozenset(steps_from_json(data.get("excluded", [])))
        tail = steps_from_json(data.get("tail", []))
        if "map" in data:
            m = data["map"]
            if not isinstance(m, dict):
                raise InputError(f"bad map {m!r}: expected an object")
            coeffs = [_fraction_from_json(_expect(m, k), "map entry")
                      for k in ("a", "b", "c", "d")]
            return Fiber(base, excluded, tail, MoebiusMap(*coeffs))
        return Fiber(base, excluded, tail)
    if kind == "chain":
        return Chain(_minimal_from_json(_expect(data, "valuation")),
                     _expect(data, "from"))
    if kind == "siblings":
        return Siblings(_minimal_from_json(_expect(data, "valuation")),
                        _fraction_from_json(_expect(data, "offset"), "offset"))
    raise InputError(f"unknown family kind {kind!r}")


def family_to_json(part) -> Dict[str, JsonValue]:
    if isinstance(part, Singleton):
        return {"kind": "singleton", "point": steps_to_json(part.point.steps)}
    if isinstance(part, Fiber):
        data: Dict[str, JsonValue] = {
            "kind": "fiber", "base": steps_to_json(part.base.steps)}
        if part.excluded:
            data["excluded"] = sorted(steps_to_json(part.excluded))
        if part.tail:
            data["tail"] = steps_to_json(part.tail)
        if not part.param_map.is_identity():
            m = part.param_map
            data["map"] = {k: format_step(getattr(m, k)) for k in "abcd"}
        return data
    if isinstance(part, Chain):
        return {"kind": "chain",
                "valuation": valuation_to_json(part.valuation),
                "from": part.from_level}
    if isinstance(part, Siblings):
        return {"kind": "siblings",
                "valuation": valuation_to_json(part.valuation),
                "offset": format_step(part.offset)}
    raise InputError(f"not a family: {part!r}")


def family_set_from_json(data):
    """A single tagged object or an array of them, as parts."""
    if isinstance(data, list):
        return tuple(family_from_json(item) for item in data)
    return (family_from_json(data),)


def family_set_to_json(family) -> List[Dict[str, JsonValue]]:
    return [family_to_json(part) for part in family_parts(family)]
