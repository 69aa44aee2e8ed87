"""Parsing for field elements and for tree-path literals.

Elements of the fraction field are written in x, y and an optional scalar
parameter a:

    (y^2 + x^3) / (x*y)        x/y - 2        (x + a*y)^2

Supported: integer and rational constants, + - * / ^ with the usual
precedence, parentheses, unary minus, integer exponents (negative allowed).
Multiplication is always explicit.

Tree paths are written as bracketed step lists:

    []      [0]      [0, inf, -1/2]

Each step is a rational number or `inf`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import InputError
from .poly import A, Poly, RatFunc, X, Y


class ExprSyntaxError(InputError):
    """Raised for malformed element expressions or path literals."""


class _Infinity:
    """Singleton marker for the step `inf` (the vertical tangent direction)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"


INF = _Infinity()

Step = Union[Fraction, _Infinity]


def is_inf(step) -> bool:
    return step is INF


# -- step and path literals -------------------------------------------------


def parse_step(text: str) -> Step:
    text = text.strip()
    if text in ("inf", "oo"):
        return INF
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprSyntaxError(f"bad path step {text!r}: expected a rational or inf") from exc


def format_step(step: Step) -> str:
    return "inf" if step is INF else str(step)


def parse_path(text: str) -> Tuple[Step, ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ExprSyntaxError(f"bad path literal {text!r}: expected [step, step, ...]")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return tuple(parse_step(piece) for piece in inner.split(","))


def format_path(steps: Sequence[Step]) -> str:
    return "[" + ", ".join(format_step(s) for s in steps) + "]"


# -- element expressions ----------------------------------------------------

_VAR_SLOTS = {"x": X, "y": Y, "a": A}


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: List[Tuple[str, str]] = []
        self._scan()
        self.index = 0

    def _scan(self) -> None:
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("num", text[i:j]))
                i = j
                continue
            if ch.isalpha():
                j = i
                while j < len(text) and text[j].isalnum():
                    j += 1
                self.tokens.append(("name", text[i:j]))
                i = j
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch))
                i += 1
                continue
            raise ExprSyntaxError(f"unexpected character {ch!r} at position {i}")

    def peek(self) -> Tuple[str, str]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("end", "")

    def next(self) -> Tuple[str, str]:
        tok = self.peek()
        self.index += 1
        return tok

    def expect(self, kind: str) -> Tuple[str, str]:
        tok = self.next()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1]!r} in {self.text!r}")
        return tok


def parse_element(text: str) -> RatFunc:
    """Parse an element of the fraction field k(x, y) (optionally with a)."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression")
    toks = _Tokenizer(text)
    value = _parse_sum(toks)
    if toks.peek()[0] != "end":
        raise ExprSyntaxError(f"trailing input {toks.peek()[1]!r} in {text!r}")
    return value


def _parse_sum(toks: _Tokenizer) -> RatFunc:
    value = _parse_product(toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        rhs = _parse_product(toks)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_product(toks: _Tokenizer) -> RatFunc:
    value = _parse_factor(toks)
    while toks.peek()[0] in ("*", "/"):
        op = toks.next()[0]
        rhs = _parse_factor(toks)
        if op == "*":
            value = value * rhs
        else:
            if rhs.is_zero:
                raise ExprSyntaxError("division by zero")
            value = value / rhs
    return value


def _parse_factor(toks: _Tokenizer) -> RatFunc:
    if toks.peek()[0] == "-":
        toks.next()
        return -_parse_factor(toks)
    if toks.peek()[0] == "+":
        toks.next()
        return _parse_factor(toks)
    return _parse_power(toks)


def _parse_power(toks: _Tokenizer) -> RatFunc:
    base = _parse_atom(toks)
    if toks.peek()[0] != "^":
        return base
    toks.next()
    sign = 1
    while toks.peek()[0] in ("+", "-"):
        if toks.next()[0] == "-":
            sign = -sign
    tok = toks.expect("num")
    exponent = sign * int(tok[1])
    if exponent < 0 and base.is_zero:
        raise ExprSyntaxError("division by zero")
    return base ** exponent


def _parse_atom(toks: _Tokenizer) -> RatFunc:
    kind, text = toks.next()
    if kind == "num":
        return RatFunc.from_const(int(text))
    if kind == "name":
        slot = _VAR_SLOTS.get(text)
        if slot is None:
            raise ExprSyntaxError(f"unknown symbol {text!r}: only x, y, a are allowed")
        return RatFunc(Poly.variable(slot))
    if kind == "(":
        value = _parse_sum(toks)
        toks.expect(")")
        return value
    if kind == "end":
        raise ExprSyntaxError("unexpected end of expression")
    raise ExprSyntaxError(f"unexpected token {text!r}")
