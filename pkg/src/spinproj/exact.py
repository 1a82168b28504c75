"""Exact scalars: rationals, half-integers and factorials.

Rationals are :class:`fractions.Fraction`, which already keeps the
canonical form (positive denominator, reduced, zero as ``0/1``) after
every operation.  This module adds the strict ``"p/q"`` wire format and
the half-integer type used for spin quantum numbers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

BigRational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and exponents are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse rational from {type(text).__name__}")
    match = _RATIONAL_RE.match(text.replace("−", "-"))
    if match is None:
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or 'p'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Canonical string: ``"-3/2"``, integers without the ``/1``."""
    return str(Fraction(x))


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_neg(a: Fraction) -> Fraction:
    return -a


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    """Exact quotient; raises :class:`ZeroDivisionError` when ``b == 0``."""
    if b == 0:
        raise ZeroDivisionError(f"rational division of {a} by zero")
    return Fraction(a) / b


def factorial(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("factorial needs an int")
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    return math.factorial(k)


@dataclass(frozen=True, order=True)
class HalfInt:
    """An integer or half-odd-integer, stored as twice its value."""

    twice: int

    def __post_init__(self):
        if isinstance(self.twice, bool) or not isinstance(self.twice, int):
            raise TypeError("HalfInt.twice must be an int")

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Build from an int, a Fraction with denominator 1 or 2, a string or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not an integer or half-integer")
            return cls(int(2 * value))
        raise TypeError(f"cannot make HalfInt from {type(value).__name__}")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def to_json(self) -> dict:
        return {"twice": self.twice}

    @classmethod
    def from_json(cls, obj: dict) -> "HalfInt":
        return cls(obj["twice"])


def spin_range(S: HalfInt) -> list[HalfInt]:
    """Return ``S, S-1, ..., -S`` (descending, unit steps)."""
    S = HalfInt.of(S)
    if S.twice < 0:
        raise ValueError(f"spin must be nonnegative, got {S}")
    return [HalfInt(t) for t in range(S.twice, -S.twice - 1, -2)]
