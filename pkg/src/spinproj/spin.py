"""Spin projectors and functions of S_z built by operator Lagrange interpolation.

All operators here are diagonal in the S_z eigenbasis, ordered with
``m = S`` first (index ``i`` holds ``m = S - i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import HalfInt, factorial, format_rational, parse_rational, spin_range
from .poly import NodeSet, Polynomial, interpolate, node_polynomial, reduce_mod

BASIS = "m-descending"


@dataclass(frozen=True)
class SpinQuantum:
    S: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "S", HalfInt.of(self.S))
        if self.S.twice < 0:
            raise ValueError(f"spin must be nonnegative, got {self.S}")

    @classmethod
    def of(cls, value) -> "SpinQuantum":
        if isinstance(value, SpinQuantum):
            return value
        return cls(HalfInt.of(value))

    @property
    def twice(self) -> int:
        return self.S.twice

    @property
    def dim(self) -> int:
        return self.S.twice + 1

    def spectrum(self) -> list[HalfInt]:
        return spin_range(self.S)

    def nodes(self) -> NodeSet:
        return _nodes(self.S.twice)

    def __str__(self):
        return str(self.S)


@dataclass(frozen=True)
class MagneticQuantum:
    S: HalfInt
    m: HalfInt

    def __post_init__(self):
        S, m = HalfInt.of(self.S), HalfInt.of(self.m)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "m", m)
        if S.twice < 0:
            raise ValueError(f"spin must be nonnegative, got {S}")
        if (S.twice - m.twice) % 2:
            kind = "an integer" if S.is_integer else "a half-odd-integer"
            raise ValueError(f"m = {m} must be {kind} for S = {S}")
        if abs(m.twice) > S.twice:
            raise ValueError(f"m = {m} outside -{S}..{S}")

    @property
    def index(self) -> int:
        """Position of ``|m>`` in the descending basis."""
        return (self.S.twice - self.m.twice) // 2


@lru_cache(maxsize=None)
def _nodes(two_s: int) -> NodeSet:
    return NodeSet(m.to_fraction() for m in spin_range(HalfInt(two_s)))


@dataclass(frozen=True)
class DiagonalOperator:
    """An operator diagonal in the S_z basis, ``diagonal[i]`` at ``m = S - i``."""

    spin: SpinQuantum
    diagonal: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "spin", SpinQuantum.of(self.spin))
        diag = tuple(Fraction(d) for d in self.diagonal)
        if len(diag) != self.spin.dim:
            raise ValueError(f"diagonal of length {len(diag)} for spin {self.spin} (need {self.spin.dim})")
        object.__setattr__(self, "diagonal", diag)

    @classmethod
    def identity(cls, S) -> "DiagonalOperator":
        S = SpinQuantum.of(S)
        return cls(S, [1] * S.dim)

    @classmethod
    def zero(cls, S) -> "DiagonalOperator":
        S = SpinQuantum.of(S)
        return cls(S, [0] * S.dim)

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def _check(self, other: "DiagonalOperator"):
        if other.spin != self.spin:
            raise ValueError(f"spin mismatch: {self.spin} vs {other.spin}")

    def __add__(self, other: "DiagonalOperator") -> "DiagonalOperator":
        self._check(other)
        return DiagonalOperator(self.spin, [a + b for a, b in zip(self.diagonal, other.diagonal)])

    def __sub__(self, other: "DiagonalOperator") -> "DiagonalOperator":
        self._check(other)
        return DiagonalOperator(self.spin, [a - b for a, b in zip(self.diagonal, other.diagonal)])

    def __matmul__(self, other: "DiagonalOperator") -> "DiagonalOperator":
        self._check(other)
        return DiagonalOperator(self.spin, [a * b if a and b else 0 for a, b in zip(self.diagonal, other.diagonal)])

    def scale(self, c) -> "DiagonalOperator":
        return DiagonalOperator(self.spin, [c * a for a in self.diagonal])

    @property
    def is_zero(self) -> bool:
        return not any(self.diagonal)

    def to_json(self) -> dict:
        return {
            "twoS": self.spin.twice,
            "basis": BASIS,
            "diag": [format_rational(d) for d in self.diagonal],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DiagonalOperator":
        if obj.get("basis", BASIS) != BASIS:
            raise ValueError(f"unsupported basis {obj['basis']!r}")
        return cls(SpinQuantum(HalfInt(obj["twoS"])), [parse_rational(d) for d in obj["diag"]])


def alpha(S) -> int:
    """1 for half-odd-integer spin, 0 for integer spin."""
    return SpinQuantum.of(S).twice % 2


def sz_operator(S) -> DiagonalOperator:
    S = SpinQuantum.of(S)
    return DiagonalOperator(S, S.nodes().nodes)


def projector_coefficient(q: MagneticQuantum) -> Fraction:
    """The factor ``(-1)**(S+m+alpha_S) / ((S-m)! (S+m)!)``."""
    S, m = q.S, q.m
    s_plus_m = (S.twice + m.twice) // 2
    s_minus_m = (S.twice - m.twice) // 2
    sign = -1 if (s_plus_m + alpha(S)) % 2 else 1
    return Fraction(sign, factorial(s_minus_m) * factorial(s_plus_m))


@lru_cache(maxsize=4096)
def _projector(two_s: int, two_m: int) -> Polynomial:
    q = MagneticQuantum(HalfInt(two_s), HalfInt(two_m))
    m = q.m.to_fraction()
    others = NodeSet(n for n in _nodes(two_s) if n != m)
    return node_polynomial(others).scale(projector_coefficient(q))


def projector_polynomial(q: MagneticQuantum) -> Polynomial:
    """Explicit projector onto ``|m>`` as a polynomial of degree 2S in S_z."""
    return _projector(q.S.twice, q.m.twice)


def projector_roots(q: MagneticQuantum) -> list[Fraction]:
    """Roots of the projector polynomial: every eigenvalue except ``m``."""
    m = q.m.to_fraction()
    return [n for n in _nodes(q.S.twice) if n != m]


def projector_operator(q: MagneticQuantum) -> DiagonalOperator:
    """The matrix ``|m><m|`` written down directly, without any polynomial."""
    diag = [0] * (q.S.twice + 1)
    diag[q.index] = 1
    return DiagonalOperator(SpinQuantum(q.S), diag)


def projectors(S) -> list[tuple[MagneticQuantum, Polynomial]]:
    S = SpinQuantum.of(S)
    out = []
    for m in S.spectrum():
        q = MagneticQuantum(S.S, m)
        out.append((q, projector_polynomial(q)))
    return out


def operator_function(S, values: Sequence) -> Polynomial:
    """``sum_m f(m) P_m(x)`` for ``f`` given as values in m-descending order.

    A :class:`Polynomial` may be passed instead of a value table; it is
    sampled on the spectrum first.
    """
    S = SpinQuantum.of(S)
    if isinstance(values, Polynomial):
        values = [values(n) for n in S.nodes()]
    values = [parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values]
    if len(values) != S.dim:
        raise ValueError(f"spin {S} needs {S.dim} values, got {len(values)}")
    total = Polynomial()
    for (q, p), v in zip(projectors(S), values):
        if v:
            total = total + p.scale(v)
    return total


def annihilating_polynomial(S) -> Polynomial:
    """``prod_m (x - m)`` over the spectrum of S_z."""
    return node_polynomial(SpinQuantum.of(S).nodes())


def reduce_power(S, n: int) -> Polynomial:
    """``x**n`` rewritten with degree at most 2S using the annihilating polynomial."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"power must be a nonnegative int, got {n!r}")
    return reduce_mod(Polynomial.monomial(n), annihilating_polynomial(S))


def values_on_spectrum(S, f) -> list[Fraction]:
    """Sample a callable on the spectrum, m-descending."""
    return [Fraction(f(n)) for n in SpinQuantum.of(S).nodes()]


def spectrum_interpolant(S, values: Iterable) -> Polynomial:
    """Same result as :func:`operator_function`, via generic node interpolation."""
    return interpolate(SpinQuantum.of(S).nodes(), list(values))
