"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending order, ``coeffs[i]`` multiplying
``x**i``, with trailing zeros stripped so that equal polynomials compare
equal.  The zero polynomial has an empty coefficient tuple and degree
``-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import format_rational, parse_rational

ZERO_DEGREE = float("-inf")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        return cls([0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = Polynomial.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(c * a for a in self.coeffs)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self._eval_rational(Fraction(x))
        # Horner; x may be anything supporting + and * with Fractions
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _eval_rational(self, x: Fraction) -> Fraction:
        # integer Horner: with x = a/b and coeffs n_i/L,
        # L * b**d * p(x) = sum_i n_i * a**i * b**(d-i)
        if not self.coeffs:
            return Fraction(0)
        L = math.lcm(*(c.denominator for c in self.coeffs))
        a, b = x.numerator, x.denominator
        acc, bpow = 0, 1
        for c in reversed(self.coeffs):
            acc = acc * a + c.numerator * (L // c.denominator) * bpow
            bpow *= b
        return Fraction(acc, L * bpow // b)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        coeffs = [parse_rational(c) for c in obj["coeffs"]]
        if coeffs and coeffs[-1] == 0:
            raise ValueError("non-canonical polynomial: trailing zero coefficient")
        return cls(coeffs)


def _coerce(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial.constant(p)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_eval(p: Polynomial, x) -> Fraction:
    return p(x)


def poly_divmod(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division: ``p == q*d + r`` with ``deg r < deg d``."""
    p, d = _coerce(p), _coerce(d)
    if d.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dn = len(d.coeffs)
    if len(rem) < dn:
        return Polynomial(), p
    quot = [Fraction(0)] * (len(rem) - dn + 1)
    lead = d.coeffs[-1]
    for k in range(len(rem) - dn, -1, -1):
        c = rem[k + dn - 1] / lead
        quot[k] = c
        if c:
            for j, dc in enumerate(d.coeffs):
                rem[k + j] -= c * dc
    return Polynomial(quot), Polynomial(rem[: dn - 1])


def reduce_mod(p: Polynomial, d: Polynomial) -> Polynomial:
    return poly_divmod(p, d)[1]


@dataclass(frozen=True)
class NodeSet:
    """Ordered, pairwise distinct interpolation nodes."""

    nodes: tuple[Fraction, ...]

    def __init__(self, nodes: Iterable):
        nodes = tuple(parse_rational(n) if isinstance(n, str) else Fraction(n) for n in nodes)
        if len(set(nodes)) != len(nodes):
            seen = set()
            dup = next(n for n in nodes if n in seen or seen.add(n))
            raise ValueError(f"duplicate interpolation node {dup}")
        object.__setattr__(self, "nodes", nodes)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, k):
        return self.nodes[k]

    def index(self, node) -> int:
        return self.nodes.index(Fraction(node))


def _linear_product(roots: Iterable[Fraction]) -> Polynomial:
    out = [Fraction(1)]
    for r in roots:
        # multiply by (x - r) in place
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] += c
            nxt[i] -= r * c
        out = nxt
    return Polynomial(out)


def node_polynomial(ns: NodeSet) -> Polynomial:
    """Monic ``prod (x - x_l)`` over the nodes; ``1`` when there are none."""
    return _linear_product(ns)


def lagrange_basis(ns: NodeSet, k: int) -> Polynomial:
    """Polynomial equal to 1 at node ``k`` and 0 at every other node."""
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k < len(ns):
        raise IndexError(f"node index {k} out of range for {len(ns)} nodes")
    xk = ns[k]
    others = [x for i, x in enumerate(ns) if i != k]
    denom = Fraction(1)
    for x in others:
        denom *= xk - x
    return _linear_product(others).scale(1 / denom)


def interpolate(ns: NodeSet, values: Sequence) -> Polynomial:
    """Lagrange interpolant of degree ``<= len(ns) - 1`` through ``(ns[k], values[k])``."""
    if len(values) != len(ns):
        raise ValueError(f"{len(values)} values for {len(ns)} nodes")
    total = Polynomial()
    for k, v in enumerate(values):
        v = Fraction(v)
        if v:
            total = total + lagrange_basis(ns, k).scale(v)
    return total
