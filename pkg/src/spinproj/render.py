"""Text and LaTeX rendering of polynomials, factored projectors and diagonals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import format_rational, parse_rational
from .poly import Polynomial

TEXT_SZ = "Sz"
LATEX_SZ = r"\hat S_z"


def latex_rational(c: Fraction) -> str:
    c = Fraction(c)
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return rf"{sign}\frac{{{c.numerator}}}{{{c.denominator}}}"


def _power(var: str, k: int, latex: bool) -> str:
    if k == 1:
        return var
    return f"{var}^{{{k}}}" if latex else f"{var}^{k}"


def render_poly(p: Polynomial, var: str = "x", latex: bool = False) -> str:
    """Expanded form in ascending powers, e.g. ``1 - Sz^2``."""
    if p.is_zero:
        return "0"
    num = latex_rational if latex else format_rational
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = num(mag)
        elif mag == 1:
            body = _power(var, k, latex)
        else:
            sep = r"\," if latex else " "
            body = f"{num(mag)}{sep}{_power(var, k, latex)}"
        terms.append((c < 0, body))
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += f" {'-' if neg else '+'} {body}"
    return out


@dataclass(frozen=True)
class Factor:
    """The linear factor ``const + xsign * x``."""

    const: Fraction
    xsign: int

    def poly(self) -> Polynomial:
        return Polynomial([self.const, self.xsign])


@dataclass(frozen=True)
class Factored:
    """``scale * prod(factors)``; a rendering of a polynomial with known roots."""

    scale: Fraction
    factors: tuple[Factor, ...]

    def expand(self) -> Polynomial:
        p = Polynomial.constant(self.scale)
        for f in self.factors:
            p = p * f.poly()
        return p

    def to_json(self) -> dict:
        return {
            "scale": format_rational(self.scale),
            "factors": [{"const": format_rational(f.const), "x": f.xsign} for f in self.factors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Factored":
        return cls(parse_rational(obj["scale"]),
                   tuple(Factor(parse_rational(f["const"]), int(f["x"])) for f in obj["factors"]))


def factor_from_roots(leading: Fraction, roots: Sequence[Fraction]) -> Factored:
    """Write ``leading * prod(x - r)`` with signs absorbed into the factors.

    Roots ``+a, -a`` become the pair ``(a + x)(a - x)``, which costs a
    sign.  A remaining ``(x - a)`` is preferably written ``(a - x)``,
    giving up one pair when the overall sign needs it.
    """
    leading = Fraction(leading)
    remaining = [Fraction(r) for r in roots]
    pairs = []
    for r in sorted({r for r in remaining if r > 0}, reverse=True):
        if -r in remaining:
            remaining.remove(r)
            remaining.remove(-r)
            pairs.append(r)
    remaining.sort(key=lambda r: (r != 0, -abs(r), r))
    unpaired = [Factor(-r, 1) for r in remaining]
    negative = (leading < 0) != (len(pairs) % 2 == 1)
    broken = 0

    def flippable():
        return [i for i, f in enumerate(unpaired) if f.xsign > 0 and f.const < 0]

    if negative and flippable():
        i = flippable()[0]
        unpaired[i] = Factor(-unpaired[i].const, -1)
        negative = False
    elif negative and pairs:
        broken, negative = 1, False
    # flipping one (x - a) and breaking one pair leaves the sign unchanged
    while flippable() and broken < len(pairs):
        i = flippable()[0]
        unpaired[i] = Factor(-unpaired[i].const, -1)
        broken += 1
    factors = []
    for k, a in enumerate(pairs):
        if k < broken:
            factors += [Factor(a, 1), Factor(-a, 1)]
        else:
            factors += [Factor(a, 1), Factor(a, -1)]
    zero = [f for f in unpaired if f.const == 0]
    rest = [f for f in unpaired if f.const != 0]
    scale = -abs(leading) if negative else abs(leading)
    return Factored(scale, tuple(zero + factors + rest))


def _render_factor(f: Factor, var: str, latex: bool, x_first: bool) -> str:
    num = latex_rational if latex else format_rational
    if f.const == 0:
        return var if f.xsign > 0 else f"(-{var})"
    c = num(abs(f.const))
    if f.xsign < 0:
        return f"({num(f.const)} - {var})"
    if f.const < 0:
        return f"({var} - {c})"
    return f"({var} + {c})" if x_first else f"({c} + {var})"


def render_factored(fp: Factored, var: str = "x", latex: bool = False) -> str:
    """Factored form like ``1/2 (3/2 + Sz)(3/2 - Sz)(1/2 + Sz)``.

    ``(a + x)`` is written ``(x + a)`` next to a bare ``x`` factor or a
    ``(x - a)`` partner, so broken pairs read ``(x + a)(x - a)``.
    """
    if len(fp.factors) <= 1:
        return render_poly(fp.expand(), var, latex)
    has_x = any(f.const == 0 for f in fp.factors)
    minus = {f.const for f in fp.factors if f.xsign > 0 and f.const < 0}
    body = "".join(
        _render_factor(f, var, latex, x_first=has_x or -f.const in minus)
        for f in fp.factors
    )
    prefix = "-" if fp.scale < 0 else ""
    mag = abs(fp.scale)
    if mag != 1:
        sep = r"\," if latex else " "
        prefix += (latex_rational(mag) if latex else format_rational(mag)) + sep
    return prefix + body


def render_diag(diag: Sequence[Fraction], latex: bool = False) -> str:
    if latex:
        return r"\operatorname{diag}(" + ", ".join(latex_rational(d) for d in diag) + ")"
    return "diag(" + ", ".join(format_rational(d) for d in diag) + ")"
