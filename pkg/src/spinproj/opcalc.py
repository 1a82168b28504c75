"""Operator evaluation and the exact verification suite.

Polynomials can be applied to operators two ways: entrywise on a
:class:`DiagonalOperator` (the eigenbasis fast path) or by Horner's rule
on a general :class:`DenseMatrix`.  The dense path exists so the fast
path can be cross-checked through similarity transforms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .exact import HalfInt, format_rational, parse_rational
from .poly import Polynomial
from .spin import (
    DiagonalOperator,
    MagneticQuantum,
    SpinQuantum,
    annihilating_polynomial,
    projector_polynomial,
    sz_operator,
)


@dataclass(frozen=True)
class DenseMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} grid")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> "DenseMatrix":
        n = len(diag)
        return cls(n, n, [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return DenseMatrix(self.rows, self.cols, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)
        ])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "DenseMatrix":
        c = Fraction(c)
        return DenseMatrix(self.rows, self.cols, [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return DenseMatrix(self.rows, other.cols, [
            [sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols]
            for r in self.entries
        ])

    def inverse(self) -> "DenseMatrix":
        """Exact inverse by Gauss-Jordan elimination."""
        if not self.is_square:
            raise ValueError("only square matrices are invertible")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return DenseMatrix(n, n, [row[n:] for row in aug])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[format_rational(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> "DenseMatrix":
        return cls(obj["rows"], obj["cols"], [[parse_rational(x) for x in r] for r in obj["entries"]])


def to_dense(D: DiagonalOperator) -> DenseMatrix:
    return DenseMatrix.diagonal(D.diagonal)


def eval_on_diagonal(p: Polynomial, D: DiagonalOperator) -> DiagonalOperator:
    return DiagonalOperator(D.spin, [p(d) for d in D.diagonal])


def eval_on_matrix(p: Polynomial, A: DenseMatrix) -> DenseMatrix:
    """Exact ``p(A)`` by Horner's rule."""
    if not A.is_square:
        raise ValueError(f"polynomial of a non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    eye = DenseMatrix.identity(n)
    acc = DenseMatrix.zeros(n, n)
    for c in reversed(p.coeffs):
        acc = acc @ A + eye.scale(c)
    return acc


def apply_to_state(P: DiagonalOperator, v: Sequence) -> list[Fraction]:
    if len(v) != P.dim:
        raise ValueError(f"state of length {len(v)} for operator of dimension {P.dim}")
    return [d * Fraction(x) for d, x in zip(P.diagonal, v)]


# --- verification suite ---------------------------------------------------

ProjectorFn = Callable[[MagneticQuantum], Polynomial]

CHECK_NAMES = ("annihilator", "idempotency", "orthogonality", "completeness", "kronecker", "degree")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": self.witness}

    @classmethod
    def from_json(cls, obj: dict) -> "CheckResult":
        return cls(obj["name"], bool(obj["pass"]), obj["witness"])


@dataclass(frozen=True)
class VerificationReport:
    spin: SpinQuantum
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"twoS": self.spin.twice, "checks": [c.to_json() for c in self.checks]}

    @classmethod
    def from_json(cls, obj: dict) -> "VerificationReport":
        return cls(SpinQuantum(HalfInt(obj["twoS"])), tuple(CheckResult.from_json(c) for c in obj["checks"]))


def evaluated_projectors(S, projector: ProjectorFn = projector_polynomial):
    """``[(q, P_m as a DiagonalOperator)]`` for every m, m-descending."""
    S = SpinQuantum.of(S)
    sz = sz_operator(S)
    out = []
    for m in S.spectrum():
        q = MagneticQuantum(S.S, m)
        out.append((q, eval_on_diagonal(projector(q), sz)))
    return out


def _first_mismatch(got: Sequence, expected: Sequence):
    for i, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return i, a, b
    return None


def _witness(m, m2, i, got, expected) -> str:
    where = f"m={m}" if m2 is None else f"m={m}, m'={m2}"
    return f"{where}, position=({i},{i}): got {format_rational(got)}, expected {format_rational(expected)}"


def annihilator_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    """``prod_m (Sz - m) = 0``; independent of the projector formula."""
    S = SpinQuantum.of(S)
    got = eval_on_diagonal(annihilating_polynomial(S), sz_operator(S))
    bad = _first_mismatch(got.diagonal, [0] * S.dim)
    if bad is None:
        return CheckResult("annihilator", True)
    i, a, b = bad
    return CheckResult("annihilator", False, _witness(S.spectrum()[i], None, i, a, b))


def idempotency_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    ops = ops or evaluated_projectors(S, projector)
    for q, P in ops:
        bad = _first_mismatch((P @ P).diagonal, P.diagonal)
        if bad:
            return CheckResult("idempotency", False, _witness(q.m, None, *bad))
    return CheckResult("idempotency", True)


def orthogonality_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    ops = ops or evaluated_projectors(S, projector)
    zeros = [0] * len(ops)
    for q, P in ops:
        for q2, P2 in ops:
            if q2.m == q.m:
                continue
            bad = _first_mismatch((P @ P2).diagonal, zeros)
            if bad:
                return CheckResult("orthogonality", False, _witness(q.m, q2.m, *bad))
    return CheckResult("orthogonality", True)


def completeness_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    S = SpinQuantum.of(S)
    ops = ops or evaluated_projectors(S, projector)
    total = DiagonalOperator.zero(S)
    for _, P in ops:
        total = total + P
    bad = _first_mismatch(total.diagonal, [1] * S.dim)
    if bad:
        return CheckResult("completeness", False, _witness(S.spectrum()[bad[0]], None, *bad))
    return CheckResult("completeness", True)


def kronecker_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    """``P_m |m'> = delta(m, m') |m>``, i.e. the polynomial is 1 at m and 0 at every other m'."""
    S = SpinQuantum.of(S)
    spectrum = S.spectrum()
    ops = ops or evaluated_projectors(S, projector)
    for k, (q, P) in enumerate(ops):
        bad = _first_mismatch(P.diagonal, [int(j == k) for j in range(S.dim)])
        if bad:
            i = bad[0]
            return CheckResult("kronecker", False, _witness(q.m, spectrum[i], *bad))
    return CheckResult("kronecker", True)


def degree_check(S, projector: ProjectorFn = projector_polynomial, ops=None) -> CheckResult:
    S = SpinQuantum.of(S)
    for m in S.spectrum():
        p = projector(MagneticQuantum(S.S, m))
        if p.degree != S.twice:
            return CheckResult("degree", False, f"m={m}: degree {p.degree}, expected {S.twice}")
    return CheckResult("degree", True)


_CHECKS = (annihilator_check, idempotency_check, orthogonality_check,
           completeness_check, kronecker_check, degree_check)


def run_suite(S, projector: ProjectorFn = projector_polynomial) -> VerificationReport:
    """Run every check for spin ``S``; ``projector`` can be swapped to audit other formulas."""
    S = SpinQuantum.of(S)
    ops = evaluated_projectors(S, projector)
    return VerificationReport(S, tuple(check(S, projector, ops) for check in _CHECKS))
