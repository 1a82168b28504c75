"""Shared exact-matrix helpers for tests (independent of DenseMatrix.inverse)."""

import random
from fractions import Fraction

from spinproj.opcalc import DenseMatrix


def unit_lower(n, rng, spread=3):
    return [[Fraction(1) if i == j else Fraction(rng.randint(-spread, spread)) if j < i else Fraction(0)
             for j in range(n)] for i in range(n)]


def transpose(rows):
    return [list(r) for r in zip(*rows)]


def invert_unit_lower(L):
    """Forward substitution, column by column."""
    n = len(L)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for c in range(n):
        for i in range(n):
            s = Fraction(int(i == c))
            for k in range(i):
                s -= L[i][k] * inv[k][c]
            inv[i][c] = s
    return inv


def matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))]
            for i in range(len(A))]


def random_similarity(n, rng: random.Random):
    """Return (V, V^-1) with V = L U, both unit triangular with small integer entries."""
    L = unit_lower(n, rng)
    U = transpose(unit_lower(n, rng))
    V = matmul(L, U)
    Vinv = matmul(transpose(invert_unit_lower(transpose(U))), invert_unit_lower(L))
    return DenseMatrix.from_rows(V), DenseMatrix.from_rows(Vinv)
