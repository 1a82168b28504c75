import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinproj.exact import HalfInt
from spinproj.opcalc import (
    CHECK_NAMES,
    DenseMatrix,
    VerificationReport,
    annihilator_check,
    apply_to_state,
    completeness_check,
    eval_on_diagonal,
    eval_on_matrix,
    idempotency_check,
    kronecker_check,
    orthogonality_check,
    run_suite,
    to_dense,
)
from spinproj.poly import Polynomial
from spinproj.spin import DiagonalOperator, MagneticQuantum, SpinQuantum, projector_polynomial, sz_operator

from helpers import random_similarity

F = Fraction
X = Polynomial.x()
rats = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 9))


def proj(S, m):
    return projector_polynomial(MagneticQuantum(HalfInt.of(S), HalfInt.of(m)))


def test_eval_on_diagonal_examples():
    assert eval_on_diagonal(1 - X ** 2, sz_operator(1)).diagonal == (0, 1, 0)
    c = Polynomial.constant(F(2, 7))
    assert eval_on_diagonal(c, sz_operator("3/2")).diagonal == (F(2, 7),) * 4
    p = proj("3/2", "1/2")
    assert [p(m) for m in (F(3, 2), F(1, 2), F(-1, 2), F(-3, 2))] == [0, 1, 0, 0]
    assert eval_on_diagonal(p, sz_operator("3/2")).diagonal == (0, 1, 0, 0)


def test_eval_on_matrix_examples():
    A = DenseMatrix.from_rows([[1, 2], [F(1, 3), -4]])
    assert eval_on_matrix(X, A) == A
    assert eval_on_matrix(Polynomial.constant(1), A) == DenseMatrix.identity(2)
    assert eval_on_matrix(X ** 2 + 1, A) == A @ A + DenseMatrix.identity(2)
    with pytest.raises(ValueError):
        eval_on_matrix(X, DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_eval_on_matrix_similarity_example():
    V = DenseMatrix.from_rows([[1, 0, 0], [2, 1, 0], [-1, 3, 1]])
    # inverse of the unit lower triangular V by hand
    Vinv = DenseMatrix.from_rows([[1, 0, 0], [-2, 1, 0], [7, -3, 1]])
    assert V @ Vinv == DenseMatrix.identity(3)
    A = V @ DenseMatrix.diagonal([1, 0, -1]) @ Vinv
    assert eval_on_matrix(1 - X ** 2, A) == V @ DenseMatrix.diagonal([0, 1, 0]) @ Vinv


def test_dense_inverse():
    rng = random.Random(7)
    for n in range(1, 6):
        V, Vinv = random_similarity(n, rng)
        assert V.inverse() == Vinv
        assert V @ V.inverse() == DenseMatrix.identity(n)
    with pytest.raises(ZeroDivisionError):
        DenseMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_dense_shape_checks():
    with pytest.raises(ValueError):
        DenseMatrix(2, 2, [[1, 2]])
    with pytest.raises(ValueError):
        DenseMatrix.identity(2) @ DenseMatrix.identity(3)
    m = DenseMatrix.from_rows([[F(1, 2), -3]])
    assert DenseMatrix.from_json(m.to_json()) == m


def test_annihilator_examples():
    for S in (1, 0, "5/2"):
        assert annihilator_check(S).passed
    # direct product of the six factors (Sz - m) for S = 5/2
    sz = [F(t, 2) for t in (5, 3, 1, -1, -3, -5)]
    for d in sz:
        prod = F(1)
        for m in sz:
            prod *= d - m
        assert prod == 0


def test_projector_checks_examples():
    half = F(1, 2)
    P = eval_on_diagonal(half + X, sz_operator("1/2"))
    assert P @ P == P
    assert idempotency_check("1/2").passed
    P1 = eval_on_diagonal(proj(1, 1), sz_operator(1))
    Pm1 = eval_on_diagonal(proj(1, -1), sz_operator(1))
    assert (P1 @ Pm1).is_zero
    assert orthogonality_check(1).passed
    total = DiagonalOperator.zero("3/2")
    for m in ("3/2", "1/2", "-1/2", "-3/2"):
        total = total + eval_on_diagonal(proj("3/2", m), sz_operator("3/2"))
    assert total == DiagonalOperator.identity("3/2")
    assert completeness_check("3/2").passed
    assert kronecker_check("3/2").passed


def test_apply_to_state_examples():
    P0 = eval_on_diagonal(proj(1, 0), sz_operator(1))
    assert apply_to_state(P0, [0, 1, 0]) == [0, 1, 0]
    assert apply_to_state(P0, [1, 0, 0]) == [0, 0, 0]
    Ph = eval_on_diagonal(proj("1/2", "1/2"), sz_operator("1/2"))
    a, b = F(-13, 7), F(22, 5)
    assert apply_to_state(Ph, [a, b]) == [a, 0]
    with pytest.raises(ValueError):
        apply_to_state(P0, [1, 2])


@given(st.integers(0, 6), st.data())
def test_apply_to_state_linear(two_s, data):
    n = two_s + 1
    S = SpinQuantum(HalfInt(two_s))
    m = S.spectrum()[data.draw(st.integers(0, two_s))]
    P = eval_on_diagonal(projector_polynomial(MagneticQuantum(S.S, m)), sz_operator(S))
    u = data.draw(st.lists(rats, min_size=n, max_size=n))
    v = data.draw(st.lists(rats, min_size=n, max_size=n))
    al, be = data.draw(rats), data.draw(rats)
    lhs = apply_to_state(P, [al * x + be * y for x, y in zip(u, v)])
    rhs = [al * x + be * y for x, y in zip(apply_to_state(P, u), apply_to_state(P, v))]
    assert lhs == rhs


@given(st.lists(rats, max_size=5), st.lists(rats, max_size=5), st.integers(0, 2**32))
def test_eval_on_matrix_ring_structure(pc, qc, seed):
    p, q = Polynomial(pc), Polynomial(qc)
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    A = DenseMatrix.from_rows([[F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)])
    assert eval_on_matrix(p * q, A) == eval_on_matrix(p, A) @ eval_on_matrix(q, A)
    assert eval_on_matrix(p + q, A) == eval_on_matrix(p, A) + eval_on_matrix(q, A)


@given(st.integers(0, 5), st.lists(rats, max_size=6), st.integers(0, 2**32))
def test_similarity_covariance(two_s, coeffs, seed):
    S = SpinQuantum(HalfInt(two_s))
    p = Polynomial(coeffs[: two_s + 1])
    D = sz_operator(S)
    V, Vinv = random_similarity(S.dim, random.Random(seed))
    lhs = eval_on_matrix(p, V @ to_dense(D) @ Vinv)
    rhs = V @ to_dense(eval_on_diagonal(p, D)) @ Vinv
    assert lhs == rhs


@pytest.mark.parametrize("S", [0, "1/2", 1, "3/2", 10])
def test_run_suite_examples(S):
    report = run_suite(S)
    assert report.passed
    assert [c.name for c in report.checks] == list(CHECK_NAMES)
    assert all(c.witness is None for c in report.checks)


def _printed_three_halves(q):
    """The sign-slipped listing for S = 3/2, m = +-3/2; correct elsewhere."""
    half, three_half = F(1, 2), F(3, 2)
    if q.S.twice == 3 and abs(q.m.twice) == 3:
        sign = 1 if q.m.twice > 0 else -1
        return (half + X) * (half - X) * Polynomial([three_half, sign]) * F(1, 6)
    return projector_polynomial(q)


def test_suite_flags_printed_three_halves_listing():
    report = run_suite("3/2", projector=_printed_three_halves)
    assert not report.passed
    assert report["annihilator"].passed
    assert report["degree"].passed
    assert report["orthogonality"].passed
    assert not report["idempotency"].passed
    assert report["idempotency"].witness == "m=3/2, position=(0,0): got 1, expected -1"
    assert report["kronecker"].witness == "m=3/2, m'=3/2, position=(0,0): got -1, expected 1"
    assert report["completeness"].witness == "m=3/2, position=(0,0): got -1, expected 1"


def test_report_json_round_trip():
    report = run_suite("3/2", projector=_printed_three_halves)
    obj = report.to_json()
    assert obj["twoS"] == 3
    assert set(obj["checks"][0]) == {"name", "pass", "witness"}
    assert VerificationReport.from_json(obj) == report
