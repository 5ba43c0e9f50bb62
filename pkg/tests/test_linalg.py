import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spweil.fields import FieldSpec, make_field
from spweil.linalg import DenseMatrix, SingularMatrix
from spweil.operators import WeilParams
from spweil.generators import op_A, op_C, op_D


def _random_matrix(ctx, n, rng):
    if ctx.kind == "prime":
        return DenseMatrix(ctx, [[rng.randrange(ctx.p) for _ in range(n)]
                                 for _ in range(n)])
    return DenseMatrix(ctx, [[ctx.from_int(rng.randrange(-4, 5)) for _ in range(n)]
                             for _ in range(n)])


def test_identity_and_trace(gf7):
    eye = DenseMatrix.identity(gf7, 4)
    assert eye.det() == gf7.one
    assert eye.trace() == gf7.from_int(4)


def test_det_of_C_over_gf7(gf7):
    # independent 3x3 elimination oracle: expansion by the first row
    params = WeilParams(3, 1, gf7)
    C = op_C(params, 1).materialize()
    rows = C.rows
    # cofactor expansion, all arithmetic mod 7
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    cof = (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % 7
    assert cof == 6
    assert C.det() == 6
    # consistency: det(C)^2 = (-1) * 3^3 mod 7
    assert (6 * 6) % 7 == (-27) % 7


def test_det_multiplicative(gf7, cyc3):
    for ctx in (gf7, cyc3):
        rng = random.Random(11)
        for _ in range(10):
            a = _random_matrix(ctx, 3, rng)
            b = _random_matrix(ctx, 3, rng)
            assert (a * b).det() == ctx.mul(a.det(), b.det())


def test_inverse_contract(gf7, cyc3):
    rng = random.Random(5)
    for ctx in (gf7, cyc3):
        eye = DenseMatrix.identity(ctx, 3)
        found = 0
        while found < 5:
            m = _random_matrix(ctx, 3, rng)
            if m.det() == ctx.zero:
                continue
            found += 1
            assert m.inverse() * m == eye
            assert m * m.inverse() == eye


def test_singular_matrix_raises(gf7):
    m = DenseMatrix(gf7, [[1, 2], [2, 4]])
    assert m.det() == 0
    with pytest.raises(SingularMatrix):
        m.inverse()


def test_kron_identity(gf7):
    m = DenseMatrix(gf7, [[1, 2], [3, 4]])
    eye1 = DenseMatrix.identity(gf7, 1)
    assert eye1.kron(m) == m
    assert m.kron(eye1) == m


def test_kron_matches_tensor_slots(gf7):
    # kron(A, I_3) = materialize(A_1) and kron(I_3, A) = materialize(A_2) at l=2
    p1 = WeilParams(3, 1, gf7)
    p2 = WeilParams(3, 2, gf7)
    A = op_A(p1, 1).materialize()
    eye3 = DenseMatrix.identity(gf7, 3)
    assert A.kron(eye3) == op_A(p2, 1).materialize()
    assert eye3.kron(A) == op_A(p2, 2).materialize()
    C = op_C(p1, 1).materialize()
    assert C.kron(eye3) == op_C(p2, 1).materialize()
    assert eye3.kron(C) == op_C(p2, 2).materialize()


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_kron_associative(seed):
    ctx = make_field(FieldSpec("auto-prime", 3))
    rng = random.Random(seed)
    a = _random_matrix(ctx, 2, rng)
    b = _random_matrix(ctx, 2, rng)
    c = _random_matrix(ctx, 2, rng)
    assert a.kron(b).kron(c) == a.kron(b.kron(c))


def test_kron_mixed_context_rejected(gf7, gf11):
    a = DenseMatrix.identity(gf7, 2)
    b = DenseMatrix.identity(gf11, 2)
    with pytest.raises(ValueError):
        a.kron(b)
    with pytest.raises(ValueError):
        a * b


def test_det_D12_is_one(gf7, cyc3):
    for ctx in (gf7, cyc3):
        params = WeilParams(3, 2, ctx)
        D = op_D(params, 1, 2).materialize()
        assert D.det() == ctx.one


def test_apply_matches_columns(cyc3):
    params = WeilParams(3, 1, cyc3)
    C = op_C(params, 1).materialize()
    v = [cyc3.one, cyc3.theta, cyc3.zero]
    out = C.apply(v)
    cols = C.columns()
    expect = [cyc3.add(cols[0][i], cyc3.mul(cyc3.theta, cols[1][i])) for i in range(3)]
    assert out == expect
