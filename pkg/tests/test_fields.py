import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spweil.fields import (CyclotomicContext, ExtensionFieldContext, FieldSpec,
                           InvalidFieldSpec, PrimeFieldContext,
                           find_irreducible_polynomial, is_irreducible, legendre,
                           make_field, parse_field_spec)

ALL_CTXS = [
    FieldSpec("cyclotomic", 3),
    FieldSpec("cyclotomic", 5),
    FieldSpec("auto-prime", 3),
    FieldSpec("auto-prime", 5),
    FieldSpec("auto-prime", 7),
    FieldSpec("auto-char2", 3),
    FieldSpec("auto-char2", 5),
]


def _elements(ctx, draw_ints):
    """Build a deterministic element from a list of integers."""
    if ctx.kind == "prime":
        return draw_ints[0] % ctx.p
    if ctx.kind == "extension":
        return tuple(x % ctx.p for x in draw_ints[:ctx.k]) + (0,) * max(0, ctx.k - len(draw_ints))
    nums = [x % 19 - 9 for x in draw_ints[:ctx.r - 1]]
    nums += [0] * (ctx.r - 1 - len(nums))
    den = abs(draw_ints[-1]) % 6 + 1
    return ctx._norm(nums, den)


@pytest.mark.parametrize("spec", ALL_CTXS, ids=str)
@given(ints=st.lists(st.integers(-50, 50), min_size=13, max_size=13))
@settings(max_examples=60, deadline=None)
def test_field_axioms(spec, ints):
    ctx = make_field(spec)
    x = _elements(ctx, ints[:5])
    y = _elements(ctx, ints[4:9])
    z = _elements(ctx, ints[8:13])
    assert ctx.add(ctx.add(x, y), z) == ctx.add(x, ctx.add(y, z))
    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.add(x, y) == ctx.add(y, x)
    assert ctx.mul(x, y) == ctx.mul(y, x)
    assert ctx.sub(x, x) == ctx.zero
    if x != ctx.zero:
        assert ctx.mul(x, ctx.inv(x)) == ctx.one


@pytest.mark.parametrize("spec", ALL_CTXS, ids=str)
def test_root_of_unity_invariants(spec):
    ctx = make_field(spec)
    r = ctx.r
    theta = ctx.theta
    assert ctx.pow(theta, r) == ctx.one
    for j in range(1, r):
        assert ctx.pow(theta, j) != ctx.one or j == 0
    total = ctx.zero
    for j in range(r):
        total = ctx.add(total, ctx.theta_pow[j])
    assert total == ctx.zero
    # theta^n reduces to theta^(n mod r)
    assert ctx.pow(theta, r + 2) == ctx.theta_pow[2]
    assert ctx.pow(theta, 5 * r + 1) == theta


@pytest.mark.parametrize("spec", ALL_CTXS, ids=str)
def test_make_field_deterministic(spec):
    a = make_field(spec)
    b = make_field(spec)
    assert a.theta == b.theta
    assert a.spec_json() == b.spec_json()


def test_auto_prime_resolution():
    # smallest p = 1 (mod r); theta = (smallest primitive root)^((p-1)/r)
    ctx = make_field(FieldSpec("auto-prime", 3))
    assert ctx.p == 7 and ctx.theta == 2  # 3^2 = 2 mod 7; 2^3 = 8 = 1
    assert pow(2, 3, 7) == 1 and 2 != 1
    ctx = make_field(FieldSpec("auto-prime", 5))
    assert ctx.p == 11 and ctx.theta == 4
    assert pow(4, 5, 11) == 1
    assert all(pow(4, j, 11) != 1 for j in range(1, 5))
    assert make_field(FieldSpec("auto-prime", 7)).p == 29
    assert make_field(FieldSpec("auto-prime", 11)).p == 23
    assert make_field(FieldSpec("auto-prime", 13)).p == 53


def test_auto_char2_resolution():
    ctx = make_field(FieldSpec("auto-char2", 3))
    assert (ctx.p, ctx.k) == (2, 2)
    assert ctx.modulus == (1, 1, 1)  # x^2 + x + 1
    assert ctx.theta == (0, 1)       # the adjoined root
    assert (2 ** 2 - 1) % 3 == 0
    ctx = make_field(FieldSpec("auto-char2", 5))
    assert (ctx.p, ctx.k) == (2, 4)
    ctx = make_field(FieldSpec("auto-char2", 7))
    assert (ctx.p, ctx.k) == (2, 3)


def test_invalid_specs():
    with pytest.raises(InvalidFieldSpec):
        make_field(FieldSpec("prime", 3, p=5))  # 3 does not divide 4
    with pytest.raises(InvalidFieldSpec):
        make_field(FieldSpec("cyclotomic", 4))  # not prime
    with pytest.raises(InvalidFieldSpec):
        make_field(FieldSpec("cyclotomic", 2))  # not odd
    with pytest.raises(InvalidFieldSpec):
        make_field(FieldSpec("extension", 3, p=3, k=2))  # char = r
    with pytest.raises(InvalidFieldSpec):
        # x^2 + 1 = (x+1)^2 over GF(2)
        make_field(FieldSpec("extension", 3, p=2, k=2, modulus=(1, 0, 1)))


def test_find_irreducible_polynomial():
    assert find_irreducible_polynomial(2, 2) == (1, 1, 1)
    assert find_irreducible_polynomial(2, 1) == (0, 1)  # x, degree-1 convention
    assert find_irreducible_polynomial(2, 4) == (1, 1, 0, 0, 1)  # x^4 + x + 1
    for p, k in [(2, 3), (3, 2), (5, 2), (2, 8)]:
        f = find_irreducible_polynomial(p, k)
        assert len(f) == k + 1 and f[-1] == 1
        assert is_irreducible(f, p)


def test_legendre():
    assert legendre(2, 3) == -1
    assert legendre(2, 7) == 1
    assert legendre(0, 5) == 0
    # Euler criterion cross-check: count the squares mod 11
    squares = {(x * x) % 11 for x in range(1, 11)}
    for a in range(1, 11):
        assert legendre(a, 11) == (1 if a in squares else -1)


@pytest.mark.parametrize("spec", ALL_CTXS, ids=str)
def test_serialization_roundtrip(spec):
    ctx = make_field(spec)
    samples = [ctx.zero, ctx.one, ctx.theta, ctx.neg(ctx.theta),
               ctx.mul(ctx.theta, ctx.theta), ctx.inv(ctx.from_int(ctx.r))]
    for x in samples:
        assert ctx.parse_elem(ctx.serialize_elem(x)) == x


def test_cyclotomic_serialization_format(cyc3):
    lam = cyc3.mul(cyc3.sub(cyc3.mul(cyc3.theta, cyc3.theta), cyc3.theta),
                   cyc3.inv(cyc3.from_int(3)))
    assert cyc3.serialize_elem(lam) == ["-1/3", "-2/3"]
    assert cyc3.serialize_elem(cyc3.one) == ["1/1", "0/1"]


def test_extension_field_arithmetic(gf4):
    x = gf4.theta
    # GF(4): x^2 = x + 1, x^3 = 1
    assert gf4.mul(x, x) == (1, 1)
    assert gf4.pow(x, 3) == gf4.one
    assert gf4.inv(x) == gf4.mul(x, x)


def test_parse_field_spec():
    assert parse_field_spec("cyclotomic", 3).kind == "cyclotomic"
    assert parse_field_spec("auto-prime", 3).kind == "auto-prime"
    assert parse_field_spec("gf2-auto", 3).kind == "auto-char2"
    spec = parse_field_spec("gf:7", 3)
    assert spec.kind == "prime" and spec.p == 7
    spec = parse_field_spec("gf:4", 3)
    assert spec.kind == "extension" and (spec.p, spec.k) == (2, 2)
    spec = parse_field_spec("gf:2^4", 5)
    assert spec.kind == "extension" and (spec.p, spec.k) == (2, 4)
    with pytest.raises(InvalidFieldSpec):
        parse_field_spec("gf:12", 3)
    with pytest.raises(InvalidFieldSpec):
        parse_field_spec("nonsense", 3)
