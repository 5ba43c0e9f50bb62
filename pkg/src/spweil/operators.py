"""Structured invertible operators on the r^ell dimensional space W.

The basis of W is indexed by vectors xi = (xi_1, ..., xi_ell) with entries in
[0, r); the flat position of xi is sum(xi_t * r^(ell-t)), i.e. xi_1 is the
most significant digit.  With that convention the slot-t tensor factor of an
r x r matrix M is literally I_{r^(t-1)} (x) M (x) I_{r^(ell-t)}.

Operator variants:

* MonomialOp   -- permutation times diagonal, stored as flat tables;
* FourierOp    -- the discrete Fourier kernel theta^(i*xi) in one tensor
                  slot, times a scalar;
* ScalarOp     -- c * I;
* DenseOp      -- arbitrary invertible DenseMatrix;
* ProductOp    -- composition, factors applied right to left.

apply() costs O(n) for monomial/scalar operators and O(n*r) for a Fourier
factor.  materialize() returns the DenseMatrix whose column xi is
apply(e_xi).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fields import FieldContext
from .linalg import DenseMatrix


@dataclass(frozen=True)
class WeilParams:
    """Size parameters: odd prime r, number of tensor slots ell, coefficient field."""

    r: int
    ell: int
    ctx: FieldContext

    @property
    def n(self):
        return self.r ** self.ell

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.ctx.r != self.r:
            raise ValueError("field context was built for a different r")


def index_vectors(r, ell):
    """All index vectors in flat order."""
    return list(itertools.product(range(r), repeat=ell))


def flat_index(xi, r):
    idx = 0
    for x in xi:
        idx = idx * r + x
    return idx


class Operator:
    __slots__ = ("params",)

    def __init__(self, params):
        self.params = params

    @property
    def n(self):
        return self.params.n

    @property
    def ctx(self):
        return self.params.ctx

    def apply(self, vec):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def __mul__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        left = self.factors if isinstance(self, ProductOp) else (self,)
        right = other.factors if isinstance(other, ProductOp) else (other,)
        return ProductOp(self.params, left + right)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return identity_op(self.params)
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def materialize(self):
        cols = []
        zero = self.ctx.zero
        one = self.ctx.one
        n = self.n
        basis = [zero] * n
        for j in range(n):
            basis[j] = one
            cols.append(self.apply(basis))
            basis[j] = zero
        return DenseMatrix.from_columns(self.ctx, cols)


class ScalarOp(Operator):
    __slots__ = ("c",)

    def __init__(self, params, c):
        super().__init__(params)
        self.c = c

    def apply(self, vec):
        c = self.c
        ctx = self.ctx
        if c == ctx.one:
            return list(vec)
        mul = ctx.mul
        return [mul(c, v) for v in vec]

    def inverse(self):
        return ScalarOp(self.params, self.ctx.inv(self.c))


def identity_op(params):
    return ScalarOp(params, params.ctx.one)


class MonomialOp(Operator):
    """out[perm[j]] = diag[j] * v[j]; perm and diag are flat tables."""

    __slots__ = ("perm", "diag")

    def __init__(self, params, perm, diag):
        super().__init__(params)
        self.perm = tuple(perm)
        self.diag = tuple(diag)

    @classmethod
    def from_affine(cls, params, eps, shift, diag_fn=None):
        """Permutation xi -> eps*xi + shift (coordinatewise mod r) with
        diagonal entry diag_fn(xi); eps is +1 or -1."""
        r, ell = params.r, params.ell
        one = params.ctx.one
        shift = tuple(shift) if shift is not None else (0,) * ell
        perm = []
        diag = []
        for xi in itertools.product(range(r), repeat=ell):
            target = tuple((eps * x + s) % r for x, s in zip(xi, shift))
            perm.append(flat_index(target, r))
            diag.append(one if diag_fn is None else diag_fn(xi))
        return cls(params, perm, diag)

    def apply(self, vec):
        ctx = self.ctx
        out = [ctx.zero] * self.n
        mul = ctx.mul
        one = ctx.one
        for j, (p, d) in enumerate(zip(self.perm, self.diag)):
            v = vec[j]
            out[p] = v if d == one else mul(d, v)
        return out

    def compose(self, other):
        """self after other (= self * other as matrices), staying monomial."""
        ctx = self.ctx
        mul = ctx.mul
        p1, d1 = other.perm, other.diag
        p2, d2 = self.perm, self.diag
        perm = [p2[p] for p in p1]
        diag = [mul(d2[p], d) for p, d in zip(p1, d1)]
        return MonomialOp(self.params, perm, diag)

    def inverse(self):
        ctx = self.ctx
        n = self.n
        perm_inv = [0] * n
        diag_inv = [ctx.zero] * n
        inv = ctx.inv
        for j, (p, d) in enumerate(zip(self.perm, self.diag)):
            perm_inv[p] = j
            diag_inv[p] = inv(d)
        return MonomialOp(self.params, perm_inv, diag_inv)

    def materialize(self):
        ctx = self.ctx
        zero = ctx.zero
        n = self.n
        rows = [[zero] * n for _ in range(n)]
        for j, (p, d) in enumerate(zip(self.perm, self.diag)):
            rows[p][j] = d
        return DenseMatrix(ctx, rows)

    def det(self):
        """Determinant: permutation sign times the product of diagonal entries."""
        ctx = self.ctx
        acc = ctx.one
        for d in self.diag:
            acc = ctx.mul(acc, d)
        seen = [False] * self.n
        transpositions = 0
        for start in range(self.n):
            if not seen[start]:
                length = 0
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = self.perm[j]
                    length += 1
                transpositions += length - 1
        return ctx.neg(acc) if transpositions % 2 else acc


class FourierOp(Operator):
    """scale * C_t, where C_t v_xi = sum_i theta^(i*xi_t) v_(xi with slot t = i)."""

    __slots__ = ("t", "scale", "_table")

    def __init__(self, params, t, scale=None):
        super().__init__(params)
        if not 1 <= t <= params.ell:
            raise ValueError("slot out of range")
        self.t = t
        ctx = params.ctx
        self.scale = ctx.one if scale is None else scale
        mul = ctx.mul
        powers = ctx.theta_pow
        r = params.r
        # row i of the scaled kernel: scale * theta^(i*x) for x in [0, r)
        self._table = [[mul(self.scale, powers[(i * x) % r]) for x in range(r)]
                       for i in range(r)]

    def apply(self, vec):
        ctx = self.ctx
        r = self.params.r
        n = self.n
        stride = r ** (self.params.ell - self.t)
        block = stride * r
        out = [ctx.zero] * n
        table = self._table
        zero = ctx.zero
        if ctx.kind == "prime":
            p = ctx.p
            for base in range(0, n, block):
                for off in range(base, base + stride):
                    vals = vec[off:off + block:stride]
                    for i in range(r):
                        row = table[i]
                        out[off + i * stride] = sum(
                            row[x] * v for x, v in enumerate(vals) if v) % p
            return out
        add, mul = ctx.add, ctx.mul
        for base in range(0, n, block):
            for off in range(base, base + stride):
                vals = vec[off:off + block:stride]
                for i in range(r):
                    row = table[i]
                    acc = zero
                    for x, v in enumerate(vals):
                        if v != zero:
                            acc = add(acc, mul(row[x], v))
                    out[off + i * stride] = acc
        return out

    def inverse(self):
        # C_t^2 = r * N_t with N_t negating slot t, so C_t^-1 = r^-1 * N_t * C_t
        params = self.params
        ctx = self.ctx
        scale = ctx.mul(ctx.inv(self.scale), ctx.inv(ctx.from_int(params.r)))
        neg_slot = negation_monomial(params, self.t)
        return ProductOp(params, (neg_slot, FourierOp(params, self.t, scale)))


def negation_monomial(params, t=None):
    """xi -> -xi in slot t (all slots when t is None), trivial diagonal."""
    r, ell = params.r, params.ell
    perm = []
    for xi in itertools.product(range(r), repeat=ell):
        target = tuple(-x % r if (t is None or i == t - 1) else x
                       for i, x in enumerate(xi))
        perm.append(flat_index(target, r))
    one = params.ctx.one
    return MonomialOp(params, perm, [one] * params.n)


class DenseOp(Operator):
    __slots__ = ("mat",)

    def __init__(self, params, mat):
        super().__init__(params)
        self.mat = mat

    def apply(self, vec):
        return self.mat.apply(vec)

    def inverse(self):
        return DenseOp(self.params, self.mat.inverse())

    def materialize(self):
        return self.mat


class ProductOp(Operator):
    __slots__ = ("factors",)

    def __init__(self, params, factors):
        super().__init__(params)
        self.factors = tuple(factors)

    def apply(self, vec):
        for f in reversed(self.factors):
            vec = f.apply(vec)
        return list(vec)

    def inverse(self):
        return ProductOp(self.params, tuple(f.inverse() for f in reversed(self.factors)))

    def materialize(self):
        if not self.factors:
            return DenseMatrix.identity(self.ctx, self.n)
        cols = self.factors[-1].materialize().columns()
        for f in self.factors[-2::-1]:
            cols = [f.apply(col) for col in cols]
        return DenseMatrix.from_columns(self.ctx, cols)


def operators_equal(op1, op2):
    """Exact equality, decided on basis vectors."""
    if op1.n != op2.n:
        return False
    n = op1.n
    zero, one = op1.ctx.zero, op1.ctx.one
    basis = [zero] * n
    for j in range(n):
        basis[j] = one
        if op1.apply(basis) != op2.apply(basis):
            return False
        basis[j] = zero
    return True


def first_operator_difference(op1, op2):
    """(column, row, value1, value2) of the first disagreement, or None."""
    n = op1.n
    zero, one = op1.ctx.zero, op1.ctx.one
    basis = [zero] * n
    for j in range(n):
        basis[j] = one
        a = op1.apply(basis)
        b = op2.apply(basis)
        basis[j] = zero
        if a != b:
            for i in range(n):
                if a[i] != b[i]:
                    return (j, i, a[i], b[i])
    return None
