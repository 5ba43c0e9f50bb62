"""The extraspecial group R inside GL(W) and the projection to Sp(2l, r).

Every element of R has the canonical form theta^c * B^b * A^a (exponent
vectors a, b of length l), acting on basis vectors by

    v_xi -> theta^(c + a.xi) v_(xi + b).

The group commutator descends to the alternating form

    b((a, b), (a', b')) = a.b' - a'.b  (mod r)

on R/Z(R), and conjugation by an element of GL(W) normalising R defines the
projection pi onto Sp(2l, r), written in the interleaved hyperbolic basis
(image of A_1, image of B_1, ...).  Ker pi = R*Z with Z the scalars, so
recognition of conjugates is performed modulo scalars.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import op_A, op_B
from .linalg import DenseMatrix, SingularMatrix
from .operators import (MonomialOp, Operator, ProductOp, WeilParams,
                        flat_index, index_vectors)
from .symplectic import SpMatrix


class RecognitionError(ValueError):
    pass


class NotMonomial(RecognitionError):
    pass


class NotCharacterDiagonal(RecognitionError):
    pass


class NotThetaPower(RecognitionError):
    pass


class DoesNotNormalize(ValueError):
    pass


@dataclass(frozen=True)
class ExtraspecialElement:
    """Canonical form theta^c * B^b * A^a; c in [0, r), a and b length-l
    exponent vectors mod r."""

    c: int
    a: tuple
    b: tuple

    def coset_vector(self):
        """Image in R/Z(R), interleaved as (a_1, b_1, a_2, b_2, ...)."""
        out = []
        for x, y in zip(self.a, self.b):
            out.extend((x, y))
        return tuple(out)


def realize(elem, params):
    """The monomial operator of theta^c B^b A^a."""
    r = params.r
    powers = params.ctx.theta_pow
    a, b, c = elem.a, elem.b, elem.c
    return MonomialOp.from_affine(
        params, 1, b,
        lambda xi: powers[(c + sum(ai * x for ai, x in zip(a, xi))) % r])


def comm_exponent(x, y, r):
    """Exponent of theta in [x, y]: a_x.b_y - a_y.b_x mod r."""
    acc = sum(ax * by for ax, by in zip(x.a, y.b))
    acc -= sum(ay * bx for ay, bx in zip(y.a, x.b))
    return acc % r


def recognize(mat, params, mod_scalars=False):
    """Read theta^c B^b A^a off a matrix.

    With mod_scalars=True the overall scalar need not be a theta power
    (recognition in R*Z modulo scalars; the returned c is 0).
    """
    r, ell, ctx = params.r, params.ell, params.ctx
    n = params.n
    zero = ctx.zero
    rows = mat.rows
    if len(rows) != n or len(rows[0]) != n:
        raise NotMonomial(f"matrix is {len(rows)}x{len(rows[0])}, expected {n}x{n}")
    support = [None] * n
    values = [None] * n
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v != zero:
                if support[j] is not None:
                    raise NotMonomial(f"column {j} has more than one nonzero entry")
                support[j] = i
                values[j] = v
    if any(s is None for s in support):
        raise NotMonomial("zero column")

    vecs = index_vectors(r, ell)
    b = vecs[support[0]]
    for j, xi in enumerate(vecs):
        if support[j] != flat_index(tuple((x + s) % r for x, s in zip(xi, b)), r):
            raise NotMonomial("support pattern is not a coordinate translation")

    s0 = values[0]
    s0_inv = ctx.inv(s0)
    a = []
    for m in range(ell):
        unit = r ** (ell - 1 - m)
        e = ctx.dlog_theta(ctx.mul(values[unit], s0_inv))
        if e is None:
            raise NotCharacterDiagonal(
                f"slot {m + 1} ratio is not a power of theta")
        a.append(e)
    for j, xi in enumerate(vecs):
        expo = sum(am * x for am, x in zip(a, xi)) % r
        if values[j] != ctx.mul(s0, ctx.theta_pow[expo]):
            raise NotCharacterDiagonal(
                f"column {j} scalar does not match theta^(a.xi)")

    if mod_scalars:
        c = 0
    else:
        c = ctx.dlog_theta(s0)
        if c is None:
            raise NotThetaPower("overall scalar is not a power of theta")
    return ExtraspecialElement(c, tuple(a), tuple(b))


def _conjugates_of_basis(n, params):
    """Matrices n * g * n^-1 for g in (A_1, B_1, ..., A_l, B_l)."""
    gens = []
    for i in range(1, params.ell + 1):
        gens.append(op_A(params, i))
        gens.append(op_B(params, i))
    if isinstance(n, MonomialOp):
        n_inv = n.inverse()
        return [n.compose(g).compose(n_inv).materialize() for g in gens]
    if isinstance(n, Operator):
        factors = n.factors if isinstance(n, ProductOp) else (n,)
        if len(factors) <= 8:
            n_inv = n.inverse()
            return [ProductOp(params, (n, g, n_inv)).materialize() for g in gens]
        mat = n.materialize()
    else:
        mat = n
    try:
        mat_inv = mat.inverse()
    except SingularMatrix:
        raise DoesNotNormalize("matrix is singular") from None
    out = []
    for g in gens:
        # mat * g is a column scaling/permutation of mat
        cols = mat.columns()
        mixed = DenseMatrix.from_columns(
            mat.ctx,
            [[params.ctx.mul(d, x) for x in cols[p]]
             for p, d in zip(_perm_cols(g), g.diag)])
        out.append(mixed * mat_inv)
    return out


def _perm_cols(g):
    # column j of the monomial matrix g picks column perm[j] of the left factor
    return g.perm


def pi_map(n, params):
    """The symplectic matrix describing conjugation by n on R/Z(R).

    n may be a structured operator or a DenseMatrix; it must normalise R*Z,
    otherwise DoesNotNormalize is raised.
    """
    cols = []
    try:
        for conj in _conjugates_of_basis(n, params):
            elem = recognize(conj, params, mod_scalars=True)
            cols.append(elem.coset_vector())
    except RecognitionError as exc:
        raise DoesNotNormalize(f"a conjugate left R*Z: {exc}") from None
    result = SpMatrix(params.r, tuple(zip(*cols)))
    if not result.is_symplectic():
        raise DoesNotNormalize("projected action does not preserve the form")
    return result
