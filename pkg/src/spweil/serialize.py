"""Interoperable output: JSON documents plus Magma and GAP text emission.

The JSON document layout is

    {"r": int, "l": int, "field": {...}, "theta": elem, "lambda": elem,
     "version": str, "matrices": {name: [[elem]]}, "word": [tokens]}

with elements encoded per field family (prime: decimal string; extension:
array of k coefficient strings; cyclotomic: array of r-1 "num/den" strings
in lowest terms).  dumps_document is canonical: parsing an emitted document
and re-serialising it reproduces the bytes.

Matrix keys: "C1".."Cl" are the determinant-one lam*C_t; "D12"... and
"U1".."Ul" the other group generators; with extras enabled also "rawC1"...,
"A1"..., "B1"..., "E1"..., "sigma".
"""

from __future__ import annotations

import json

from . import __version__
from .symplectic import GenToken


def generator_matrices(gens, full=False):
    """Named, materialised generator matrices in emission order."""
    ell = gens.ell
    out = {}
    for t in range(1, ell + 1):
        out[f"C{t}"] = gens.lamC[t - 1].materialize()
    for (s, t) in sorted(gens.D):
        out[f"D{s}{t}"] = gens.D[(s, t)].materialize()
    for t in range(1, ell + 1):
        out[f"U{t}"] = gens.U[t - 1].materialize()
    if full:
        for name, ops in (("rawC", gens.rawC), ("A", gens.A),
                          ("B", gens.B), ("E", gens.E)):
            for t in range(1, ell + 1):
                out[f"{name}{t}"] = ops[t - 1].materialize()
        out["sigma"] = gens.sigma.materialize()
    return out


def serialize_word(word):
    out = []
    for tok in word:
        rec = {"gen": tok.kind, "t": tok.t}
        if tok.kind == "D":
            rec["s"] = tok.s
        rec["exp"] = tok.exp
        out.append(rec)
    return out


def parse_word(records):
    return [GenToken(rec["gen"], rec["t"], rec.get("s"), rec["exp"])
            for rec in records]


def build_document(gens, matrices, word=None):
    ctx = gens.ctx
    doc = {
        "r": gens.r,
        "l": gens.ell,
        "field": ctx.spec_json(),
        "theta": ctx.serialize_elem(ctx.theta),
        "lambda": ctx.serialize_elem(gens.lam),
        "version": __version__,
        "matrices": {name: mat.serialize() for name, mat in matrices.items()},
    }
    if word is not None:
        doc["word"] = serialize_word(word)
    return doc


def dumps_document(doc):
    """Canonical byte form; load + dumps round-trips exactly."""
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Magma / GAP text


def _poly_terms(nums, den, symbol):
    from fractions import Fraction
    terms = []
    for i, c in enumerate(nums):
        if c == 0:
            continue
        fr = Fraction(c, den)
        coeff = str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"
        power = "" if i == 0 else (symbol if i == 1 else f"{symbol}^{i}")
        if not power:
            terms.append(coeff)
        elif fr == 1:
            terms.append(power)
        elif fr == -1:
            terms.append(f"-{power}")
        else:
            terms.append(f"{coeff}*{power}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _magma_cyclo_elem(ctx, value):
    nums, den = value
    return _poly_terms(nums, den, "theta")


def _magma_ext_elem(ctx, value):
    terms = []
    for i, c in enumerate(value):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
    return " + ".join(terms) if terms else "0"


def _magma_elem(ctx, value):
    if ctx.kind == "prime":
        return str(value)
    if ctx.kind == "extension":
        return _magma_ext_elem(ctx, value)
    return _magma_cyclo_elem(ctx, value)


def _magma_poly(modulus):
    terms = []
    for i, c in enumerate(modulus):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("X" if c == 1 else f"{c}*X")
        else:
            terms.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
    return " + ".join(reversed(terms))


def emit_magma(gens, matrices, out):
    """Write Magma assignments for the field, theta, lambda, and matrices."""
    ctx = gens.ctx
    n = gens.params.n
    if ctx.kind == "cyclotomic":
        out.write(f"K := CyclotomicField({gens.r});\n")
        out.write("theta := K.1;\n")
    elif ctx.kind == "prime":
        out.write(f"K := GF({ctx.p});\n")
        out.write(f"theta := K!{ctx.theta};\n")
    else:
        out.write(f"P<X> := PolynomialRing(GF({ctx.p}));\n")
        out.write(f"K<x> := ext<GF({ctx.p}) | {_magma_poly(ctx.modulus)}>;\n")
        out.write(f"theta := {_magma_elem(ctx, ctx.theta)};\n")
    out.write(f"lambda := {_magma_elem(ctx, gens.lam)};\n")
    for name, mat in matrices.items():
        out.write(f"{name} := Matrix(K, {n}, {n}, [\n")
        for i, row in enumerate(mat.rows):
            line = ", ".join(_magma_elem(ctx, v) for v in row)
            out.write(f"  {line}{',' if i < n - 1 else ''}\n")
        out.write("]);\n")


def _gap_cyclo_elem(ctx, value, r):
    nums, den = value
    return _poly_terms(nums, den, f"E({r})")


def _gap_elem(ctx, value, r):
    if ctx.kind == "prime":
        return f"{value}*Z({ctx.p})^0"
    if ctx.kind == "extension":
        terms = []
        for i, c in enumerate(value):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}*One(K)" if c != 1 else "One(K)")
            elif i == 1:
                terms.append("a" if c == 1 else f"{c}*a")
            else:
                terms.append(f"a^{i}" if c == 1 else f"{c}*a^{i}")
        return " + ".join(terms) if terms else "Zero(K)"
    return _gap_cyclo_elem(ctx, value, r)


def _gap_poly(modulus):
    terms = []
    for i, c in enumerate(modulus):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x_" if c == 1 else f"{c}*x_")
        else:
            terms.append(f"x_^{i}" if c == 1 else f"{c}*x_^{i}")
    return " + ".join(reversed(terms))


def emit_gap(gens, matrices, out):
    """Write GAP assignments for the field, theta, lambda, and matrices."""
    ctx = gens.ctx
    r = gens.r
    if ctx.kind == "cyclotomic":
        out.write(f"K := CyclotomicField({r});;\n")
        out.write(f"theta := E({r});;\n")
    elif ctx.kind == "prime":
        # Z(p) is the smallest primitive root, matching this package's theta
        out.write(f"K := GF({ctx.p});;\n")
        out.write(f"theta := Z({ctx.p})^{(ctx.p - 1) // r};;\n")
    else:
        out.write(f"x_ := Indeterminate(GF({ctx.p}), \"x_\");;\n")
        out.write(f"K := AlgebraicExtension(GF({ctx.p}), {_gap_poly(ctx.modulus)});;\n")
        out.write("a := RootOfDefiningPolynomial(K);;\n")
        out.write(f"theta := {_gap_elem(ctx, ctx.theta, r)};;\n")
    out.write(f"lambda_ := {_gap_elem(ctx, gens.lam, r)};;\n")
    for name, mat in matrices.items():
        out.write(f"{name} := [\n")
        nrows = len(mat.rows)
        for i, row in enumerate(mat.rows):
            line = ", ".join(_gap_elem(ctx, v, r) for v in row)
            out.write(f"  [ {line} ]{',' if i < nrows - 1 else ''}\n")
        out.write("];;\n")


def parse_matrix_text(text, ell, r):
    """Whitespace/comma-separated integers, row-major, reduced mod r."""
    entries = [int(tok) for tok in text.replace(",", " ").split()]
    n = 2 * ell
    if len(entries) != n * n:
        raise ValueError(f"expected {n * n} integers, got {len(entries)}")
    return [[entries[i * n + j] % r for j in range(n)] for i in range(n)]
