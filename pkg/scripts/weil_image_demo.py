#!/usr/bin/env python3
"""Decompose a pseudorandom symplectic matrix and pull it back through the
Weil representation, printing the word, the matrix, and the projection
roundtrip check.

Usage: python3 scripts/weil_image_demo.py [--r 5] [--l 2] [--seed 7]
       [--field auto-prime]
"""

import argparse

from spweil.fields import FieldSpec, make_field, parse_field_spec
from spweil.generators import weil_generators
from spweil.heisenberg import pi_map
from spweil.operators import WeilParams
from spweil.symplectic import decompose, random_element, weil_image


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--r", type=int, default=5)
    parser.add_argument("--l", type=int, default=2)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--field", default="auto-prime")
    args = parser.parse_args()

    ctx = make_field(parse_field_spec(args.field, args.r))
    params = WeilParams(args.r, args.l, ctx)
    gens = weil_generators(params)

    g = random_element(args.l, args.r, args.seed)
    print(f"g in Sp({2 * args.l}, {args.r}), seed {args.seed}:")
    for row in g.rows:
        print("   ", row)

    word = decompose(g)
    pretty = " ".join(
        (f"{t.kind}{t.t}" if t.kind != "D" else f"D{t.s}{t.t}")
        + (f"^{t.exp}" if t.exp != 1 else "")
        for t in word)
    print(f"\nword ({len(word)} tokens): {pretty}")

    mat = weil_image(g, gens)
    print(f"\nWeil image over {ctx.describe()} ({params.n} x {params.n}):")
    for row in mat.serialize():
        print("   ", row)

    back = pi_map(mat, params)
    print("\nprojection roundtrip:", "ok" if back == g else "MISMATCH")


if __name__ == "__main__":
    main()
