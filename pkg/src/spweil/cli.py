"""Command-line front end.

    spweil gens   --r 3 --l 1 --field auto-prime --format json
    spweil image  --r 3 --l 1 --g "1 1 0 1" [--irreducible minus]
    spweil verify --r 3 --l 2 --field cyclotomic [--closure]

Exit codes: 0 success, 2 invalid arguments, 3 invalid mathematical input,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .fields import InvalidFieldSpec, is_prime, make_field, parse_field_spec
from .generators import weil_generators
from .heisenberg import DoesNotNormalize
from .operators import WeilParams
from .serialize import (build_document, dumps_document, emit_gap, emit_magma,
                        generator_matrices, parse_matrix_text, serialize_word)
from .submodules import WrongCharacteristic, weil_image_irreducible
from .symplectic import (NotSymplectic, SpMatrix, decompose, group_order,
                         weil_image)
from .verification import (CapExceeded, CheckResult, closure_order,
                           run_relation_suite)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MATH = 3
EXIT_VERIFY = 4


def _common_flags(sub):
    sub.add_argument("--r", type=int, required=True, help="odd prime r")
    sub.add_argument("--l", type=int, required=True, help="number of hyperbolic pairs")
    sub.add_argument("--field", default="auto-prime",
                     help="cyclotomic | auto-prime | gf:p | gf:p^k | gf2-auto")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spweil",
        description="Exact Weil representation generators for Sp(2l, r)")
    subs = parser.add_subparsers(dest="command", required=True)

    gens = subs.add_parser("gens", help="emit the generator matrices")
    _common_flags(gens)
    gens.add_argument("--format", choices=("json", "magma", "gap"), default="json")
    gens.add_argument("--full", action="store_true",
                      help="include the normalizer extras A_t, B_t, C_t, E_t, sigma")

    image = subs.add_parser("image", help="Weil image of a symplectic matrix")
    _common_flags(image)
    image.add_argument("--format", choices=("json", "magma", "gap"), default="json")
    image.add_argument("--g", required=True,
                       help="2l x 2l integer matrix, inline or a file path")
    image.add_argument("--irreducible",
                       choices=("plus", "minus", "socle", "quotient"), default=None)

    verify = subs.add_parser("verify", help="run the identity verification suite")
    _common_flags(verify)
    verify.add_argument("--closure", action="store_true",
                        help="also count the generated matrix group by closure")
    verify.add_argument("--cap", type=int, default=10 ** 6)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--json", action="store_true", dest="as_json",
                        help="emit the report as JSON instead of a summary")
    return parser


def _validated_setup(args):
    if not is_prime(args.r) or args.r == 2:
        raise InvalidFieldSpec("r must be an odd prime")
    if args.l < 1:
        raise InvalidFieldSpec("l must be >= 1")
    spec = parse_field_spec(args.field, args.r)
    ctx = make_field(spec)
    return WeilParams(args.r, args.l, ctx)


def _open_out(args):
    if args.out:
        return open(args.out, "w")
    return sys.stdout


def cmd_gens(args):
    params = _validated_setup(args)
    gens = weil_generators(params)
    matrices = generator_matrices(gens, full=args.full)
    out = _open_out(args)
    try:
        if args.format == "json":
            out.write(dumps_document(build_document(gens, matrices)))
        elif args.format == "magma":
            emit_magma(gens, matrices, out)
        else:
            emit_gap(gens, matrices, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _read_matrix(args, params):
    text = args.g
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    rows = parse_matrix_text(text, params.ell, params.r)
    return SpMatrix(params.r, rows)


def cmd_image(args):
    params = _validated_setup(args)
    try:
        g = _read_matrix(args, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gens = weil_generators(params)
    try:
        word = decompose(g)
        if args.irreducible:
            mat = weil_image_irreducible(g, gens, args.irreducible)
            name = f"g_weil_{args.irreducible}"
        else:
            mat = weil_image(g, gens)
            name = "g_weil"
    except NotSymplectic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except WrongCharacteristic as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    out = _open_out(args)
    try:
        if args.format == "json":
            doc = build_document(gens, {name: mat}, word=word)
            doc["input"] = g.serialize()
            out.write(dumps_document(doc))
        elif args.format == "magma":
            emit_magma(gens, {name: mat}, out)
        else:
            emit_gap(gens, {name: mat}, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args):
    params = _validated_setup(args)
    gens = weil_generators(params)
    report = run_relation_suite(params, seed=args.seed, gens=gens)
    pstr = f"r={args.r}, l={args.l}, {params.ctx.describe()}"
    if args.closure:
        expected = group_order(args.l, args.r)
        if expected > args.cap:
            report.skip("closure-order", pstr,
                        f"group order {expected} exceeds cap {args.cap}")
        else:
            mats = [op.materialize() for _, _, _, op in gens.sp_generating_ops()]
            try:
                count = closure_order(mats, args.cap)
                report.record("closure-order", pstr, count == expected,
                              f"closure gave {count}, expected {expected}")
            except CapExceeded as exc:
                report.skip("closure-order", pstr, str(exc))
    out = _open_out(args)
    try:
        if args.as_json:
            out.write(json.dumps(report.to_json(), indent=2) + "\n")
        else:
            out.write(report.summary() + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK if report.ok else EXIT_VERIFY


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gens":
            return cmd_gens(args)
        if args.command == "image":
            return cmd_image(args)
        return cmd_verify(args)
    except InvalidFieldSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotSymplectic, DoesNotNormalize) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
