"""Command line front end.

Exit codes: 0 success, 2 decoding failure, 1 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bench as bench_mod
from . import serialization as ser
from . import worked_example
from .codes import GabidulinCode, InvalidCodeError
from .decoding import METHODS, DecodingFailure, decode, decode_line_erasures, decode_network_erasures
from .fields import ReducibleModulusError, cyclotomic_automorphism, cyclotomic_field, finite_field, frobenius
from .instances import corrupt, random_error, random_message, random_support
from .residue import LiftAlphabet, LiftError, NoInertPrimeError, NotInertError, make_residue_context, \
    residue_decode_and_lift

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _emit(obj, path=None):
    text = json.dumps(obj, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen_code(args):
    rng = random.Random(args.seed)
    if args.cyclotomic:
        L = cyclotomic_field(args.cyclotomic)
        theta = cyclotomic_automorphism(L, args.theta_exp)
        if args.n > L.degree:
            raise UsageError(f"n <= m violated: n = {args.n}, m = {L.degree}")
        g = [L.gen ** i for i in range(args.n)]
    elif args.fp:
        if not args.m:
            raise UsageError("--fp needs --m")
        L = finite_field(args.fp, args.m)
        theta = frobenius(L)
        if args.n > L.degree:
            raise UsageError(f"n <= m violated: n = {args.n}, m = {L.degree}")
        g = random_support(L, args.n, rng)
    else:
        raise UsageError("choose a field with --cyclotomic P or --fp P --m M")
    if args.k > args.n:
        raise UsageError(f"k <= n violated: k = {args.k}, n = {args.n}")
    code = GabidulinCode(theta, g, args.k)
    _emit(ser.code_to_json(code), args.output)
    return EXIT_OK


def cmd_encode(args):
    code = ser.code_from_json(_load(args.code))
    if args.message:
        data = _load(args.message)
        f = ser.poly_from_json(code.theta, data["f"] if isinstance(data, dict) else data)
        meta = {}
    else:
        if args.seed is None:
            raise UsageError("give --message FILE or --seed for a random message")
        f = random_message(code, random.Random(args.seed), binary=code.field.order is None)
        meta = {"seed": args.seed}
    if f.degree >= code.k:
        raise UsageError(f"message degree {f.degree} must be < k = {code.k}")
    doc = ser.word_to_json(code.encode(f), **meta)
    doc["f"] = ser.poly_to_json(f)
    _emit(doc, args.output)
    return EXIT_OK


def cmd_corrupt(args):
    code = ser.code_from_json(_load(args.code))
    word = ser.word_from_json(code.field, _load(args.word))
    if len(word) != code.n:
        raise UsageError(f"word has length {len(word)}, code has n = {code.n}")
    if args.seed is None:
        raise UsageError("corrupt needs --seed")
    if not 0 <= args.rank <= min(code.n, code.m):
        raise UsageError(f"rank must be in [0, {min(code.n, code.m)}]")
    e = random_error(code, args.rank, random.Random(args.seed), small=code.field.order is None)
    _emit(ser.word_to_json(corrupt(word, e), seed=args.seed, rank=args.rank), args.output)
    return EXIT_OK


def _alphabet(args, q):
    if args.lift == "centered":
        return LiftAlphabet.centered(q, args.bound)
    values = [int(v) for v in args.lift_alphabet.split(",") if v.strip()]
    return LiftAlphabet(values, q)


def _trace_printer():
    """Trace callback writing each state to stderr, numbered like the worked example."""
    seen = []

    def emit(stage, state):
        label = f"iteration {len(seen)}" if seen else "initialisation"
        seen.append(stage)
        sys.stderr.write("\n".join(worked_example.format_state(label, state)) + "\n")

    return emit


def cmd_decode(args):
    code = ser.code_from_json(_load(args.code))
    K = code.field.below
    word = ser.word_from_json(code.field, _load(args.word)) if args.word else None
    line = ser.line_pattern_from_json(K, _load(args.line_pattern)) if args.line_pattern else None
    net = ser.network_pattern_from_json(K, _load(args.network_pattern)) if args.network_pattern else None
    if line is not None and net is not None:
        raise UsageError("choose one erasure model")
    if word is None and line is None:
        raise UsageError("decode needs --word (or --line-pattern)")
    if word is not None and len(word) != code.n:
        raise UsageError(f"word has length {len(word)}, code has n = {code.n}")
    trace = _trace_printer() if args.trace else None
    try:
        if args.mod_prime:
            q = args.mod_prime
            ctx = make_residue_context(code.field, q if q == "auto" else int(q), code.theta)
            f = residue_decode_and_lift(code, word, ctx.q, _alphabet(args, ctx.q), line or net,
                                        method=args.method, trace=trace)
            e = None if word is None else [a - b for a, b in zip(word, code.encode(f))]
        elif line is not None:
            f = decode_line_erasures(code, line, method=args.method, trace=trace)
            e = None
        elif net is not None:
            f = decode_network_erasures(code, word, net, method=args.method, trace=trace)
            e = [a - b for a, b in zip(word, code.encode(f))]
        else:
            res = decode(code, word, args.method, trace=trace)
            f, e = res.f, res.e
    except (DecodingFailure, LiftError) as exc:
        _emit(ser.result_to_json("fail", reason=str(exc)), args.output)
        return EXIT_FAIL
    _emit(ser.result_to_json("ok", f, e), args.output)
    return EXIT_OK


def cmd_bench(args):
    rows = bench_mod.parse_rows(args.rows)
    if args.max_n:
        rows = [(n, k) for n, k in rows if n <= args.max_n]
    progress = None
    if args.verbose:
        def progress(r):
            sys.stderr.write(f"n={r['n']} k={r['k']} mode={r['mode']} median_ms={r['median_ms']}\n")
    results = bench_mod.run_bench(rows, args.repeats, args.mode, args.seed, args.timeout, args.direct_method,
                                  progress)
    text = bench_mod.to_csv(results)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if results:
        sys.stderr.write(bench_mod.to_tables(results) + "\n")
    return EXIT_OK


def cmd_demo(args):
    text = worked_example.render(args.method)
    sys.stdout.write(text)
    diff = worked_example.diff_against_golden(text)
    if diff:
        sys.stderr.write("\n".join(diff) + "\n")
        sys.stderr.write("demo trace differs from the bundled golden trace\n")
        return EXIT_FAIL
    sys.stderr.write("demo trace matches the bundled golden trace\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="gabidulin", description="Generalized Gabidulin codes over cyclic extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-code", help="write a code description")
    g.add_argument("--cyclotomic", type=int, metavar="P", help="use QQ(zeta_P) with support 1, a, ..., a^(n-1)")
    g.add_argument("--theta-exp", type=int, default=None, help="automorphism a -> a^E (cyclotomic)")
    g.add_argument("--fp", type=int, metavar="P", help="use GF(P^m) with the Frobenius and a random support")
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen_code)

    e = sub.add_parser("encode", help="encode a message")
    e.add_argument("--code", required=True)
    e.add_argument("--message", help="JSON list of coefficients (or {\"f\": [...]})")
    e.add_argument("--seed", type=int, help="draw a random message instead")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_encode)

    c = sub.add_parser("corrupt", help="add a random error of given rank")
    c.add_argument("--code", required=True)
    c.add_argument("--word", required=True)
    c.add_argument("--rank", type=int, required=True)
    c.add_argument("--seed", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_corrupt)

    d = sub.add_parser("decode", help="decode a received word")
    d.add_argument("--code", required=True)
    d.add_argument("--word")
    d.add_argument("--method", choices=sorted(METHODS), default="wb")
    d.add_argument("--line-pattern")
    d.add_argument("--network-pattern")
    d.add_argument("--mod-prime", help="decode modulo this inert prime, or 'auto'")
    d.add_argument("--lift-alphabet", default="0,1")
    d.add_argument("--lift", choices=["alphabet", "centered"], default="alphabet")
    d.add_argument("--bound", type=int)
    d.add_argument("--trace", action="store_true", help="print reconstruction rounds to stderr")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_decode)

    b = sub.add_parser("bench", help="time direct against residue decoding")
    b.add_argument("--rows", default="paper", help="'paper' (the full benchmark grid) or a list like 8:2,12:2")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--mode", choices=["direct", "residue", "both"], default="both")
    b.add_argument("--timeout", type=float, default=60.0, help="seconds per cell")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--direct-method", choices=sorted(METHODS), default="wb-df")
    b.add_argument("--max-n", type=int)
    b.add_argument("--csv")
    b.add_argument("-v", "--verbose", action="store_true")
    b.set_defaults(func=cmd_bench)

    m = sub.add_parser("demo", help="run the worked residue-field example and compare with the golden trace")
    m.add_argument("--method", choices=sorted(set(METHODS) - {"gauss"}), default="wb")
    m.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "theta_exp", None) is None and getattr(args, "cyclotomic", None):
        from .instances import primitive_root

        args.theta_exp = primitive_root(args.cyclotomic)
    try:
        return args.func(args)
    except (UsageError, ser.FormatError, InvalidCodeError, NotInertError, NoInertPrimeError,
            ReducibleModulusError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
