"""Command-line interface: ``hypcodes <command> ...``.

Exit codes: 0 success, 1 decoding failure, 2 usage error, 3 repro mismatch.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io
from .codes import (
    GuardExceeded,
    code_build,
    corrupt,
    encode,
    format_poly,
    format_word,
    min_weight_bruteforce,
    random_message,
)
from .decoders import (
    CubeDecoder,
    NearestDecoder,
    decode_coset,
    decode_intermediate_m2,
    decode_supercode,
    make_decoder,
)
from .field import gf
from .lattice import (
    ExponentSet,
    build_cube_set,
    build_hyp_set,
    build_rm_set,
    containment_report,
    largest_rm_inside_hyp,
    rm_is_hyperbolic,
    smallest_rm_containing_hyp,
)
from .listdecode import MODES, list_decode_full, max_radius
from .repro import CASES, run_case

EXIT_OK, EXIT_DECODE_FAILURE, EXIT_USAGE, EXIT_REPRO = 0, 1, 2, 3
BRUTE_DELTA_LIMIT = 2**18


class UsageError(Exception):
    pass


def _field(args):
    if args.q is not None:
        return gf(args.q)
    if args.p is not None:
        return gf(args.p ** (args.k or 1))
    raise UsageError("give --q, or --p with optional --k")


def _family_set(args, q) -> ExponentSet:
    fam = args.family
    if fam == "hyp":
        _need(args, "d")
        return build_hyp_set(q, args.m, args.d)
    _need(args, "s")
    if fam == "rm":
        return build_rm_set(q, args.m, args.s)
    if fam == "cube":
        return build_cube_set(q, args.m, args.s)
    raise UsageError(f"unknown family {fam!r}")


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required here")


def _emit(args, text: str):
    if getattr(args, "out", None):
        io.write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _read_word(args, q, n):
    if not args.infile:
        raise UsageError("--in <word file> is required")
    return io.check_word(io.read_word(args.infile), q, n)


# -- commands -----------------------------------------------------------------------


def cmd_params(args) -> int:
    if args.infile:
        code = io.read_code(args.infile)
    else:
        _need(args, "family")
        F = _field(args)
        code = code_build(F, _family_set(args, F.q))
    fb = code.footprint_bound()
    lines = [f"code {code.exponents.tag} over {code.field!r}, m={code.m}", f"n={code.n}", f"k={code.k}", f"fb={fb}"]
    if code.q**code.k <= BRUTE_DELTA_LIMIT:
        lines.append(f"delta={min_weight_bruteforce(code)} (exhaustive)")
    elif code.exponents.tag.split("(")[0] in ("RM", "HYP", "CUBE"):
        lines.append(f"delta={fb} (footprint bound, exact for this family)")
    else:
        lines.append(f"delta>={fb} (footprint bound)")
    lines.append(f"t={max(0, (fb - 1) // 2)}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    _need(args, "m", "d")
    q = _field(args).q
    rep = containment_report(q, args.m, args.d)
    lines = [
        f"hyp q={q} m={args.m} d={args.d} k={len(build_hyp_set(q, args.m, args.d))}",
        f"largest_rm_inside={rep.s_largest_rm}",
        f"smallest_rm_containing={rep.s_smallest_rm}",
        f"largest_cube_inside={rep.s_largest_cube}",
        f"smallest_cube_containing={rep.s_smallest_cube}",
    ]
    top = args.m * (q - 1)
    for label, s in (("largest_rm_inside", rep.s_largest_rm), ("smallest_rm_containing", rep.s_smallest_rm)):
        if 0 <= s < top:
            hyp, delta = rm_is_hyperbolic(q, args.m, s)
            lines.append(f"{label}: RM_{q}({s},{args.m}) hyperbolic={hyp} delta={delta}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_repro(args) -> int:
    if args.list:
        _emit(args, "".join(f"{n}\t{c.source}\n" for n, c in CASES.items()))
        return EXIT_OK
    names = list(CASES) if args.all else ([args.name] if args.name else [])
    if not names:
        raise UsageError("give a case name or --all")
    rows = []
    for name in names:
        if name not in CASES:
            raise UsageError(f"unknown case {name!r}; known: {', '.join(CASES)}")
        rows += run_case(name)
    failed = sum(r.status == "FAIL" for r in rows)
    conflicts = sum(r.status == "CONFLICT" for r in rows)
    text = "".join(r.format() + "\n" for r in rows)
    text += f"{len(rows)} checks, {failed} failed, {conflicts} published-value conflicts\n"
    _emit(args, text)
    return EXIT_REPRO if failed else EXIT_OK


def cmd_lattice_export(args) -> int:
    _need(args, "family", "m")
    q = _field(args).q
    _emit(args, _family_set(args, q).serialize())
    return EXIT_OK


def _print_result(args, res) -> int:
    if res is None:
        sys.stderr.write("decoding failure\n")
        return EXIT_DECODE_FAILURE
    calls = " ".join(f"{k}={v}" for k, v in sorted(res.oracle_calls.items()))
    _emit(args, f"{format_word(res.codeword)}\n{format_poly(res.message)}\nerrors={res.errors_corrected}\ncalls {calls}\n")
    return EXIT_OK


def cmd_decode(args) -> int:
    _need(args, "m")
    F = _field(args)
    q, m = F.q, args.m
    via = args.via
    if via == "cube" and args.d is None:
        _need(args, "s")
        y = _read_word(args, q, q**m)
        return _print_result(args, CubeDecoder(F, args.s, m).decode(y))
    _need(args, "d")
    H = build_hyp_set(q, m, args.d)
    target = code_build(F, H)
    y = _read_word(args, q, target.n)
    if via == "nearest":
        res = NearestDecoder(target).decode(y)
    elif via == "supercode":
        s = smallest_rm_containing_hyp(q, m, args.d) if args.s is None else args.s
        res = decode_supercode(target, make_decoder(code_build(F, build_rm_set(q, m, s))), y)
    elif via == "coset":
        s = largest_rm_inside_hyp(q, m, args.d) if args.s is None else args.s
        A = code_build(F, build_rm_set(q, m, s))
        res = decode_coset(A, target, make_decoder(A), y)
    elif via == "intermediate":
        if m != 2:
            raise UsageError("the intermediate decoder needs m=2")
        res = decode_intermediate_m2(F, args.d, y)
    elif via == "cube":
        s = containment_report(q, m, args.d).s_smallest_cube if args.s is None else args.s
        res = decode_supercode(target, CubeDecoder(F, s, m), y)
    else:
        raise UsageError(f"unknown decoder {via!r}")
    return _print_result(args, res)


def cmd_list_decode(args) -> int:
    _need(args, "m", "d")
    F = _field(args)
    n = F.q**args.m
    y = _read_word(args, F.q, n)
    r = args.r if args.r is not None else max_radius(F.q, args.m, args.d, args.mode).r_star
    if r < 1:
        raise UsageError("no feasible list-decoding radius")
    try:
        res = list_decode_full(F, args.m, args.d, y, r, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p = res.plan
    lines = [f"plan r={p.r} t={p.t} mode={p.mode} levels={','.join(map(str, p.sizes))} unknowns={p.unknowns} n={p.n}"]
    for e in res.entries:
        lines.append(f"{e.distance} {format_word(e.codeword)} {format_poly(e.message)}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if res.entries else EXIT_DECODE_FAILURE


def cmd_sample(args) -> int:
    """Random codeword of a family code plus ``--t`` random errors."""
    _need(args, "family", "m", "t")
    F = _field(args)
    code = code_build(F, _family_set(args, F.q))
    c = encode(code, random_message(code, np.random.default_rng(args.seed)))
    y, _ = corrupt(c, args.t, args.seed, F.q)
    if args.sent:
        io.write_word(args.sent, c)
    _emit(args, format_word(y) + "\n")
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def _common(p, family=False):
    p.add_argument("--q", type=int, help="field size (prime power)")
    p.add_argument("--p", type=int, help="characteristic, with --k")
    p.add_argument("--k", type=int, help="extension degree, with --p")
    p.add_argument("--m", type=int, help="number of variables")
    p.add_argument("--d", type=int, help="hyperbolic designed distance")
    p.add_argument("--s", type=int, help="RM/cube degree")
    p.add_argument("--out", help="write output here instead of stdout")
    if family:
        p.add_argument("--family", choices=["rm", "hyp", "cube"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypcodes", description="hyperbolic, Reed-Muller and cube codes over GF(q)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="length, dimension and distance of a code")
    _common(p, family=True)
    p.add_argument("--in", dest="infile", help="code spec file")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bounds", help="RM and cube codes bracketing Hyp_q(d,m)")
    _common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("repro", help="regenerate the worked examples")
    p.add_argument("name", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("lattice-export", help="write an exponent set")
    _common(p, family=True)
    p.set_defaults(func=cmd_lattice_export)

    p = sub.add_parser("decode", help="unique decoding of a received word")
    _common(p)
    p.add_argument("--via", choices=["supercode", "coset", "intermediate", "cube", "nearest"], required=True)
    p.add_argument("--in", dest="infile")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("list-decode", help="list decoding of a hyperbolic code")
    _common(p)
    p.add_argument("--r", type=int, help="radius (default: largest feasible)")
    p.add_argument("--mode", choices=MODES, default="strict")
    p.add_argument("--in", dest="infile")
    p.set_defaults(func=cmd_list_decode)

    p = sub.add_parser("sample", help="random codeword plus errors, for trying the decoders")
    _common(p, family=True)
    p.add_argument("--t", type=int, help="number of errors")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sent", help="also write the transmitted codeword here")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GuardExceeded, ValueError, OSError) as exc:
        sys.stderr.write(f"hypcodes {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
