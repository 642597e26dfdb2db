"""``ehrhart`` command line.

    ehrhart compute  <file> [--format pretty|machine]
    ehrhart verify   <file> [--tmax N] [--result cached.json]
    ehrhart interior <file> [--format pretty|machine]
    ehrhart periods  <file>
    ehrhart qsum     <qp-file-or-literal> <a> <b> [--format pretty|machine]

Exit status: 0 on success, 1 when a verification check fails, 2 on bad
input (unreadable file, parse error, invalid polytope).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from .engine import ehrhart, mcmullen_check
from .oracle import EnumerationTooLarge
from .polytope import PolytopeError
from .quasipoly import discrete_sum
from .verify import VerifyConfig, verify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return formats.read_polytope(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except formats.ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _pretty_result(res) -> str:
    lines = [f"dim {res.dim} in ambient dimension {res.ambient_dim}", "",
             "L_P(t):", formats.render_qp(res.qp), ""]
    lines.append("i-indices: " + " ".join(f"s_{i}={s}" for i, s in enumerate(res.i_indices)))
    if res.volume is not None:
        lines.append(f"volume: {formats.format_rational(res.volume)}")
    lines += ["", "interior L_P°(t):", formats.render_qp(res.interior_qp)]
    return "\n".join(lines)


def cmd_compute(args) -> int:
    res = ehrhart(_load(args.file))
    print(formats.dumps_result(res) if args.format == "machine" else _pretty_result(res))
    return EXIT_OK


def cmd_interior(args) -> int:
    res = ehrhart(_load(args.file))
    if args.format == "machine":
        print(json.dumps(formats.qp_to_dict(res.interior_qp), indent=2))
    else:
        print(formats.render_qp(res.interior_qp))
    return EXIT_OK


def cmd_periods(args) -> int:
    P = _load(args.file)
    rep = mcmullen_check(P)
    print(f"{'i':>3} {'s_i':>6} {'min period of c_i':>18}")
    for i, (s, p) in enumerate(zip(rep.i_indices, rep.minimal_periods)):
        print(f"{i:>3} {s:>6} {p:>18}")
    if rep.leading_coefficient is not None:
        print(f"leading coefficient {formats.format_rational(rep.leading_coefficient)}, "
              f"volume {formats.format_rational(rep.volume)}")
    for v in rep.violations:
        print(f"VIOLATION: {v}")
    print("mcmullen: " + ("ok" if rep.ok else "FAILED"))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    P = _load(args.file)
    result = None
    if args.result:
        try:
            with open(args.result, encoding="utf-8") as fh:
                result = formats.result_from_dict(json.load(fh))
        except OSError as exc:
            raise InputError(f"{args.result}: {exc.strerror}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.result}: malformed result file ({exc})") from None
    report = verify(P, result, VerifyConfig(tmax=args.tmax))
    print(f"checking t = 0..{report.tmax}")
    for name in report.passed:
        print(f"PASS {name}")
    for failure in report.failures:
        print(f"FAIL {failure}")
    return EXIT_OK if report.ok else EXIT_FAIL


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def cmd_qsum(args) -> int:
    source = args.qp
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    try:
        f = formats.parse_qp(source)
    except formats.ParseError as exc:
        raise InputError(str(exc)) from None
    F = discrete_sum(f, args.a, args.b)
    print(json.dumps(formats.qp_to_dict(F), indent=2) if args.format == "machine"
          else formats.render_qp(F))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ehrhart", description="Exact Ehrhart quasi-polynomials of rational polytopes.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["pretty", "machine"], default="pretty")

    c = sub.add_parser("compute", help="L_P, i-indices, volume and interior quasi-polynomial")
    c.add_argument("file")
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="compare against brute-force counts")
    v.add_argument("file")
    v.add_argument("--tmax", type=int, default=None,
                   help="largest dilate to check (default 2 * denominator * period, capped)")
    v.add_argument("--result", help="check this cached JSON result instead of recomputing")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("interior", help="L of the relative interior, by reciprocity")
    i.add_argument("file")
    i.add_argument("--format", **fmt)
    i.set_defaults(func=cmd_interior)

    r = sub.add_parser("periods", help="i-indices against minimal coefficient periods")
    r.add_argument("file")
    r.set_defaults(func=cmd_periods)

    q = sub.add_parser("qsum", help="F(t) = sum of f(i) for i = 0 .. floor(a t / b)")
    q.add_argument("qp", help="file with a quasi-polynomial, or the text itself (e.g. 't + 1')")
    q.add_argument("a", type=_positive)
    q.add_argument("b", type=_positive)
    q.add_argument("--format", **fmt)
    q.set_defaults(func=cmd_qsum)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PolytopeError, EnumerationTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
