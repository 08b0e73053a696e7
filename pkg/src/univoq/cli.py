"""Command line interface: ``univoq <command> ...``.

Exit codes: 0 success, 1 invariant violation (``check``, failed decomposition
or nesting reports), 2 usage error.  JSON output is wrapped as
``{"univoq": 1, ...}``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .checks import SUITES, run_checks
from .classify import classify_base, point_in_Vq
from .config import JSON, PLAIN, Config
from .constants import all_constants
from .enumeration import (count_univoque_prefixes, decomposition_check, diff_prefixes,
                          enumerate_Vq_minus_Uq, find_V_elements, survivors)
from .exact import parse_base
from .expansion import (GREEDY, QUASI, NotDetected, _checked, alpha_of, count_expansion_branches,
                        detect_eventual_periodicity, orbit)
from .words import format_word

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(cfg: Config, payload: dict, plain: Optional[str] = None) -> None:
    if cfg.output == JSON or plain is None:
        print(json.dumps({"univoq": SCHEMA, **payload}, sort_keys=False))
    else:
        print(plain)


def _base(text: str):
    try:
        return parse_base(text)
    except Exception as exc:  # bad descriptor is a usage error
        raise UsageError(f"--base {text!r}: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def cmd_expand(args, cfg: Config) -> int:
    q, x = _base(args.base), _rational(args.x)
    algo = GREEDY if args.algorithm == "greedy" else QUASI
    steps = list(itertools.islice(orbit(_checked(x, q), q, algo), args.digits))
    digits = tuple(d for d, _ in steps)
    rem = steps[-1][1] if steps else q.element(x)
    payload = {"base": q.descriptor(), "x": str(x), "algorithm": algo,
               "digits": format_word(digits), "period": None, "remainder_exact": str(rem)}
    if args.detect_period:
        found = detect_eventual_periodicity(x, q, algo, cfg.max_steps)
        if not isinstance(found, NotDetected):
            payload["period"] = {"pre": format_word(found.pre), "per": format_word(found.per)}
    _emit(cfg, payload, format_word(digits))
    return 0


def cmd_alpha(args, cfg: Config) -> int:
    q = _base(args.base)
    a = alpha_of(q, cfg.max_steps)
    digits = a.prefix(args.digits)
    _emit(cfg, {"base": q.descriptor(), "digits": format_word(digits),
                "ep": str(a.word) if a.word is not None else None}, format_word(digits))
    return 0


def cmd_classify(args, cfg: Config) -> int:
    q = _base(args.base)
    c = classify_base(q, cfg.depth, cfg.max_steps)
    payload = {"base": q.descriptor(), **c.to_json()}
    if args.x is not None:
        payload["x_in_Vq"] = point_in_Vq(_rational(args.x), q, cfg.depth, cfg.max_steps).to_json()
    _emit(cfg, payload)
    return 0


def cmd_enumerate(args, cfg: Config) -> int:
    q = _base(args.base)
    if args.vq_minus_uq:
        words = [str(w) for w in enumerate_Vq_minus_Uq(q, args.len)]
        _emit(cfg, {"base": q.descriptor(), "preperiod_max": args.len, "words": words},
              "\n".join(words))
        return 0
    if args.count_only or args.csv:
        series = count_univoque_prefixes(q, args.len, cfg.depth)
        if args.csv:
            sys.stdout.write(series.to_csv())
            return 0
        _emit(cfg, {"base": q.descriptor(), **series.to_json()},
              "\n".join(f"{n} {c}" for n, c in enumerate(series.counts)))
        return 0
    words = [format_word(w) for w in survivors(q, args.len, cfg.depth)]
    _emit(cfg, {"base": q.descriptor(), "len": args.len, "words": words}, "\n".join(words))
    return 0


def cmd_diff(args, cfg: Config) -> int:
    q, r = _base(args.base_q), _base(args.base_r)
    words = [format_word(w) for w in diff_prefixes(q, r, args.len, cfg.depth)]
    _emit(cfg, {"q": q.descriptor(), "r": r.descriptor(), "len": args.len, "words": words},
          "\n".join(words))
    return 0


def cmd_decompose(args, cfg: Config) -> int:
    q, r = _base(args.base_q), _base(args.base_r)
    if args.v_base:
        vbases = [_base(t) for t in args.v_base]
        searched = False
    else:
        vbases = [t for t, _ in find_V_elements(q, r, args.period)]
        searched = True
    report = decomposition_check(q, r, vbases, args.len, cfg.depth)
    payload = {"q": q.descriptor(), "r": r.descriptor(), "v_bases_searched": searched,
               **report.to_json()}
    plain = f"{'ok' if report.ok else 'VIOLATION'}: |U_r'|={report.size_r} " \
            f"|U_q'|={report.size_q} pieces={report.pieces} " \
            f"missing={len(report.missing)} extra={len(report.extra)}"
    _emit(cfg, payload, plain)
    return 0 if report.ok else 1


def cmd_branches(args, cfg: Config) -> int:
    q, x = _base(args.base), _rational(args.x)
    n = count_expansion_branches(x, q, args.len)
    _emit(cfg, {"base": q.descriptor(), "x": str(x), "len": args.len, "branches": n}, str(n))
    return 0


def cmd_constants(args, cfg: Config) -> int:
    eps = _rational(args.eps) if args.eps else cfg.eps
    consts = [c.to_json() for c in all_constants(eps)]
    lines = []
    for c in consts:
        b = c["base"]
        where = b.get("descriptor") or "[" + ", ".join(b["interval"]) + "]"
        lines.append(f"{c['name']}\t{b['approx']:.12f}\t{c['word']}\t{where}")
    _emit(cfg, {"eps": str(eps), "constants": consts}, "\n".join(lines))
    return 0


def cmd_check(args, cfg: Config) -> int:
    results = run_checks(args.suite)
    failed = [r for r in results if not r[1]]
    payload = {"ok": not failed,
               "results": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]}
    plain = "\n".join(f"{'PASS' if ok else 'FAIL'} {n}{' ' + d if d and not ok else ''}"
                      for n, ok, d in results)
    _emit(cfg, payload, plain)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--depth", type=int, help="alpha prefix depth for non-periodic alpha")
    common.add_argument("--max-steps", type=int, help="budget for periodicity detection")

    p = argparse.ArgumentParser(prog="univoq", description="Unique expansions in non-integer bases.")
    p.add_argument("--version", action="version", version=f"univoq {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", parents=[common], help="digits of x in base q")
    s.add_argument("--base", required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--algo", "--algorithm", dest="algorithm", choices=["greedy", "quasi"],
                   default="greedy")
    s.add_argument("--digits", type=int, default=20)
    s.add_argument("--detect-period", action="store_true", help="also detect eventual periodicity")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("alpha", parents=[common], help="quasi-greedy expansion of 1")
    s.add_argument("--base", required=True)
    s.add_argument("--digits", type=int, default=20)
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("classify", parents=[common], help="membership in V, cl(U), U (JSON)")
    s.add_argument("--base", required=True)
    s.add_argument("--x", help="also test whether x lies in V_q")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", parents=[common], help="univoque prefixes of length N")
    s.add_argument("--base", required=True)
    s.add_argument("--len", type=int, required=True)
    s.add_argument("--count-only", action="store_true", help="counts for lengths 0..N")
    s.add_argument("--csv", action="store_true", help="counts as CSV")
    s.add_argument("--vq-minus-uq", action="store_true",
                   help="list V_q' minus U_q' words with preperiod <= N")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("diff", parents=[common], help="survivors of r that die in q")
    s.add_argument("--base-q", required=True)
    s.add_argument("--base-r", required=True)
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(func=cmd_diff)

    s = sub.add_parser("decompose", parents=[common], help="check U_r' against its decomposition")
    s.add_argument("--base-q", required=True)
    s.add_argument("--base-r", required=True)
    s.add_argument("--len", type=int, default=12)
    s.add_argument("--v-base", action="append",
                   help="element of V in [q, r); repeatable; searched when omitted")
    s.add_argument("--period", type=int, default=12, help="period bound for the search")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("branches", parents=[common], help="count expansion branches of x")
    s.add_argument("--base", required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--len", type=int, required=True)
    s.set_defaults(func=cmd_branches)

    s = sub.add_parser("constants", parents=[common], help="named constants")
    s.add_argument("--eps", help="width of the Komornik-Loreti enclosure")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("check", parents=[common], help="run invariant suites")
    s.add_argument("--suite", choices=["all", *SUITES], default="all")
    s.set_defaults(func=cmd_check)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for flag in ("depth", "max_steps", "len", "digits", "period"):
        v = getattr(args, flag, None)
        floor = 1 if flag in ("depth", "max_steps") else 0
        if v is not None and v < floor:
            print(f"univoq: error: --{flag.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    try:
        cfg = Config.from_env().override(depth=args.depth, max_steps=args.max_steps,
                                         output=JSON if args.json else PLAIN)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"univoq: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"univoq: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
