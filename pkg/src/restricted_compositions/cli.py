"""Command-line interface: ``rcomp count|list|map|series|verify``.

Exit codes: 0 success, 1 domain or precondition failure (or check failure),
2 usage or parse failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from functools import lru_cache
from typing import Callable, Sequence

from . import bijections as bij
from . import formulas as fm
from . import series as ser
from .core import Composition
from .enumeration import Kind, RestrictionSpec, count, generate
from .errors import CompositionError, MalformedInputError, ParameterError
from .verify import CHECKS, VerifyConfig, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

DEFAULT_N_MAX = 64
DEFAULT_M_MAX = 8


class UsageError(Exception):
    pass


def _spec(text: str) -> RestrictionSpec:
    try:
        return RestrictionSpec.parse(text)
    except CompositionError as exc:
        raise UsageError(str(exc)) from None


def _formula_count(n: int, spec: RestrictionSpec) -> int:
    if spec.kind is Kind.PARTS_CONGRUENT and (spec.r - 1) % spec.k == 0:
        if n == 0:
            return count(0, spec)
        return fm.a_k_n_dani(spec.k, n)
    if spec.kind is Kind.LHS_FRANKLIN and spec.k >= 2:
        return fm.a_k_n_m_positive(spec.k, n, spec.m)
    raise UsageError(f"no closed formula for {spec} (formula mode supports cong:1:k and lhs:k:m with k >= 2)")


def _series_count(n: int, spec: RestrictionSpec) -> int:
    if spec.kind is Kind.PARTS_CONGRUENT and (spec.r - 1) % spec.k == 0:
        return ser.a_k_series(spec.k, n)[n]
    if spec.kind is Kind.LHS_FRANKLIN and spec.k >= 2:
        return ser.a_k_bivariate_series(spec.k, n, spec.m).coeff(n, spec.m)
    raise UsageError(f"no generating function for {spec} (series mode supports cong:1:k and lhs:k:m with k >= 2)")


_MODES: dict[str, Callable[[int, RestrictionSpec], int]] = {
    "brute": count,
    "formula": _formula_count,
    "series": _series_count,
}


def cmd_count(args: argparse.Namespace, out) -> int:
    spec = _spec(args.spec)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.mode != "all":
        out.write(f"{_MODES[args.mode](args.n, spec)}\n")
        return EXIT_OK
    values = {mode: fn(args.n, spec) for mode, fn in _MODES.items()}
    for mode, v in values.items():
        out.write(f"{mode}\t{v}\n")
    if len(set(values.values())) != 1:
        sys.stderr.write(f"mode mismatch for n={args.n}, spec={spec}: {values}\n")
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_list(args: argparse.Namespace, out) -> int:
    spec = _spec(args.spec)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    comps = generate(args.n, spec)
    if args.json:
        out.write(json.dumps([list(c) for c in comps]) + "\n")
    else:
        for c in comps:
            out.write(f"{c}\n")
    return EXIT_OK


_BIJECTIONS = (
    "sills", "sills-inv", "franklin", "franklin-raw", "franklin-inv",
    "glaisher", "glaisher-inv", "beck", "beck-inv",
)


def cmd_map(args: argparse.Namespace, out, stdin) -> int:
    line = stdin.readline()
    try:
        c = Composition.parse(line)
    except MalformedInputError as exc:
        raise UsageError(str(exc)) from None
    k, name = args.k, args.bijection
    index = None
    if name in ("beck", "beck-inv"):
        if args.r is None or args.s is None:
            raise UsageError(f"{name} requires --r and --s")
        if name == "beck":
            if args.idx is None:
                raise UsageError("beck requires --idx")
            image = bij.beck_shift_forward(k, args.r, args.s, c, args.idx)
        else:
            image, index = bij.beck_shift_inverse(k, args.r, args.s, c)
    else:
        fn = {
            "sills": bij.sills_forward,
            "sills-inv": bij.sills_inverse,
            "franklin": bij.franklin_forward,
            "franklin-raw": bij.franklin_forward_raw,
            "franklin-inv": bij.franklin_inverse,
            "glaisher": bij.glaisher_forward,
            "glaisher-inv": bij.glaisher_inverse,
        }[name]
        image = fn(k, c)
    if args.json:
        payload = {"composition": list(image)}
        if index is not None:
            payload["index"] = index
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"{image}\n")
        if index is not None:
            out.write(f"{index}\n")
    return EXIT_OK


def cmd_series(args: argparse.Namespace, out) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    m_max = args.m_max
    if args.k == 1:
        if m_max not in (None, 0):
            raise UsageError("the bivariate series needs k >= 2")
        rows = [list(ser.a_k_series(1, args.n_max).coeffs)]
    else:
        m_max = DEFAULT_M_MAX if m_max is None else m_max
        if m_max < 0:
            raise UsageError("--m-max must be >= 0")
        rows = [list(r) for r in ser.a_k_bivariate_series(args.k, args.n_max, m_max).rows]
    if args.format == "json":
        out.write(json.dumps({"k": args.k, "coeffs": rows}) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["m", *range(args.n_max + 1)])
        for m, row in enumerate(rows):
            writer.writerow([m, *row])
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out) -> int:
    try:
        cfg = VerifyConfig(n_max=args.n_max, k_max=args.k_max, m_max=args.m_max,
                           budget=args.budget, suite=args.suite)
        report = run_suite(cfg)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return EXIT_OK if report.ok else EXIT_DOMAIN


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rcomp", description="Compositions with restricted parts.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="count compositions satisfying a restriction")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--spec", required=True, help="e.g. odd, cong:1:3, min:3, lhs:3:2, rhs:3:2, set:1,3")
    c.add_argument("--mode", choices=["brute", "formula", "series", "all"], default="brute")

    ls = sub.add_parser("list", help="list compositions satisfying a restriction")
    ls.add_argument("--n", type=int, required=True)
    ls.add_argument("--spec", required=True)
    ls.add_argument("--json", action="store_true")

    mp = sub.add_parser("map", help="apply a bijection to a composition read from stdin")
    mp.add_argument("--bijection", choices=_BIJECTIONS, required=True)
    mp.add_argument("--k", type=int, required=True)
    mp.add_argument("--r", type=int)
    mp.add_argument("--s", type=int)
    mp.add_argument("--idx", type=int)
    mp.add_argument("--json", action="store_true")

    se = sub.add_parser("series", help="print generating function coefficients")
    se.add_argument("--k", type=int, required=True)
    se.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    se.add_argument("--m-max", type=int)
    se.add_argument("--format", choices=["json", "csv"], default="json")

    ve = sub.add_parser("verify", help="run the identity checks")
    ve.add_argument("--suite", default="all", choices=["all", *(ch.name for ch in CHECKS)])
    ve.add_argument("--n-max", type=int)
    ve.add_argument("--k-max", type=int)
    ve.add_argument("--m-max", type=int)
    ve.add_argument("--budget", type=float, default=120.0, help="seconds per check before it is skipped")
    ve.add_argument("--json", action="store_true")
    return p


# Parsers hold no per-call state, so one instance serves every invocation.
_cached_parser = lru_cache(maxsize=1)(build_parser)


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    try:
        args = _cached_parser().parse_args(argv)
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "list":
            return cmd_list(args, out)
        if args.command == "map":
            return cmd_map(args, out, stdin)
        if args.command == "series":
            return cmd_series(args, out)
        return cmd_verify(args, out)
    except UsageError as exc:
        sys.stderr.write(f"rcomp: usage error: {exc}\n")
        return EXIT_USAGE
    except CompositionError as exc:
        sys.stderr.write(f"rcomp: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
