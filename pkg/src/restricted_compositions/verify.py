"""Identity harness: each identity as a machine-checked equality over a grid.

Each :class:`IdentityCheck` walks a parameter grid.  At every grid point a
set of independent evaluators (brute enumeration, closed formulas, series
coefficients, bijection images) each produce a value, and the point passes
when all values coincide.  The first failing point is reported with every
evaluator's output side by side.

Checks that overrun the time budget are reported as SKIPPED together with
how much of the grid was covered.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable

from . import bijections as bij
from . import formulas as fm
from . import series as ser
from .core import (
    BinarySequence,
    composition_from_descents,
    descent_set,
    from_binary,
    opposite,
    partitions_in_box,
    to_binary,
)
from .enumeration import RestrictionSpec as Spec
from .enumeration import count, generate, total_parts
from .errors import ParameterError

__all__ = [
    "ENUM_N_LIMIT",
    "FORMULA_N_LIMIT",
    "VerifyConfig",
    "IdentityCheck",
    "CheckResult",
    "Report",
    "CHECKS",
    "STATEMENTS",
    "run_suite",
]

ENUM_N_LIMIT = 25
FORMULA_N_LIMIT = 60

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class VerifyConfig:
    """Upper bounds overriding each check's default grid, plus a time budget.

    ``None`` keeps the check's own default.  ``n_max = -1`` empties every grid.
    """

    n_max: int | None = None
    k_max: int | None = None
    m_max: int | None = None
    budget: float = 120.0
    suite: str = "all"
    binom: Callable[[int, int], int] = fm.binom

    def __post_init__(self) -> None:
        if self.n_max is not None and self.n_max > FORMULA_N_LIMIT:
            raise ParameterError(f"n_max above the desk-scale limit {FORMULA_N_LIMIT}")
        if self.k_max is not None and self.k_max < 1:
            raise ParameterError("k_max must be >= 1")
        if self.m_max is not None and self.m_max < 0:
            raise ParameterError("m_max must be >= 0")


class _Axes:
    """Grid-building helpers bound to a config; records any capping."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.notes: list[str] = []

    @property
    def empty(self) -> bool:
        return self.cfg.n_max is not None and self.cfg.n_max < 0

    def n(self, lo: int, hi: int, enumerative: bool = True) -> range:
        if self.cfg.n_max is not None:
            hi = self.cfg.n_max
            limit = ENUM_N_LIMIT if enumerative else FORMULA_N_LIMIT
            if hi > limit:
                self.notes.append(f"n capped at {limit} (desk-scale limit)")
                hi = limit
        return range(lo, hi + 1)

    def k(self, lo: int, hi: int) -> range:
        return range(lo, (hi if self.cfg.k_max is None else self.cfg.k_max) + 1)

    def m(self, lo: int, hi: int) -> range:
        return range(lo, (hi if self.cfg.m_max is None else self.cfg.m_max) + 1)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    statement: str
    evaluators: tuple[str, ...]
    grid: Callable[[_Axes], list[tuple]]
    evaluate: Callable[["_Context", tuple], dict[str, Any]]
    axes: tuple[str, ...]


@dataclass
class CheckResult:
    name: str
    statement: str
    evaluators: tuple[str, ...]
    grid_size: int
    points_checked: int
    status: str
    elapsed: float
    counterexample: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self, timing: bool = True) -> dict[str, Any]:
        d = {
            "name": self.name,
            "statement": self.statement,
            "evaluators": list(self.evaluators),
            "grid_size": self.grid_size,
            "points_checked": self.points_checked,
            "status": self.status,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 4)
        return d


@dataclass
class Report:
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(
            {"ok": self.ok, "checks": [r.as_dict(timing) for r in self.results]},
            indent=2,
            sort_keys=True,
            default=str,
        )

    def to_text(self, timing: bool = True) -> str:
        lines = []
        for r in self.results:
            t = f"  {r.elapsed:8.3f}s" if timing else ""
            lines.append(f"{r.status:<8} {r.name:<26} grid={r.grid_size:<6} checked={r.points_checked:<6}{t}")
            for note in r.notes:
                lines.append(f"         note: {note}")
            if r.counterexample is not None:
                cx = r.counterexample
                lines.append(f"         first failure at {cx['point']}:")
                for key, val in cx["values"].items():
                    lines.append(f"           {key:<24} {val}")
        passed = sum(r.status == PASS for r in self.results)
        failed = sum(r.status == FAIL for r in self.results)
        skipped = sum(r.status == SKIPPED for r in self.results)
        lines.append(f"{passed} passed, {failed} failed, {skipped} skipped")
        return "\n".join(lines)


class _Context:
    """Per-run memo of expensive shared values."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.binom = cfg.binom
        self._count = lru_cache(maxsize=None)(lambda n, spec: count(n, spec))
        self._parts = lru_cache(maxsize=None)(lambda n, spec: total_parts(n, spec))
        self._set = lru_cache(maxsize=None)(lambda n, spec: frozenset(generate(n, spec)))
        self._biv: dict[int, ser.BivariateSeries] = {}
        self._uni: dict[int, ser.TruncatedSeries] = {}

    def count(self, n: int, spec: Spec) -> int:
        return self._count(n, spec) if n >= 0 else 0

    def total_parts(self, n: int, spec: Spec) -> int:
        return self._parts(n, spec) if n >= 0 else 0

    def members(self, n: int, spec: Spec) -> frozenset:
        return self._set(n, spec) if n >= 0 else frozenset()

    def bivariate(self, k: int, n: int, m: int) -> int:
        s = self._biv.get(k)
        if s is None or s.order_x < n or s.order_y < m:
            need_n = max(n, FORMULA_N_LIMIT if s is None else s.order_x)
            need_m = max(m, 4 if s is None else s.order_y)
            s = self._biv[k] = ser.a_k_bivariate_series(k, need_n, need_m)
        return s.coeff(n, m)

    def univariate(self, k: int, n: int) -> int:
        s = self._uni.get(k)
        if s is None or s.order < n:
            s = self._uni[k] = ser.a_k_series(k, max(n, FORMULA_N_LIMIT))
        return s[n]


# -- check bodies -----------------------------------------------------------


def _encoding(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    comps = list(generate(n))
    desc_ok = sum(composition_from_descents(descent_set(c)) == c for c in comps)
    bin_ok = sum(from_binary(to_binary(c)) == c for c in comps)
    encodings = {to_binary(c) for c in comps}
    words = [BinarySequence((w >> (n - 2 - i)) & 1 for i in range(n - 1)) for w in range(1 << (n - 1))]
    word_ok = sum(to_binary(from_binary(w)) == w and opposite(opposite(w)) == w for w in words)
    return {
        "2^(n-1)": 1 << (n - 1),
        "brute_count": len(comps),
        "descent_round_trips": desc_ok,
        "binary_round_trips": bin_ok,
        "distinct_encodings": len(encodings),
        "word_round_trips": word_ok,
    }


def _binom_convention(ctx: _Context, pt: tuple) -> dict[str, Any]:
    a, b, expected = pt
    return {"expected": expected, "binom": ctx.binom(a, b)}


def _neg_power(ctx: _Context, pt: tuple) -> dict[str, Any]:
    d, N = pt
    base = ser.TruncatedSeries([1, -1], N) ** d
    return {
        "series_invert": base.invert().coeffs,
        "binom(i+d-1,i)": tuple(ctx.binom(i + d - 1, i) for i in range(N + 1)),
    }


def _monomial_identity(ctx: _Context, pt: tuple) -> dict[str, Any]:
    r, d = pt
    N = r * d
    power = ser.TruncatedSeries([1] * (r + 1), N) ** d
    sums = [0] * (N + 1)
    for lam in partitions_in_box(r, d):
        sums[lam.size] += fm.monomial_eval(lam, d)
    return {"series_power": power.coeffs, "box_monomial_sum": tuple(sums)}


def _odd_vs_min2(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    return {
        "brute_odd(n)": ctx.count(n, Spec.odd()),
        "brute_min2(n+1)": ctx.count(n + 1, Spec.at_least(2)),
        "fibonacci(n)": fm.fibonacci(n),
    }


def _cong1_vs_mink(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, n = pt
    return {
        "brute_cong(n)": ctx.count(n, Spec.congruent(1, k)),
        "brute_min(n+k-1)": ctx.count(n + k - 1, Spec.at_least(k)),
    }


def _cong1_closed_sum(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, n = pt
    return {
        "brute_cong(n)": ctx.count(n, Spec.congruent(1, k)),
        "dani": fm.a_k_n_dani(k, n, binom=ctx.binom),
    }


def _cong1_series(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, n = pt
    vals = {"series_coeff": ctx.univariate(k, n), "recurrence": ser.extend_by_recurrence(k, n)[n]}
    if n >= 1:
        vals["dani"] = fm.a_k_n_dani(k, n, binom=ctx.binom)
    if n <= 18:
        vals["brute_cong"] = ctx.count(n, Spec.congruent(1, k))
    return vals


def _series_reconstruction(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, N = pt
    product_ = ser.a_k_series(k, N) * ser.a_k_denominator(k, N)
    num = ser.TruncatedSeries.from_terms({0: 1}, N) - ser.TruncatedSeries.from_terms({k: 1}, N)
    return {"series*denominator": product_.coeffs, "numerator": num.coeffs}


def _bivariate_reconstruction(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, N, M = pt
    product_ = ser.a_k_bivariate_series(k, N, M) * ser.a_k_bivariate_denominator(k, N, M)
    num = ser.BivariateSeries.from_terms({(0, 0): 1, (k, 0): -1}, N, M)
    return {"series*denominator": product_.rows, "numerator": num.rows}


def _recurrence_extension(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, N = pt
    return {
        "division": ser.a_k_series(k, N).coeffs,
        "recurrence": tuple(ser.extend_by_recurrence(k, N)),
    }


def _glaisher_1k(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, n = pt
    dom = ctx.members(n, Spec.congruent(1, k))
    target = ctx.members(n - 1, Spec.in_set({1, k}))
    image = {bij.glaisher_forward(k, c) for c in dom}
    return {
        "brute_cong(n)": len(dom),
        "brute_set{1,k}(n-1)": len(target),
        "image_in_target": len(image & target),
        "forward_round_trips": sum(bij.glaisher_inverse(k, bij.glaisher_forward(k, c)) == c for c in dom),
        "inverse_round_trips": sum(bij.glaisher_forward(k, bij.glaisher_inverse(k, c)) == c for c in target),
    }


def _sills(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, n = pt
    dom = ctx.members(n, Spec.congruent(1, k))
    target = ctx.members(n + k - 1, Spec.at_least(k))
    image = {bij.sills_forward(k, c) for c in dom}
    return {
        "brute_cong(n)": len(dom),
        "brute_min(n+k-1)": len(target),
        "image_in_target": len(image & target),
        "forward_round_trips": sum(bij.sills_inverse(k, bij.sills_forward(k, c)) == c for c in dom),
        "inverse_round_trips": sum(bij.sills_forward(k, bij.sills_inverse(k, c)) == c for c in target),
    }


def _lhs_vs_rhs(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, m, n = pt
    return {
        "brute_lhs(n)": ctx.count(n, Spec.lhs(k, m)),
        "brute_rhs(n+k-1)": ctx.count(n + k - 1, Spec.rhs(k, m)),
    }


def _franklin(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, m, n = pt
    dom = ctx.members(n, Spec.lhs(k, m))
    target = ctx.members(n + k - 1, Spec.rhs(k, m))
    image = {bij.franklin_forward(k, c) for c in dom}
    vals = {
        "brute_lhs(n)": len(dom),
        "brute_rhs(n+k-1)": len(target),
        "image": len(image),
        "image_in_target": len(image & target),
        "forward_round_trips": sum(bij.franklin_inverse(k, bij.franklin_forward(k, c)) == c for c in dom),
        "inverse_round_trips": sum(bij.franklin_forward(k, bij.franklin_inverse(k, c)) == c for c in target),
        "m_preserved": sum(sum(p < k for p in bij.franklin_forward(k, c)) == m for c in dom),
    }
    if m == 0:
        vals["agrees_with_sills"] = sum(bij.franklin_forward(k, c) == bij.sills_forward(k, c) for c in dom)
    return vals


def _lhs_sums(which: str) -> Callable[[_Context, tuple], dict[str, Any]]:
    def run(ctx: _Context, pt: tuple) -> dict[str, Any]:
        k, m, n = pt
        vals: dict[str, Any] = {}
        if k <= 4 and m <= 3 and n <= 16:
            vals["brute_lhs"] = ctx.count(n, Spec.lhs(k, m))
        if which in ("pos", "both"):
            vals["positive"] = fm.a_k_n_m_positive(k, n, m, binom=ctx.binom)
        if which in ("sig", "both"):
            vals["signed"] = fm.a_k_n_m_signed(k, n, m, binom=ctx.binom)
        vals["series_coeff"] = ctx.bivariate(k, n, m)
        return vals
    return run


def _bivariate_series(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, m, n = pt
    vals = {"series_coeff": ctx.bivariate(k, n, m), "brute_lhs": ctx.count(n, Spec.lhs(k, m))}
    if m == 0:
        vals["univariate_coeff"] = ctx.univariate(k, n)
    return vals


def _shift(ctx: _Context, pt: tuple) -> dict[str, Any]:
    k, r, s, n = pt
    dom = ctx.members(n, Spec.congruent(r, k))
    target = ctx.members(n + s, Spec.one_congruent(r, s, k))
    pairs = [(c, i) for c in dom for i in range(1, len(c) + 1)]
    image = {bij.beck_shift_forward(k, r, s, c, i) for c, i in pairs}
    return {
        "total_parts_cong(n)": ctx.total_parts(n, Spec.congruent(r, k)),
        "brute_onecong(n+s)": len(target),
        "distinguished_pairs": len(pairs),
        "image_in_target": len(image & target),
        "forward_round_trips": sum(
            bij.beck_shift_inverse(k, r, s, bij.beck_shift_forward(k, r, s, c, i)) == (c, i) for c, i in pairs
        ),
        "inverse_round_trips": sum(
            bij.beck_shift_forward(k, r, s, *bij.beck_shift_inverse(k, r, s, c)) == c for c in target
        ),
    }


def _one_even_vs_odd(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    return {
        "brute_one_even(n+1)": ctx.count(n + 1, Spec.one_congruent(1, 1, 2)),
        "total_parts_odd(n)": ctx.total_parts(n, Spec.odd()),
        "A_n": fm.A_n(n),
    }


def _a_sequence(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    seq = [0, 1]
    for i in range(n):
        seq.append(seq[i + 1] + seq[i] + fm.fibonacci(i + 1))
    vals = {
        "recurrence": seq[n],
        "positive(2,n+3,1)": fm.a_k_n_m_positive(2, n + 3, 1, binom=ctx.binom),
    }
    if n >= 1:
        vals["closed"] = fm.A_n_closed(n)
        vals["double_sum"] = fm.A_n_double_sum(n, binom=ctx.binom)
    else:
        vals["closed_at_0"] = (n + 4) * fm.fibonacci(n) // 5
    if n + 3 <= 18:
        vals["brute_lhs(2,1)(n+3)"] = ctx.count(n + 3, Spec.lhs(2, 1))
    return vals


def _b_sequence(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    vals = {"B_n": fm.B_n(n)}
    if n >= 1:
        vals["form_F(n-1)"] = fm.B_n_closed(n)
    if n >= 2:
        vals["form_F(n-2)"] = fm.B_n_closed_alt(n)
    if n <= 18:
        vals["brute_total_parts_min2(n+1)"] = ctx.total_parts(n + 1, Spec.at_least(2))
    return vals


def _b_minus_a(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    vals = {"B_(n-1)": fm.B_n(n - 1), "A_n - B_n": fm.A_n(n) - fm.B_n(n)}
    if n <= 17:
        vals["brute"] = ctx.total_parts(n, Spec.odd()) - ctx.total_parts(n + 1, Spec.at_least(2))
        vals["brute_B_(n-1)"] = ctx.total_parts(n, Spec.at_least(2))
    return vals


def _gap_free(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (n,) = pt
    return {
        "direct": count(n, Spec.gap_free()),
        "filter": count(n, Spec.gap_free(), strategy="filter"),
    }


_FIXTURES: list[tuple[str, Callable[[], str], str]] = [
    ("descent_set(1,7,1,4)", lambda: str(descent_set((1, 7, 1, 4)).elements), "(1, 8, 9)"),
    ("to_binary(1,7,1,4)", lambda: str(to_binary((1, 7, 1, 4))), "100000011000"),
    ("opposite(110001011)", lambda: str(opposite("110001011")), "001110100"),
    ("sills(3; 1,7,1,4)", lambda: str(bij.sills_forward(3, (1, 7, 1, 4))), "4,3,5,3"),
    ("sills_inv(3; 4,3,5,3)", lambda: str(bij.sills_inverse(3, (4, 3, 5, 3))), "1,7,1,4"),
    ("franklin(3; 5,4,6,1)", lambda: str(bij.franklin_forward(3, (5, 4, 6, 1))), "3,1,4,4,2,4"),
    ("franklin_inv(3; 3,1,4,4,2,4)", lambda: str(bij.franklin_inverse(3, (3, 1, 4, 4, 2, 4))), "5,4,6,1"),
    ("franklin_raw(3; 4,3,4)", lambda: str(bij.franklin_forward_raw(3, (4, 3, 4))), "3,3,4,3"),
]


def _fixture(ctx: _Context, pt: tuple) -> dict[str, Any]:
    (idx,) = pt
    _, fn, expected = _FIXTURES[idx]
    return {"expected": expected, "got": fn()}


# -- grids -------------------------------------------------------------------


def _fixed(points: Iterable[tuple]) -> Callable[[_Axes], list[tuple]]:
    pts = list(points)
    return lambda ax: [] if ax.empty else pts


def _grid_k_m_n(k_lo, k_hi, m_hi, n_lo, n_hi, enumerative=True):
    def build(ax: _Axes) -> list[tuple]:
        return [
            (k, m, n)
            for k in ax.k(k_lo, k_hi)
            for m in ax.m(0, m_hi if k >= 2 else 0)
            for n in ax.n(n_lo, n_hi, enumerative)
        ]
    return build


def _grid_franklin(ax: _Axes) -> list[tuple]:
    pts = [(1, 0, n) for n in ax.n(1, 14)] if 1 in ax.k(1, 4) else []
    pts += [(k, m, n) for k in ax.k(2, 4) for m in ax.m(0, 3) for n in ax.n(1, 14)]
    return pts


def _grid_k_n(k_lo, k_hi, n_lo, n_hi, enumerative=True):
    return lambda ax: [(k, n) for k in ax.k(k_lo, k_hi) for n in ax.n(n_lo, n_hi, enumerative)]


def _grid_n(n_lo, n_hi, enumerative=True):
    return lambda ax: [(n,) for n in ax.n(n_lo, n_hi, enumerative)]


def _grid_shift(ax: _Axes) -> list[tuple]:
    return [
        (k, r, s, n)
        for k in ax.k(2, 4)
        for r in range(1, k)
        for s in range(1, k - r + 1)
        for n in ax.n(0, 14)
    ]


def _grid_series_orders(N: int):
    def build(ax: _Axes) -> list[tuple]:
        if ax.empty:
            return []
        order = N if ax.cfg.n_max is None else min(ax.cfg.n_max, FORMULA_N_LIMIT)
        return [(k, order) for k in ax.k(1, 5)]
    return build


def _grid_biv_orders(N: int, M: int):
    def build(ax: _Axes) -> list[tuple]:
        if ax.empty:
            return []
        order = N if ax.cfg.n_max is None else min(ax.cfg.n_max, FORMULA_N_LIMIT)
        return [(k, order, M if ax.cfg.m_max is None else ax.cfg.m_max) for k in ax.k(2, 5)]
    return build


_BINOM_FIXTURES = [(5, 2, 10), (-1, 0, 1), (-7, 0, 1), (2, 5, 0), (0, 0, 1), (-1, 1, 0), (3, 3, 1)]

CHECKS: list[IdentityCheck] = [
    IdentityCheck("binom-convention", "binomial convention with binom(a,0)=1 for all a",
                  ("fixture", "binom"), _fixed(_BINOM_FIXTURES), _binom_convention, ("a", "b", "expected")),
    IdentityCheck("encodings", "descent set and binary word encodings are bijections",
                  ("2^(n-1)", "brute", "round trips"), _grid_n(1, 16), _encoding, ("n",)),
    IdentityCheck("negative-power", "1/(1-x)^d = sum binom(i+d-1,i) x^i",
                  ("series_invert", "binomial"), _fixed((d, 20) for d in range(1, 6)), _neg_power, ("d", "N")),
    IdentityCheck("box-monomial", "(1+x+...+x^r)^d = sum over box partitions of m_lambda(1^d) x^|lambda|",
                  ("series_power", "box_monomial_sum"),
                  _fixed((r, d) for r in range(6) for d in range(6)), _monomial_identity, ("r", "d")),
    IdentityCheck("examples", "worked examples reproduce exactly",
                  ("expected", "got"), _fixed((i,) for i in range(len(_FIXTURES))), _fixture, ("fixture",)),
    IdentityCheck("odd-vs-min2", "odd parts of n <-> parts > 1 of n+1, both F_n",
                  ("brute", "brute", "fibonacci"), _grid_n(1, 20), _odd_vs_min2, ("n",)),
    IdentityCheck("cong1-vs-mink", "parts = 1 mod k of n <-> parts >= k of n+k-1",
                  ("brute", "brute"), _grid_k_n(1, 5, 1, 18), _cong1_vs_mink, ("k", "n")),
    IdentityCheck("sills-bijection", "Sills map is a bijection onto parts >= k",
                  ("brute", "bijection-image", "round trips"), _grid_k_n(1, 4, 1, 14), _sills, ("k", "n")),
    IdentityCheck("cong1-closed-sum", "closed sum for a_{k,n}",
                  ("brute", "formula"), _grid_k_n(1, 5, 1, 18), _cong1_closed_sum, ("k", "n")),
    IdentityCheck("cong1-series", "A_k(x) = (1-x^k)/(1-x-x^k)",
                  ("series", "formula", "recurrence"), _grid_k_n(1, 5, 0, 60, False), _cong1_series, ("k", "n")),
    IdentityCheck("series-reconstruction", "numerator/denominator reconstruction of both series",
                  ("series*denominator", "numerator"), _grid_series_orders(60), _series_reconstruction, ("k", "N")),
    IdentityCheck("bivariate-reconstruction", "bivariate series times its denominator is 1-x^k",
                  ("series*denominator", "numerator"), _grid_biv_orders(60, 4),
                  _bivariate_reconstruction, ("k", "N", "M")),
    IdentityCheck("recurrence", "denominator recurrence reproduces series division",
                  ("division", "recurrence"), lambda ax: [] if ax.empty else [(k, 200) for k in ax.k(1, 5)],
                  _recurrence_extension, ("k", "N")),
    IdentityCheck("cong1-vs-one-or-k", "parts = 1 mod k of n <-> parts in {1,k} of n-1",
                  ("brute", "bijection-image", "round trips"), _grid_k_n(2, 5, 1, 14), _glaisher_1k, ("k", "n")),
    IdentityCheck("lhs-vs-rhs", "exactly m exceptional parts of n <-> m guarded small parts of n+k-1",
                  ("brute", "brute"), _grid_k_m_n(2, 4, 3, 1, 16), _lhs_vs_rhs, ("k", "m", "n")),
    IdentityCheck("franklin-bijection", "Franklin-style map is a bijection onto the guarded-small-part set",
                  ("brute", "bijection-image", "round trips"), _grid_franklin, _franklin, ("k", "m", "n")),
    IdentityCheck("bivariate-series", "bivariate generating function",
                  ("series", "brute"), _grid_k_m_n(2, 4, 3, 0, 16), _bivariate_series, ("k", "m", "n")),
    IdentityCheck("lhs-positive-sum", "positive sum over box partitions",
                  ("brute", "positive formula", "series"), _grid_k_m_n(2, 5, 4, 0, 40, False),
                  _lhs_sums("pos"), ("k", "m", "n")),
    IdentityCheck("lhs-signed-sum", "alternating inclusion-exclusion sum",
                  ("brute", "positive formula", "signed formula", "series"), _grid_k_m_n(2, 5, 4, 0, 40, False),
                  _lhs_sums("both"), ("k", "m", "n")),
    IdentityCheck("one-even-sequence", "A_n seed, recurrence and both closed forms",
                  ("recurrence", "closed", "double sum", "positive formula", "brute"),
                  _grid_n(0, 38, False), _a_sequence, ("n",)),
    IdentityCheck("beck-shift", "one part = r+s mod k of n+s <-> parts in all compositions with parts = r mod k",
                  ("brute", "total parts", "bijection-image", "round trips"), _grid_shift, _shift, ("k", "r", "s", "n")),
    IdentityCheck("one-even-vs-odd-parts", "exactly one even part of n+1 <-> parts in all odd-part compositions of n",
                  ("brute", "total parts", "closed"), _grid_n(0, 18), _one_even_vs_odd, ("n",)),
    IdentityCheck("min2-total-parts", "both closed forms for B_n",
                  ("closed", "closed", "brute total parts"), _grid_n(0, 40, False), _b_sequence, ("n",)),
    IdentityCheck("min2-difference", "B_{n-1} = A_n - B_n",
                  ("closed", "brute"), _grid_n(1, 40, False), _b_minus_a, ("n",)),
    IdentityCheck("gap-free", "gap-free compositions: predicate and incremental generator agree",
                  ("direct", "filter"), _grid_n(0, 16), _gap_free, ("n",)),
]

# In-scope statements and the checks that cover them.
STATEMENTS: dict[str, tuple[str, ...]] = {
    "binomial convention": ("binom-convention",),
    "descent set / binary encoding bijection": ("encodings", "examples"),
    "opposite sequence": ("encodings", "examples"),
    "negative power identity": ("negative-power",),
    "monomial evaluation identity": ("box-monomial",),
    "odd parts vs parts > 1 (Fibonacci)": ("odd-vs-min2",),
    "parts = 1 mod k vs parts >= k": ("cong1-vs-mink", "sills-bijection"),
    "parts = 1 mod k vs parts in {1,k}": ("cong1-vs-one-or-k",),
    "closed formula for a_{k,n}": ("cong1-closed-sum",),
    "univariate generating function": ("cong1-series", "series-reconstruction", "recurrence"),
    "Franklin-style identity": ("lhs-vs-rhs", "franklin-bijection"),
    "worked examples and the failing remark": ("examples",),
    "bivariate generating function": ("bivariate-series", "bivariate-reconstruction"),
    "positive closed formula": ("lhs-positive-sum",),
    "signed closed formula": ("lhs-signed-sum",),
    "A_n properties": ("one-even-sequence",),
    "shift identity": ("beck-shift",),
    "one even part identity": ("one-even-vs-odd-parts",),
    "B_n formulas": ("min2-total-parts",),
    "B_{n-1} = A_n - B_n": ("min2-difference",),
    "gap-free predicate": ("gap-free",),
}


def _run_check(check: IdentityCheck, cfg: VerifyConfig, ctx: _Context) -> CheckResult:
    ax = _Axes(cfg)
    start = time.perf_counter()
    points = check.grid(ax)
    result = CheckResult(check.name, check.statement, check.evaluators, len(points), 0, PASS, 0.0,
                         notes=list(dict.fromkeys(ax.notes)))
    for pt in points:
        if time.perf_counter() - start > cfg.budget:
            result.status = SKIPPED
            result.notes.append(
                f"time budget {cfg.budget}s exceeded after {result.points_checked}/{len(points)} points"
            )
            break
        try:
            values = check.evaluate(ctx, pt)
        except Exception as exc:  # an evaluator crashing is a failure, not a harness error
            values = {"error": f"{type(exc).__name__}: {exc}"}
            ok = False
        else:
            ok = len({json.dumps(v, default=str) for v in values.values()}) == 1
        result.points_checked += 1
        if not ok:
            result.status = FAIL
            result.counterexample = {"point": dict(zip(check.axes, pt)), "values": values}
            break
    result.elapsed = time.perf_counter() - start
    return result


def run_suite(config: VerifyConfig | None = None) -> Report:
    """Run every check (or the one named by ``config.suite``) in declaration order."""
    cfg = config or VerifyConfig()
    checks = CHECKS if cfg.suite == "all" else [c for c in CHECKS if c.name == cfg.suite]
    if not checks:
        raise ParameterError(f"unknown suite {cfg.suite!r}; choose from {[c.name for c in CHECKS]}")
    ctx = _Context(cfg)
    return Report([_run_check(c, cfg, ctx) for c in checks])
