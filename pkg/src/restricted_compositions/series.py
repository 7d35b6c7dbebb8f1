"""Exact truncated power series in ``x`` and in ``(x, y)``.

:class:`TruncatedSeries` holds integer coefficients of ``x^0 .. x^N``.
:class:`BivariateSeries` holds rows indexed by the ``y``-degree ``0 .. M``,
each row a coefficient list in ``x`` truncated at ``N``.

Rational generating functions are expanded as ``numerator * invert(denominator)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ParameterError, PreconditionError

__all__ = [
    "TruncatedSeries",
    "BivariateSeries",
    "series_add",
    "series_mul",
    "series_invert",
    "a_k_series",
    "a_k_denominator",
    "a_k_bivariate_series",
    "a_k_bivariate_denominator",
    "recurrence_from_denominator",
    "extend_by_recurrence",
]


def _conv(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(min(len(b), N + 1 - i)):
            out[i + j] += ai * b[j]
    return out


class TruncatedSeries:
    """Power series in ``x`` modulo ``x^(N+1)`` with integer coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ParameterError(f"truncation order must be >= 0, got {order}")
        c = list(coeffs)[: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        self.coeffs: tuple[int, ...] = tuple(c)
        self.order = order

    @classmethod
    def from_terms(cls, terms: dict[int, int], order: int) -> "TruncatedSeries":
        """Build from ``{exponent: coefficient}``, dropping exponents above ``order``."""
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e <= order:
                c[e] += v
        return cls(c, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)}, order={self.order})"

    def _same_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ParameterError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_order(other)
        return TruncatedSeries(_conv(self.coeffs, other.coeffs, self.order), self.order)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.invert() ** (-e)
        out = TruncatedSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def invert(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise PreconditionError(f"constant term {c0} is not a unit")
        N = self.order
        inv = [0] * (N + 1)
        inv[0] = c0
        for n in range(1, N + 1):
            acc = sum(self.coeffs[j] * inv[n - j] for j in range(1, n + 1))
            inv[n] = -acc * c0
        return TruncatedSeries(inv, N)


class BivariateSeries:
    """Series in ``x, y``: ``rows[m][i]`` is the coefficient of ``x^i y^m``."""

    __slots__ = ("rows", "order_x", "order_y")

    def __init__(self, rows: Iterable[Iterable[int]], order_x: int, order_y: int):
        if order_x < 0 or order_y < 0:
            raise ParameterError("truncation orders must be >= 0")
        fixed = []
        for row in list(rows)[: order_y + 1]:
            r = list(row)[: order_x + 1]
            r.extend([0] * (order_x + 1 - len(r)))
            fixed.append(tuple(r))
        while len(fixed) < order_y + 1:
            fixed.append((0,) * (order_x + 1))
        self.rows: tuple[tuple[int, ...], ...] = tuple(fixed)
        self.order_x = order_x
        self.order_y = order_y

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], order_x: int, order_y: int) -> "BivariateSeries":
        """Build from ``{(x_exponent, y_exponent): coefficient}``."""
        rows = [[0] * (order_x + 1) for _ in range(order_y + 1)]
        for (i, m), v in terms.items():
            if i <= order_x and m <= order_y:
                rows[m][i] += v
        return cls(rows, order_x, order_y)

    def coeff(self, i: int, m: int) -> int:
        return self.rows[m][i]

    def y_slice(self, m: int) -> TruncatedSeries:
        return TruncatedSeries(self.rows[m], self.order_x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (self.order_x, self.order_y, self.rows) == (other.order_x, other.order_y, other.rows)

    def __hash__(self) -> int:
        return hash((self.order_x, self.order_y, self.rows))

    def __repr__(self) -> str:
        return f"BivariateSeries(order_x={self.order_x}, order_y={self.order_y})"

    def _same_order(self, other: "BivariateSeries") -> None:
        if not isinstance(other, BivariateSeries):
            raise TypeError(f"expected BivariateSeries, got {type(other).__name__}")
        if (self.order_x, self.order_y) != (other.order_x, other.order_y):
            raise ParameterError("truncation orders differ")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._same_order(other)
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return BivariateSeries(rows, self.order_x, self.order_y)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries([[-a for a in r] for r in self.rows], self.order_x, self.order_y)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._same_order(other)
        N, M = self.order_x, self.order_y
        rows = [[0] * (N + 1) for _ in range(M + 1)]
        for a, ra in enumerate(self.rows):
            if not any(ra):
                continue
            for b in range(M + 1 - a):
                rb = other.rows[b]
                if not any(rb):
                    continue
                prod = _conv(ra, rb, N)
                out = rows[a + b]
                for i, v in enumerate(prod):
                    out[i] += v
        return BivariateSeries(rows, N, M)

    def invert(self) -> "BivariateSeries":
        # As a series in y over Z[[x]]: v_0 = 1/u_0, v_m = -v_0 * sum_{j>=1} u_j v_{m-j}.
        N, M = self.order_x, self.order_y
        u = [TruncatedSeries(r, N) for r in self.rows]
        v0 = u[0].invert()
        v = [v0]
        for m in range(1, M + 1):
            acc = TruncatedSeries([0], N)
            for j in range(1, m + 1):
                if any(u[j].coeffs):
                    acc = acc + u[j] * v[m - j]
            v.append(-(v0 * acc))
        return BivariateSeries([s.coeffs for s in v], N, M)


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_invert(a):
    return a.invert()


def _check_order(N: int) -> None:
    if N < 0:
        raise ParameterError(f"truncation order must be >= 0, got {N}")


def a_k_denominator(k: int, N: int) -> TruncatedSeries:
    """``1 - x - x^k`` truncated at ``N``."""
    if k < 1:
        raise ParameterError(f"k >= 1 required, got k={k}")
    _check_order(N)
    c = [0] * (N + 1)
    c[0] = 1
    for e in (1, k):
        if e <= N:
            c[e] -= 1
    return TruncatedSeries(c, N)


def a_k_series(k: int, N: int) -> TruncatedSeries:
    """``(1 - x^k) / (1 - x - x^k)``; coefficient ``n`` counts parts ``≡ 1 (mod k)``."""
    den = a_k_denominator(k, N)
    num = TruncatedSeries.from_terms({0: 1}, N) - TruncatedSeries.from_terms({k: 1}, N)
    return num * den.invert()


def a_k_bivariate_denominator(k: int, N: int, M: int) -> BivariateSeries:
    """``1 - x - x^k - (x^(k+2) + ... + x^(2k)) y``."""
    if k < 2:
        raise ParameterError(f"k >= 2 required, got k={k}")
    _check_order(N)
    _check_order(M)
    terms: dict[tuple[int, int], int] = {(0, 0): 1, (1, 0): -1}
    terms[(k, 0)] = terms.get((k, 0), 0) - 1
    for e in range(k + 2, 2 * k + 1):
        terms[(e, 1)] = -1
    return BivariateSeries.from_terms(terms, N, M)


def a_k_bivariate_series(k: int, N: int, M: int) -> BivariateSeries:
    """Coefficient of ``x^n y^m`` counts compositions with ``m`` exceptional parts."""
    den = a_k_bivariate_denominator(k, N, M)
    num = BivariateSeries.from_terms({(0, 0): 1, (k, 0): -1}, N, M)
    return num * den.invert()


def recurrence_from_denominator(k: int) -> list[int]:
    """Recurrence coefficients ``c`` with ``a_n = sum_j c[j-1] * a_(n-j)`` for ``n > k``.

    Read off the denominator ``1 - x - x^k``: ``[1, 0, ..., 0, 1]`` of length
    ``k``, collapsing to ``[2]`` when ``k = 1``.
    """
    if k < 1:
        raise ParameterError(f"k >= 1 required, got k={k}")
    c = [0] * k
    c[0] += 1
    c[k - 1] += 1
    return c


def extend_by_recurrence(k: int, N: int, seeds: Sequence[int] | None = None) -> list[int]:
    """Coefficients ``a_0 .. a_N`` of :func:`a_k_series` grown by the linear recurrence.

    ``seeds`` must hold ``a_0 .. a_k``; by default they come from series division.
    """
    _check_order(N)
    rec = recurrence_from_denominator(k)
    if seeds is None:
        seeds = a_k_series(k, k).coeffs
    if len(seeds) < k + 1:
        raise PreconditionError(f"need {k + 1} seeds, got {len(seeds)}")
    out = list(seeds[: min(k + 1, N + 1)])
    for n in range(len(out), N + 1):
        out.append(sum(c * out[n - j] for j, c in enumerate(rec, 1) if c))
    return out
