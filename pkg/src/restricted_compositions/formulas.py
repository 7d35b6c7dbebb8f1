"""Closed-form counting formulas with exact integer arithmetic.

The binomial convention here is deliberately non-standard: ``binom(a, 0) = 1``
for every integer ``a`` (negative included), ``binom(a, b)`` is the usual
value when ``a >= b >= 1``, and everything else is 0.  The boundary terms of
the restricted-part sums rely on ``binom(-1, 0) = 1``.  No standard-convention
binomial is offered.

Formula evaluators accept a ``binom`` keyword so that a corrupted convention
can be injected in tests; production callers should never pass it.
"""

from __future__ import annotations

import math
from typing import Callable

from .core import PartitionInBox, partitions_in_box
from .errors import ParameterError, PreconditionError

__all__ = [
    "binom",
    "fibonacci",
    "monomial_eval",
    "box_weights",
    "a_k_n_dani",
    "a_k_n_m_positive",
    "a_k_n_m_signed",
    "A_n_closed",
    "A_n_double_sum",
    "A_n",
    "B_n_closed",
    "B_n_closed_alt",
    "B_n",
]

Binom = Callable[[int, int], int]


def binom(a: int, b: int) -> int:
    if b == 0:
        return 1
    if a >= b >= 1:
        return math.comb(a, b)
    return 0


def fibonacci(n: int) -> int:
    if n < 0:
        raise ParameterError(f"fibonacci needs n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _div5(value: int) -> int:
    q, rem = divmod(value, 5)
    if rem:
        raise ArithmeticError(f"{value} is not divisible by 5")
    return q


def monomial_eval(lam: PartitionInBox, d: int) -> int:
    """Number of distinct rearrangements of ``lam`` padded with zeros to length ``d``."""
    if lam.length > d:
        raise PreconditionError(f"partition {lam.parts} has more than {d} parts")
    out = math.factorial(d)
    for mult in lam.multiplicities(d):
        out //= math.factorial(mult)
    return out


def box_weights(width: int, rows: int, limit: int) -> list[int]:
    """``w[s] = sum of monomial_eval(lam, rows)`` over ``lam`` in the box with ``|lam| = s <= limit``."""
    w = [0] * (max(limit, -1) + 1)
    for lam in partitions_in_box(width, rows):
        if lam.size <= limit:
            w[lam.size] += monomial_eval(lam, rows)
    return w


def a_k_n_dani(k: int, n: int, *, binom: Binom = binom) -> int:
    """Compositions of ``n >= 1`` with all parts congruent to 1 mod ``k``.

    The sum is empty at ``n = 0``; that value (1) comes from enumeration.
    """
    if k < 1:
        raise ParameterError(f"k >= 1 required, got k={k}")
    if n <= 0:
        raise PreconditionError("closed formula needs n >= 1; use enumeration for n = 0")
    return sum(binom(n - 1 - j * (k - 1), j) for j in range((n - 1) // k + 1))


def _check_kmn(k: int, n: int, m: int) -> None:
    if k < 2:
        raise ParameterError(f"k >= 2 required, got k={k}")
    if n < 0 or m < 0:
        raise ParameterError(f"n, m >= 0 required, got n={n}, m={m}")


def a_k_n_m_positive(k: int, n: int, m: int, *, binom: Binom = binom) -> int:
    """Positive sum over ``(i, j, lam)`` with ``lam`` in the ``m x (k-2)`` box."""
    _check_kmn(k, n, m)
    base = n - (k + 1) * m
    if base < 0:
        return 0
    weights = box_weights(k - 2, m, base)
    total = 0
    for j in range(base // k + 1):
        for size, w in enumerate(weights):
            i = base - j * k - size
            if i < 0:
                break
            if w:
                total += binom(i, m) * binom(i + j - 1, j) * w
    return total


def a_k_n_m_signed(k: int, n: int, m: int, *, binom: Binom = binom) -> int:
    """Alternating sum over ``(i, j, l, h)`` obtained by inclusion-exclusion."""
    _check_kmn(k, n, m)
    base = n - (k + 1) * m
    total = 0
    for j in range(max(base, -1) // k + 1):
        for el in range(m + 1):
            rest = base - j * k - el * (k - 1)
            if rest < 0:
                break
            sign = -1 if el & 1 else 1
            coeff_l = sign * binom(m, el)
            for h in range(rest + 1):
                i = rest - h
                total += coeff_l * binom(i, m) * binom(i + j - 1, j) * binom(m + h - 1, h)
    return total


def A_n_closed(n: int) -> int:
    """``((n + 4) F_n + 2n F_{n-1}) / 5`` for ``n >= 1``."""
    if n < 1:
        raise PreconditionError("closed form stated for n >= 1")
    return _div5((n + 4) * fibonacci(n) + 2 * n * fibonacci(n - 1))


def A_n_double_sum(n: int, *, binom: Binom = binom) -> int:
    if n < 1:
        raise PreconditionError("double sum stated for n >= 1")
    return sum(binom(n - j - 1, j) for i in range(n) for j in range(i // 2 + 1))


def A_n(n: int) -> int:
    """Seeded value: 0 at ``n = 0``, closed form otherwise."""
    if n < 0:
        raise ParameterError(f"n >= 0 required, got {n}")
    return 0 if n == 0 else A_n_closed(n)


def B_n_closed(n: int) -> int:
    """``((2n + 3) F_n - n F_{n-1}) / 5`` for ``n >= 1``."""
    if n < 1:
        raise PreconditionError("this form needs n >= 1")
    return _div5((2 * n + 3) * fibonacci(n) - n * fibonacci(n - 1))


def B_n_closed_alt(n: int) -> int:
    """``((n + 3) F_n + n F_{n-2}) / 5`` for ``n >= 2``."""
    if n < 2:
        raise PreconditionError("this form needs n >= 2")
    return _div5((n + 3) * fibonacci(n) + n * fibonacci(n - 2))


def B_n(n: int) -> int:
    if n < 0:
        raise ParameterError(f"n >= 0 required, got {n}")
    return 0 if n == 0 else B_n_closed(n)
