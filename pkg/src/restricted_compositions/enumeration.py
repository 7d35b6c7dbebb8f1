"""Exhaustive generation of compositions under declarative part restrictions.

Two generation strategies are provided and must agree:

``"filter"``
    walk all ``2**(n-1)`` binary words, decode, and test the literal
    predicate :meth:`RestrictionSpec.accepts`.  This is the trusted oracle.
``"direct"``
    grow compositions part by part, pruning with an incremental state
    machine compiled from the spec.  Used by default because it only visits
    prefixes that can still succeed.

Both yield compositions in lexicographic order of their part sequences.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .core import Composition, is_gap_free
from .errors import MalformedInputError, ParameterError

__all__ = [
    "Kind",
    "RestrictionSpec",
    "generate",
    "count",
    "total_parts",
    "count_with_distinguished_part",
]


class Kind(enum.Enum):
    ALL = "all"
    PARTS_CONGRUENT = "cong"
    PARTS_AT_LEAST = "min"
    LHS_FRANKLIN = "lhs"
    RHS_FRANKLIN = "rhs"
    EXACTLY_ONE_CONGRUENT = "onecong"
    GAP_FREE = "gapfree"
    ODD_PARTS = "odd"
    PARTS_IN_SET = "set"


# Parameter names per kind, in canonical text order.
_PARAMS: dict[Kind, tuple[str, ...]] = {
    Kind.ALL: (),
    Kind.PARTS_CONGRUENT: ("r", "k"),
    Kind.PARTS_AT_LEAST: ("k",),
    Kind.LHS_FRANKLIN: ("k", "m"),
    Kind.RHS_FRANKLIN: ("k", "m"),
    Kind.EXACTLY_ONE_CONGRUENT: ("r", "s", "k"),
    Kind.GAP_FREE: (),
    Kind.ODD_PARTS: (),
    Kind.PARTS_IN_SET: ("parts",),
}


@dataclass(frozen=True)
class RestrictionSpec:
    """A part-restriction predicate on compositions.

    Build instances with the named constructors (``RestrictionSpec.lhs(3, 2)``)
    or from text (``RestrictionSpec.parse("lhs:3:2")``).
    """

    kind: Kind
    r: int | None = None
    s: int | None = None
    k: int | None = None
    m: int | None = None
    parts: frozenset[int] | None = None

    def __post_init__(self) -> None:
        needed = set(_PARAMS[self.kind])
        for name in ("r", "s", "k", "m", "parts"):
            given = getattr(self, name) is not None
            if given and name not in needed:
                raise ParameterError(f"{self.kind.value} takes no parameter {name!r}")
            if not given and name in needed:
                raise ParameterError(f"{self.kind.value} requires parameter {name!r}")
        if self.k is not None and self.k < 1:
            raise ParameterError(f"k >= 1 required, got k={self.k}")
        if self.m is not None and self.m < 0:
            raise ParameterError(f"m >= 0 required, got m={self.m}")
        if self.kind is Kind.EXACTLY_ONE_CONGRUENT:
            k, r, s = self.k, self.r, self.s
            if k < 2:
                raise ParameterError(f"onecong requires k >= 2, got k={k}")
            if not 1 <= r <= k - 1:
                raise ParameterError(f"onecong requires 1 <= r <= k-1, got r={r}, k={k}")
            if not 1 <= s <= k - r:
                raise ParameterError(f"onecong requires 1 <= s <= k-r, got s={s}, r={r}, k={k}")
        if self.kind is Kind.PARTS_IN_SET:
            object.__setattr__(self, "parts", frozenset(self.parts))
            if not self.parts or min(self.parts) < 1:
                raise ParameterError("set requires a nonempty set of positive parts")

    # named constructors

    @classmethod
    def all(cls) -> "RestrictionSpec":
        return cls(Kind.ALL)

    @classmethod
    def congruent(cls, r: int, k: int) -> "RestrictionSpec":
        return cls(Kind.PARTS_CONGRUENT, r=r, k=k)

    @classmethod
    def at_least(cls, k: int) -> "RestrictionSpec":
        return cls(Kind.PARTS_AT_LEAST, k=k)

    @classmethod
    def lhs(cls, k: int, m: int) -> "RestrictionSpec":
        return cls(Kind.LHS_FRANKLIN, k=k, m=m)

    @classmethod
    def rhs(cls, k: int, m: int) -> "RestrictionSpec":
        return cls(Kind.RHS_FRANKLIN, k=k, m=m)

    @classmethod
    def one_congruent(cls, r: int, s: int, k: int) -> "RestrictionSpec":
        return cls(Kind.EXACTLY_ONE_CONGRUENT, r=r, s=s, k=k)

    @classmethod
    def gap_free(cls) -> "RestrictionSpec":
        return cls(Kind.GAP_FREE)

    @classmethod
    def odd(cls) -> "RestrictionSpec":
        return cls(Kind.ODD_PARTS)

    @classmethod
    def in_set(cls, parts) -> "RestrictionSpec":
        return cls(Kind.PARTS_IN_SET, parts=frozenset(parts))

    # text form

    @classmethod
    def parse(cls, text: str) -> "RestrictionSpec":
        """Parse ``cong:1:3``, ``min:3``, ``lhs:3:2``, ``set:1,3``, ``odd`` and friends."""
        head, _, rest = text.strip().partition(":")
        try:
            kind = Kind(head)
        except ValueError:
            raise MalformedInputError(f"unknown restriction {head!r}") from None
        names = _PARAMS[kind]
        fields = rest.split(":") if rest else []
        if len(fields) != len(names):
            raise MalformedInputError(
                f"{head} expects {len(names)} parameter(s) ({':'.join(names) or 'none'}), got {text!r}"
            )
        try:
            if kind is Kind.PARTS_IN_SET:
                return cls.in_set(int(tok) for tok in fields[0].split(","))
            return cls(kind, **{name: int(tok) for name, tok in zip(names, fields)})
        except ValueError as exc:
            if isinstance(exc, ParameterError):
                raise
            raise MalformedInputError(f"bad integer in {text!r}") from None

    def __str__(self) -> str:
        if self.kind is Kind.PARTS_IN_SET:
            return "set:" + ",".join(map(str, sorted(self.parts)))
        vals = [str(getattr(self, name)) for name in _PARAMS[self.kind]]
        return ":".join([self.kind.value, *vals])

    # literal predicate

    def accepts(self, c: Sequence[int]) -> bool:
        """Test a whole composition against the restriction as stated."""
        kind, k = self.kind, self.k
        if kind is Kind.ALL:
            return True
        if kind is Kind.ODD_PARTS:
            return all(p % 2 == 1 for p in c)
        if kind is Kind.PARTS_CONGRUENT:
            return all((p - self.r) % k == 0 for p in c)
        if kind is Kind.PARTS_AT_LEAST:
            return all(p >= k for p in c)
        if kind is Kind.PARTS_IN_SET:
            return all(p in self.parts for p in c)
        if kind is Kind.GAP_FREE:
            return is_gap_free(c)
        if kind is Kind.EXACTLY_ONE_CONGRUENT:
            special = [p for p in c if (p - self.r - self.s) % k == 0]
            plain = [p for p in c if (p - self.r) % k == 0]
            return len(special) == 1 and len(plain) == len(c) - 1
        if kind is Kind.LHS_FRANKLIN:
            odd_ones = [p for p in c if (p - 1) % k != 0]
            return len(odd_ones) == self.m and all(p > k for p in odd_ones)
        if kind is Kind.RHS_FRANKLIN:
            small = [i for i, p in enumerate(c) if p < k]
            if len(small) != self.m:
                return False
            last = len(c) - 1
            for i in small:
                if i == 0 or c[i - 1] < k:
                    return False
                if i == last:
                    return False
                if not (i + 1 == last or c[i + 1] > k):
                    return False
            return True
        raise AssertionError(kind)


# Incremental form used by the direct generator.  A machine is
# (initial_state, step, accept): step(state, part, remaining_after) returns the
# next state or None to prune; accept(state) decides a finished composition.
_Machine = tuple[object, Callable[[object, int, int], object], Callable[[object], bool]]


def _per_part(ok: Callable[[int], bool]) -> _Machine:
    return (True, lambda st, p, rem: True if ok(p) else None, lambda st: True)


def _machine(spec: RestrictionSpec) -> _Machine:
    kind, k = spec.kind, spec.k
    if kind is Kind.ALL:
        return _per_part(lambda p: True)
    if kind is Kind.ODD_PARTS:
        return _per_part(lambda p: p & 1 == 1)
    if kind is Kind.PARTS_CONGRUENT:
        res = spec.r % k
        return _per_part(lambda p: p % k == res)
    if kind is Kind.PARTS_AT_LEAST:
        return _per_part(lambda p: p >= k)
    if kind is Kind.PARTS_IN_SET:
        allowed = spec.parts
        return _per_part(lambda p: p in allowed)

    if kind is Kind.GAP_FREE:
        def step(prev, p, rem):
            return p if prev is None or abs(prev - p) <= 1 else None
        return (None, step, lambda st: True)

    if kind is Kind.EXACTLY_ONE_CONGRUENT:
        plain, special = spec.r % k, (spec.r + spec.s) % k

        def step(seen, p, rem):
            res = p % k
            if res == plain:
                return seen
            if res == special and seen == 0:
                return 1
            return None
        return (0, step, lambda seen: seen == 1)

    if kind is Kind.LHS_FRANKLIN:
        m = spec.m
        one = 1 % k

        def step(used, p, rem):
            if p % k == one:
                return used
            if p > k and used < m:
                return used + 1
            return None
        return (0, step, lambda used: used == m)

    if kind is Kind.RHS_FRANKLIN:
        m = spec.m

        # state: (small parts used, previous part or 0)
        def step(st, p, rem):
            used, prev = st
            if 0 < prev < k and not (p > k or rem == 0):
                return None
            if p < k:
                if prev < k or rem == 0 or used == m:
                    return None
                used += 1
            return (used, p)
        return ((0, 0), step, lambda st: st[0] == m)

    raise AssertionError(kind)


def _direct(n: int, spec: RestrictionSpec) -> Iterator[Composition]:
    start, step, accept = _machine(spec)
    prefix: list[int] = []

    def rec(state, remaining: int) -> Iterator[Composition]:
        if remaining == 0:
            if accept(state):
                yield Composition(prefix)
            return
        for p in range(1, remaining + 1):
            nxt = step(state, p, remaining - p)
            if nxt is None:
                continue
            prefix.append(p)
            yield from rec(nxt, remaining - p)
            prefix.pop()

    yield from rec(start, n)


def _all_by_binary(n: int) -> Iterator[Composition]:
    # Descending binary value is ascending lexicographic order of parts.
    if n == 0:
        yield Composition(())
        return
    width = n - 1
    for word in range((1 << width) - 1, -1, -1):
        parts = []
        run = 1
        for pos in range(width - 1, -1, -1):
            if (word >> pos) & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(parts)


def generate(n: int, spec: RestrictionSpec | None = None, strategy: str = "direct") -> Iterator[Composition]:
    """Yield the compositions of ``n`` satisfying ``spec`` in lexicographic order."""
    if n < 0:
        raise ParameterError(f"n >= 0 required, got n={n}")
    spec = RestrictionSpec.all() if spec is None else spec
    if strategy == "direct":
        return _direct(n, spec)
    if strategy == "filter":
        return (c for c in _all_by_binary(n) if spec.accepts(c))
    raise ParameterError(f"unknown strategy {strategy!r}")


def count(n: int, spec: RestrictionSpec | None = None, strategy: str = "direct") -> int:
    return sum(1 for _ in generate(n, spec, strategy))


def total_parts(n: int, spec: RestrictionSpec | None = None, strategy: str = "direct") -> int:
    """Sum of the lengths of all compositions of ``n`` satisfying ``spec``."""
    return sum(len(c) for c in generate(n, spec, strategy))


def count_with_distinguished_part(n: int, spec: RestrictionSpec | None = None, strategy: str = "direct") -> int:
    """Number of pairs (composition, marked part index); equal to :func:`total_parts`."""
    return total_parts(n, spec, strategy)
