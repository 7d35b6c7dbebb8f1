"""Value types for compositions and their encodings.

A composition of ``n`` is an ordered tuple of positive integers summing to
``n``.  For ``n >= 1`` it is encoded by its descent set (the proper partial
sums) or, equivalently, by a 0/1 word of length ``n - 1`` whose ``i``-th bit
is 1 exactly when ``i`` is a descent.  Positions and descents are 1-indexed.

All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import EmptyCompositionError, MalformedInputError

__all__ = [
    "Composition",
    "BinarySequence",
    "DescentSet",
    "PartitionInBox",
    "partitions_in_box",
    "descent_set",
    "composition_from_descents",
    "to_binary",
    "from_binary",
    "opposite",
    "is_gap_free",
]


class Composition(tuple):
    """An ordered tuple of positive integer parts.

    >>> c = Composition((1, 7, 1, 4))
    >>> c.n, c.length, str(c)
    (13, 4, '1,7,1,4')
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        if isinstance(parts, Composition):
            return parts
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise MalformedInputError(f"parts must be positive integers, got {p!r}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the canonical form ``1,7,1,4``; blank text is the empty composition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise MalformedInputError(f"not a composition: {text!r}") from None
        return cls(parts)


class BinarySequence(tuple):
    """A finite word over {0, 1}; ``str`` gives the plain 0/1 string."""

    __slots__ = ()

    def __new__(cls, bits: Iterable[int] = ()) -> "BinarySequence":
        if isinstance(bits, BinarySequence):
            return bits
        if isinstance(bits, str):
            return cls.parse(bits)
        bits = tuple(bits)
        for b in bits:
            if b not in (0, 1) or isinstance(b, bool):
                raise MalformedInputError(f"bits must be 0 or 1, got {b!r}")
        return super().__new__(cls, bits)

    def __str__(self) -> str:
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"BinarySequence('{self}')"

    @classmethod
    def parse(cls, text: str) -> "BinarySequence":
        text = text.strip()
        if set(text) - {"0", "1"}:
            raise MalformedInputError(f"not a binary sequence: {text!r}")
        return super().__new__(cls, tuple(int(ch) for ch in text))


@dataclass(frozen=True)
class DescentSet:
    """Subset of ``{1, ..., n-1}`` stored as a sorted tuple."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if self.n < 0:
            raise MalformedInputError(f"ambient size must be nonnegative, got {self.n}")
        for e in elements:
            if not 1 <= e <= self.n - 1:
                raise MalformedInputError(f"descent {e} outside [1, {self.n - 1}]")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise MalformedInputError(f"descents must be strictly increasing: {elements}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements


@dataclass(frozen=True)
class PartitionInBox:
    """A partition with at most ``rows`` parts, each at most ``width``."""

    parts: tuple[int, ...]
    rows: int
    width: int

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise MalformedInputError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise MalformedInputError(f"partition parts must be weakly decreasing: {parts}")
        if len(parts) > self.rows:
            raise MalformedInputError(f"{parts} has more than {self.rows} parts")
        if parts and parts[0] > self.width:
            raise MalformedInputError(f"{parts} has a part larger than {self.width}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self, d: int | None = None) -> list[int]:
        """Return ``[m_0, ..., m_width]`` where ``m_0 = d - length`` pads with zeros."""
        d = self.rows if d is None else d
        mult = [0] * (self.width + 1)
        mult[0] = d - len(self.parts)
        for p in self.parts:
            mult[p] += 1
        return mult


def partitions_in_box(width: int, rows: int) -> Iterator[PartitionInBox]:
    """Yield every partition fitting in a ``rows x width`` box, empty partition first."""
    if width < 0 or rows < 0:
        raise MalformedInputError("box dimensions must be nonnegative")

    def rec(prefix: list[int], cap: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    for parts in rec([], width):
        yield PartitionInBox(parts, rows, width)


def descent_set(c: Sequence[int]) -> DescentSet:
    c = Composition(c)
    return DescentSet(tuple(accumulate(c[:-1])), c.n)


def composition_from_descents(d: DescentSet) -> Composition:
    if d.n == 0:
        return Composition(())
    cuts = (0, *d.elements, d.n)
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def to_binary(c: Sequence[int]) -> BinarySequence:
    """Encode a composition of ``n >= 1`` as a word of length ``n - 1``."""
    c = Composition(c)
    if not c:
        raise EmptyCompositionError("the empty composition has no binary encoding")
    bits: list[int] = []
    for p in c[:-1]:
        bits.extend([0] * (p - 1))
        bits.append(1)
    bits.extend([0] * (c[-1] - 1))
    return BinarySequence(bits)


def from_binary(b: Sequence[int] | str) -> Composition:
    """Decode a word of length ``L`` into a composition of ``L + 1``."""
    b = BinarySequence(b)
    parts: list[int] = []
    run = 1
    for bit in b:
        if bit:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(parts)


def opposite(b: Sequence[int] | str) -> BinarySequence:
    return BinarySequence(1 - bit for bit in BinarySequence(b))


def is_gap_free(c: Sequence[int]) -> bool:
    return all(abs(a - b) <= 1 for a, b in zip(c, c[1:]))
