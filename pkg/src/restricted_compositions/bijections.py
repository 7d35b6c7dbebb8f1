"""Explicit bijections between families of restricted compositions.

The Sills and Franklin-style maps work on binary words: complement the
encoding of the input, rewrite every maximal run of ones into blocks of the
form ``0^(k-1) 1``, decode, and add ``k - 1`` to the final part.  Their
inverses rewrite each ``0^(k-1) 1`` back into ``1^k``.

The Glaisher-style map trades parts ``ik + 1`` for runs of ``k``'s and 1's,
and the Beck shift moves ``s`` units onto or off a single distinguished part.
"""

from __future__ import annotations

from typing import Sequence

from .core import Composition, from_binary, opposite, to_binary
from .enumeration import RestrictionSpec
from .errors import EmptyCompositionError, ParameterError, PreconditionError

__all__ = [
    "sills_forward",
    "sills_inverse",
    "franklin_forward",
    "franklin_forward_raw",
    "franklin_inverse",
    "glaisher_forward",
    "glaisher_inverse",
    "beck_shift_forward",
    "beck_shift_inverse",
]


def _check_k(k: int, lowest: int = 1) -> None:
    if not isinstance(k, int) or k < lowest:
        raise ParameterError(f"k >= {lowest} required, got k={k!r}")


def _nonempty(c: Sequence[int]) -> Composition:
    c = Composition(c)
    if not c:
        raise EmptyCompositionError("the empty composition is outside the domain of this map")
    return c


def _run_replacement(length: int, k: int) -> list[int]:
    # (0^(k-1) 1) repeated, closed by 0^(r-1) 1 with r the least positive
    # residue of length mod k; when k | length the closing block is a full one.
    r = length % k or k
    blocks, _ = divmod(length - r, k)
    return ([0] * (k - 1) + [1]) * blocks + [0] * (r - 1) + [1]


def _surgery(k: int, c: Composition) -> Composition:
    bits = opposite(to_binary(c))
    out: list[int] = []
    i = 0
    while i < len(bits):
        if bits[i] == 0:
            out.append(0)
            i += 1
            continue
        j = i
        while j < len(bits) and bits[j] == 1:
            j += 1
        out.extend(_run_replacement(j - i, k))
        i = j
    tilde = from_binary(out)
    return Composition((*tilde[:-1], tilde[-1] + k - 1))


def _unsurgery(k: int, c: Composition) -> Composition:
    # Parts >= k become 0^(p-k) 1^k, small parts become 1^p; the last part
    # loses k-1 and contributes 0^(p-k).
    bits: list[int] = []
    for p in c[:-1]:
        if p >= k:
            bits.extend([0] * (p - k) + [1] * k)
        else:
            bits.extend([1] * p)
    bits.extend([0] * (c[-1] - k))
    return from_binary(opposite(bits))


def sills_forward(k: int, c: Sequence[int]) -> Composition:
    """Map parts ``≡ 1 (mod k)`` of ``n`` to parts ``>= k`` of ``n + k - 1``.

    >>> sills_forward(3, (1, 7, 1, 4))
    Composition((4, 3, 5, 3))
    """
    _check_k(k)
    c = _nonempty(c)
    for i, p in enumerate(c, 1):
        if (p - 1) % k:
            raise PreconditionError(f"part {i} ({p}) is not congruent to 1 mod {k}")
    return _surgery(k, c)


def sills_inverse(k: int, c: Sequence[int]) -> Composition:
    _check_k(k)
    c = _nonempty(c)
    for i, p in enumerate(c, 1):
        if p < k:
            raise PreconditionError(f"part {i} ({p}) is less than k={k}")
    return _unsurgery(k, c)


def franklin_forward(k: int, c: Sequence[int]) -> Composition:
    """Generalized Sills map allowing parts ``≢ 1 (mod k)`` provided they exceed ``k``.

    The image has exactly as many parts below ``k`` as the input has parts
    not congruent to 1, each preceded by a part ``>= k`` and followed by the
    last part or a part ``> k``.

    >>> franklin_forward(3, (5, 4, 6, 1))
    Composition((3, 1, 4, 4, 2, 4))
    """
    _check_k(k)
    c = _nonempty(c)
    for i, p in enumerate(c, 1):
        if (p - 1) % k and p <= k:
            raise PreconditionError(
                f"part {i} ({p}) is not congruent to 1 mod {k} and not greater than k"
            )
    return _surgery(k, c)


def franklin_forward_raw(k: int, c: Sequence[int]) -> Composition:
    """The same string surgery as :func:`franklin_forward` with no domain check.

    Outside the domain the image carries no membership guarantee, e.g.
    ``(4, 3, 4)`` at ``k = 3`` lands on ``(3, 3, 4, 3)`` with no small part.
    """
    _check_k(k)
    return _surgery(k, _nonempty(c))


def franklin_inverse(k: int, c: Sequence[int]) -> Composition:
    _check_k(k)
    c = _nonempty(c)
    if c[-1] < k:
        raise PreconditionError(f"final part {c[-1]} is less than k={k}")
    m = sum(1 for p in c if p < k)
    if not RestrictionSpec.rhs(k, m).accepts(c):
        raise PreconditionError(
            f"{c} has parts below {k} not preceded by a part >= {k} "
            f"or not followed by the last part or a part > {k}"
        )
    return _unsurgery(k, c)


def glaisher_forward(k: int, c: Sequence[int]) -> Composition:
    """Replace each part ``ik + 1`` by ``i`` copies of ``k`` then a 1; drop the final 1."""
    _check_k(k, 2)
    c = _nonempty(c)
    out: list[int] = []
    for idx, p in enumerate(c, 1):
        q, rem = divmod(p - 1, k)
        if rem:
            raise PreconditionError(f"part {idx} ({p}) is not congruent to 1 mod {k}")
        out.extend([k] * q)
        out.append(1)
    out.pop()
    return Composition(out)


def glaisher_inverse(k: int, c: Sequence[int]) -> Composition:
    _check_k(k, 2)
    c = Composition(c)
    for idx, p in enumerate(c, 1):
        if p not in (1, k):
            raise PreconditionError(f"part {idx} ({p}) is neither 1 nor {k}")
    out: list[int] = []
    run = 0
    for p in (*c, 1):
        if p == k:
            run += 1
        else:
            out.append(run * k + 1)
            run = 0
    return Composition(out)


def _check_beck(k: int, r: int, s: int) -> None:
    if k < 2 or not 1 <= r <= k - 1 or not 1 <= s <= k - r:
        raise ParameterError(f"need k >= 2, 1 <= r <= k-1, 1 <= s <= k-r; got k={k}, r={r}, s={s}")


def beck_shift_forward(k: int, r: int, s: int, c: Sequence[int], idx: int) -> Composition:
    """Add ``s`` to part ``idx`` (1-indexed) of a composition with all parts ``≡ r``."""
    _check_beck(k, r, s)
    c = Composition(c)
    for i, p in enumerate(c, 1):
        if (p - r) % k:
            raise PreconditionError(f"part {i} ({p}) is not congruent to {r} mod {k}")
    if not 1 <= idx <= len(c):
        raise PreconditionError(f"part index {idx} out of range 1..{len(c)}")
    parts = list(c)
    parts[idx - 1] += s
    return Composition(parts)


def beck_shift_inverse(k: int, r: int, s: int, c: Sequence[int]) -> tuple[Composition, int]:
    """Undo :func:`beck_shift_forward`; returns the composition and the 1-indexed part."""
    _check_beck(k, r, s)
    c = Composition(c)
    special = [i for i, p in enumerate(c) if (p - r - s) % k == 0]
    if len(special) != 1:
        raise PreconditionError(
            f"expected exactly one part congruent to {r + s} mod {k}, found {len(special)}"
        )
    for i, p in enumerate(c):
        if i != special[0] and (p - r) % k:
            raise PreconditionError(f"part {i + 1} ({p}) is not congruent to {r} mod {k}")
    (i,) = special
    parts = list(c)
    parts[i] -= s
    return Composition(parts), i + 1
