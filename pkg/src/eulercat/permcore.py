"""
Permutations and their linear/cyclic descent statistics.

A permutation of [m] is stored in one-line notation as a tuple of the
values (w_1, ..., w_m), each of 1..m exactly once.  All positions and
values in this package are 1-based, matching the usual combinatorics
convention; the tuple index is therefore position minus one.

Descent positions are indices i in 1..m-1 with w_i > w_{i+1}.  Cyclic
descent positions additionally allow index m for the wrap pair
(w_m, w_1).  For m = 1 the wrap pair (w_1, w_1) is never a descent.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Permutation = tuple[int, ...]


def as_permutation(word: Sequence[int]) -> Permutation:
    """Validate that word is a permutation of {1..m} and return it as a tuple."""
    w = tuple(word)
    m = len(w)
    if m < 1:
        raise ValueError("permutation must have length >= 1")
    if sorted(w) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {w}")
    return w


def descent_positions(w: Sequence[int]) -> frozenset[int]:
    """Indices i in 1..m-1 with w_i > w_{i+1}."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def descent_count(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def cyclic_descent_positions(w: Sequence[int]) -> frozenset[int]:
    """descent_positions(w), plus index m iff the wrap pair (w_m, w_1) descends."""
    m = len(w)
    pos = set(descent_positions(w))
    if m > 1 and w[-1] > w[0]:
        pos.add(m)
    return frozenset(pos)


def ad_vector(w: Sequence[int]) -> tuple[int, ...]:
    """The ascent/descent vector: length m-1, entry 1 at descents, 0 at ascents."""
    return tuple(1 if w[i] > w[i + 1] else 0 for i in range(len(w) - 1))


def complement(w: Sequence[int]) -> Permutation:
    """Value-complement v -> m+1-v.  An involution; flips every ascent/descent."""
    m = len(w)
    return tuple(m + 1 - v for v in w)


def cyclic_shift(w: Sequence[int], r: int) -> Permutation:
    """The rotation w_r w_{r+1} ... w_m w_1 ... w_{r-1}, for 1 <= r <= m."""
    m = len(w)
    if not 1 <= r <= m:
        raise ValueError(f"shift start {r} outside 1..{m}")
    return tuple(w[r - 1:]) + tuple(w[:r - 1])


@dataclass(frozen=True)
class DescentProfile:
    """Linear and cyclic descent positions of one permutation."""

    descent_positions: frozenset[int]
    cyclic_descent_positions: frozenset[int]


def descent_profile(w: Sequence[int]) -> DescentProfile:
    return DescentProfile(descent_positions(w), cyclic_descent_positions(w))


def enumerate_by_descent_count(m: int, d: int) -> Iterator[Permutation]:
    """
    Lazily yield the permutations of [m] with exactly d descents, in
    lexicographic order.  Empty stream when d is out of range.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if d < 0 or d > m - 1:
        return
    for w in itertools.permutations(range(1, m + 1)):
        if descent_count(w) == d:
            yield w


def parse_permutation(text: str) -> Permutation:
    """Parse the space-separated one-line notation used by the CLI."""
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation from {text!r}") from exc
    return as_permutation(values)


def format_permutation(w: Sequence[int]) -> str:
    return " ".join(str(v) for v in w)
