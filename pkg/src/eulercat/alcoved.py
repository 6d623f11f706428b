"""
Alcoved slices of the hypersimplex and the Lam-Postnikov permutation
count for their normalized volumes.

An AlcovedSpec records a hypersimplex Delta(level_k, ambient_n) together
with integer lower/upper bounds on consecutive coordinate sums
x_{i+1} + ... + x_j.  Its normalized volume equals the number of
permutations w in S_{ambient_n - 1} with level_k - 1 descents whose
subwords w_i ... w_j (with the convention w_0 = 0) respect the bounds
as descent-count conditions, with tie-breaking comparisons of w_i
against w_j at exact equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import ScaleCapError
from .orbit import DEFAULT_FACTORIAL_CAP, _census_by_statistic, _descents, \
    _exceedance_positions_of_perm


@dataclass(frozen=True)
class Bound:
    """b <= x_{i+1} + ... + x_j <= c; either side may be absent (None)."""

    i: int
    j: int
    lower: Optional[int] = None
    upper: Optional[int] = None
    box: bool = False  # unit-box constraint 0 <= x_j <= 1, vacuous for counting

    def to_json_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "b": self.lower, "c": self.upper}


@dataclass(frozen=True)
class AlcovedSpec:
    ambient_n: int
    level_k: int
    bounds: tuple[Bound, ...] = field(default_factory=tuple)
    rotation: int = 0  # coordinate rotation applied to prefix-anchor the bounds

    def __post_init__(self):
        if not 0 < self.level_k < self.ambient_n:
            raise ValueError(
                f"degenerate hypersimplex slice: k = {self.level_k}, n = {self.ambient_n}"
            )
        for bd in self.bounds:
            if not 0 <= bd.i < bd.j <= self.ambient_n:
                raise ValueError(f"bound indices out of range: {bd}")
            if bd.lower is not None and bd.upper is not None and bd.lower > bd.upper:
                raise ValueError(f"empty bound: {bd}")

    def to_json_dict(self) -> dict:
        record = {
            "ambient_n": self.ambient_n,
            "level_k": self.level_k,
            "bounds": [bd.to_json_dict() for bd in self.bounds if not bd.box],
        }
        if self.rotation:
            record["rotation"] = self.rotation
        return record


def _box_bounds(n: int) -> tuple[Bound, ...]:
    return tuple(Bound(i - 1, i, lower=0, upper=1, box=True) for i in range(1, n + 1))


def spec_for_hypersimplex(k: int, n: int) -> AlcovedSpec:
    """Delta(k, n): the unit cube sliced at coordinate sum k."""
    return AlcovedSpec(ambient_n=n, level_k=k, bounds=_box_bounds(n))


def spec_for_Pkn(k: int, n: int) -> AlcovedSpec:
    """
    The slice of Delta(n+1, k(n+1)) cut by x_1 + ... + x_{kt} <= t for
    t = 1..n; its volume counts (k-1)-Dyck permutations.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    ambient = k * (n + 1)
    prefix = tuple(Bound(0, k * t, upper=t) for t in range(1, n + 1))
    return AlcovedSpec(ambient_n=ambient, level_k=n + 1,
                       bounds=_box_bounds(ambient) + prefix)


def spec_for_P2n_flipped(n: int, flipped: Iterable[int]) -> AlcovedSpec:
    """
    P_{2,n}(T): the t-th prefix inequality x_1 + ... + x_{2t} <= t is
    flipped to >= t exactly for t in T.  T = {} recovers spec_for_Pkn(2, n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    T = frozenset(flipped)
    if not T <= set(range(1, n + 1)):
        raise ValueError(f"flip set {sorted(T)} not a subset of 1..{n}")
    ambient = 2 * (n + 1)
    prefix = tuple(
        Bound(0, 2 * t, lower=t) if t in T else Bound(0, 2 * t, upper=t)
        for t in range(1, n + 1)
    )
    return AlcovedSpec(ambient_n=ambient, level_k=n + 1,
                       bounds=_box_bounds(ambient) + prefix)


def _bound_conditions_hold(w: Sequence[int], bounds: Sequence[Bound]) -> bool:
    """Lam-Postnikov descent conditions on the subwords w_i..w_j, w_0 = 0."""
    for bd in bounds:
        if bd.box:
            continue
        if bd.i == 0:
            word = (0,) + tuple(w[: bd.j])
        else:
            word = tuple(w[bd.i - 1: bd.j])
        d = _descents(word)
        if bd.lower is not None:
            if d < bd.lower:
                return False
            if d == bd.lower and not word[0] < word[-1]:
                return False
        if bd.upper is not None:
            if d > bd.upper:
                return False
            if d == bd.upper and not word[0] > word[-1]:
                return False
    return True


def w_set_count(
    spec: AlcovedSpec,
    cap: int = DEFAULT_FACTORIAL_CAP,
    threads: int = 1,
) -> int:
    """
    |W(k, n, b, c)|: permutations of [ambient_n - 1] with level_k - 1
    descents meeting every bound condition.  Equals the normalized
    volume of the alcoved polytope.
    """
    m = spec.ambient_n - 1
    if m > cap:
        raise ScaleCapError(
            f"counting over S_{m} exceeds the cap of S_{cap}"
        )
    counts = _census_by_statistic(
        m,
        spec.level_k - 1,
        lambda w: _bound_conditions_hold(w, spec.bounds),
        threads,
    )
    return counts.get(True, 0)


def all_subsets(n: int) -> list[tuple[int, ...]]:
    """Subsets of {1..n} as sorted tuples, ordered by size then value."""
    out = []
    for size in range(n + 1):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return out


def subset_key(T: Iterable[int]) -> str:
    """Canonical rendering of a subset of [n] for deterministic output."""
    items = sorted(T)
    return "{" + ",".join(str(t) for t in items) + "}"


def exceedance_position_census(
    n: int,
    cap: int = DEFAULT_FACTORIAL_CAP,
    threads: int = 1,
) -> dict[tuple[int, ...], int]:
    """
    For each T subset of {1..n}: count w in S_{2n+1} with n descents whose
    path has exceedances exactly at positions {t-1 : t in T}.  Each entry
    is the normalized volume of the matching flipped slice.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 2 * n + 1
    if m > cap:
        raise ScaleCapError(f"census over S_{m} exceeds the cap of S_{cap}")
    counts = _census_by_statistic(
        m, n, _exceedance_positions_of_perm, threads
    )
    census = {}
    for T in all_subsets(n):
        positions = tuple(t - 1 for t in T)
        census[T] = counts.get(positions, 0)
    return census
