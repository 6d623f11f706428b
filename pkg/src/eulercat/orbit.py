"""
Cyclic-orbit analysis of permutations with n descents in S_{2n+1}:
exceedance equidistribution, Dyck-permutation counting, and the
shift-and-delete bijection onto S_{2n}.

Among the 2n+1 cyclic shifts of a permutation with n descents, exactly
n+1 have n descents, and the lattice paths of those n+1 shifts realize
every exceedance value 0..n exactly once.  analyze_orbit materializes
that statement as a checked certificate.
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ScaleCapError
from .numbers import eulerian
from .permcore import (
    Permutation,
    as_permutation,
    cyclic_descent_positions,
    cyclic_shift,
    descent_count,
    format_permutation,
)
from .paths import exceedance, is_dyck_permutation, path_from_perm

DEFAULT_FACTORIAL_CAP = 11

CASE_N = "n-cyclic-descents"
CASE_N_PLUS_ONE = "n-plus-one-cyclic-descents"


def _descents(w: Sequence[int]) -> int:
    d = 0
    prev = w[0]
    for v in w[1:]:
        if prev > v:
            d += 1
        prev = v
    return d


def _exceedance_of_perm(w: Sequence[int]) -> int:
    """exc(L(w)) computed directly from the one-line word (hot path)."""
    x = y = 0
    exc = 0
    prev = w[0]
    for v in w[1:]:
        if prev > v:
            y += 1
        else:
            if y > x:
                exc += 1
            x += 1
        prev = v
    return exc


def _exceedance_positions_of_perm(w: Sequence[int]) -> tuple[int, ...]:
    x = y = 0
    out = []
    prev = w[0]
    for v in w[1:]:
        if prev > v:
            y += 1
        else:
            if y > x:
                out.append(x)
            x += 1
        prev = v
    return tuple(out)


@dataclass(frozen=True)
class OrbitCertificate:
    """The n+1 cyclic shifts with n descents and their exceedances."""

    base: Permutation
    case_tag: str
    shifts: tuple[tuple[int, Permutation], ...]  # (start index, shifted word)
    exceedances: tuple[int, ...]

    @property
    def n(self) -> int:
        return (len(self.base) - 1) // 2

    def to_json_dict(self) -> dict:
        return {
            "base": format_permutation(self.base),
            "case": self.case_tag,
            "exceedances": list(self.exceedances),
            "shifts": [
                {
                    "start": start,
                    "permutation": format_permutation(w),
                    "exceedance": exc,
                }
                for (start, w), exc in zip(self.shifts, self.exceedances)
            ],
        }


def analyze_orbit(word: Sequence[int]) -> OrbitCertificate:
    """
    Certify the cyclic orbit of w in S_{2n+1} with n descents: classify by
    cyclic-descent count, list the n+1 shifts with n descents, and check
    that their exceedances are exactly {0..n}.
    """
    w = as_permutation(word)
    m = len(w)
    if m % 2 == 0:
        raise ValueError(f"orbit analysis needs odd length, got m = {m}")
    n = (m - 1) // 2
    if descent_count(w) != n:
        raise ValueError(
            f"expected {n} descents for m = {m}, got {descent_count(w)}"
        )

    cyclic = cyclic_descent_positions(w)
    if len(cyclic) == n:
        case_tag, want_descent_pair = CASE_N, False
    elif len(cyclic) == n + 1:
        case_tag, want_descent_pair = CASE_N_PLUS_ONE, True
    else:
        raise AssertionError(
            f"cyclic descent count {len(cyclic)} outside {{n, n+1}}"
        )

    # start at position i when the preceding cyclic pair (w_{i-1}, w_i)
    # is a descent (case n+1) or a non-descent (case n); i = 1 wraps to
    # the pair (w_m, w_1), recorded as cyclic index m.
    starts = []
    for i in range(1, m + 1):
        pair_index = i - 1 if i > 1 else m
        if (pair_index in cyclic) == want_descent_pair:
            starts.append(i)
    if len(starts) != n + 1:
        raise AssertionError(f"expected {n + 1} start indices, got {starts}")

    shifts = []
    exceedances = []
    other_descents = n - 1 if case_tag == CASE_N else n + 1
    for r in range(1, m + 1):
        shifted = cyclic_shift(w, r)
        d = descent_count(shifted)
        if r in starts:
            if d != n:
                raise AssertionError(f"listed shift {shifted} has {d} descents")
            shifts.append((r, shifted))
            exceedances.append(exceedance(path_from_perm(shifted)))
        elif d != other_descents:
            raise AssertionError(
                f"unlisted shift {shifted} has {d} descents, expected {other_descents}"
            )

    if sorted(exceedances) != list(range(n + 1)):
        raise AssertionError(
            f"exceedances {exceedances} are not a permutation of 0..{n}"
        )
    return OrbitCertificate(w, case_tag, tuple(shifts), tuple(exceedances))


def _census_by_statistic(
    m: int,
    d_target: int,
    statistic: Callable[[tuple[int, ...]], object],
    threads: int = 1,
) -> Counter:
    """
    Count permutations of [m] with d_target descents, bucketed by a
    statistic.  The domain is partitioned by first element; partial
    counters merge by addition, so the result is scheduling-independent.
    """
    values = tuple(range(1, m + 1))

    def run_partition(first: int) -> Counter:
        rest = tuple(v for v in values if v != first)
        counts: Counter = Counter()
        for tail in itertools.permutations(rest):
            w = (first,) + tail
            if _descents(w) == d_target:
                counts[statistic(w)] += 1
        return counts

    if threads <= 1 or m <= 2:
        total: Counter = Counter()
        for first in values:
            total += run_partition(first)
        return total
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(run_partition, values))
    total = Counter()
    for part in partials:
        total += part
    return total


def _check_cap(m: int, cap: int) -> None:
    if m > cap:
        raise ScaleCapError(
            f"enumeration over S_{m} exceeds the cap of S_{cap}; "
            "raise the cap explicitly to proceed"
        )


def equidistribution_census(
    n: int,
    cap: int = DEFAULT_FACTORIAL_CAP,
    threads: int = 1,
    mode: str = "stream",
) -> dict[int, int]:
    """
    Census of w in S_{2n+1} with n descents by exc(L(w)).  Every bucket
    j = 0..n holds the same count, the Eulerian-Catalan number EC_n.

    mode="orbit" recounts via one representative per cyclic orbit, as an
    independent cross-check of the streaming census.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    m = 2 * n + 1
    _check_cap(m, cap)
    if mode == "stream":
        counts = _census_by_statistic(m, n, _exceedance_of_perm, threads)
    elif mode == "orbit":
        counts = _orbit_census(n)
    else:
        raise ValueError(f"unknown census mode {mode!r}")
    return {j: counts.get(j, 0) for j in range(n + 1)}


def _orbit_census(n: int) -> Counter:
    m = 2 * n + 1
    counts: Counter = Counter()
    for w in itertools.permutations(range(1, m + 1)):
        if _descents(w) != n:
            continue
        cert = analyze_orbit(w)
        # count each orbit once, at its lexicographically least listed shift
        if w == min(shifted for _, shifted in cert.shifts):
            for exc in cert.exceedances:
                counts[exc] += 1
    return counts


def count_dyck_permutations(
    n: int,
    k: int = 2,
    cap: int = DEFAULT_FACTORIAL_CAP,
    threads: int = 1,
) -> int:
    """
    Exhaustive count of w in S_{kn+k-1} with n descents whose ad-vector
    is a (k-1)-ballot sequence; equals fuss_eulerian_catalan(k, n).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    m = k * n + k - 1
    _check_cap(m, cap)
    counts = _census_by_statistic(
        m, n, lambda w: is_dyck_permutation(w, k - 1), threads
    )
    return counts.get(True, 0)


def dyck_to_s2n_bijection(word: Sequence[int]) -> Permutation:
    """
    Cycle a Dyck permutation of S_{2n+1} until the value 2n+1 is last,
    then delete it, landing in S_{2n} with n-1 or n descents.
    """
    w = as_permutation(word)
    m = len(w)
    if m % 2 == 0 or m < 3:
        raise ValueError(f"expected odd length >= 3, got m = {m}")
    n = (m - 1) // 2
    if descent_count(w) != n:
        raise ValueError(f"expected {n} descents, got {descent_count(w)}")
    if not is_dyck_permutation(w, 1):
        raise ValueError(f"{w} is not a Dyck permutation")
    pos = w.index(m) + 1  # 1-based position of the maximum
    shifted = cyclic_shift(w, pos % m + 1)
    assert shifted[-1] == m
    image = shifted[:-1]
    if descent_count(image) not in (n - 1, n):
        raise AssertionError(f"bijection image {image} has bad descent count")
    return image


def exceedance_census_total(n: int) -> int:
    """Total census mass: the number of w in S_{2n+1} with n descents."""
    return eulerian(n, 2 * n + 1)
