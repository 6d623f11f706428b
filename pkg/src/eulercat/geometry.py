"""
Independent exact volumes via Ehrhart lattice-point counting.

A dilated alcoved slice is counted by a dynamic program over the running
prefix sum; the counts at dilations t = 0..d determine the Ehrhart
polynomial by exact rational interpolation, and the normalized volume is
d! times its leading coefficient.  Nothing here consults the
permutation-counting route, so the two volume computations cross-check
each other.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alcoved import AlcovedSpec, Bound, spec_for_Pkn, spec_for_hypersimplex
from .errors import ScaleCapError
from .numbers import eulerian, fuss_eulerian_catalan

DEFAULT_AMBIENT_CAP = 10

PROBE_SEED = 271828


class DegenerateDimensionError(ValueError):
    """The interpolated polynomial has degree < d: the polytope is lower-dimensional."""


def _coordinate_ranges(spec: AlcovedSpec, t: int) -> list[tuple[int, int]]:
    """Per-coordinate integer ranges in the t-fold dilate, from singleton bounds."""
    ranges = [(0, t)] * spec.ambient_n
    for bd in spec.bounds:
        if bd.j - bd.i != 1:
            continue
        lo, hi = ranges[bd.j - 1]
        if bd.lower is not None:
            lo = max(lo, t * bd.lower)
        if bd.upper is not None:
            hi = min(hi, t * bd.upper)
        ranges[bd.j - 1] = (lo, hi)
    return ranges


def _prefix_checkpoints(spec: AlcovedSpec, t: int) -> dict[int, tuple[int, int]]:
    checkpoints: dict[int, tuple[int, int]] = {}
    for bd in spec.bounds:
        if bd.j - bd.i == 1:
            continue
        if bd.i != 0:
            raise ValueError(
                f"only prefix-anchored or singleton bounds are supported, got {bd}"
            )
        lo, hi = checkpoints.get(bd.j, (0, t * spec.level_k))
        if bd.lower is not None:
            lo = max(lo, t * bd.lower)
        if bd.upper is not None:
            hi = min(hi, t * bd.upper)
        checkpoints[bd.j] = (lo, hi)
    return checkpoints


def count_dilated_lattice_points(spec: AlcovedSpec, t: int) -> int:
    """
    Number of integer points of the t-fold dilate: 0 <= x_i <= t,
    sum x_i = t * level_k, prefix sums within t-scaled bounds.
    """
    if t < 0:
        raise ValueError("dilation factor must be >= 0")
    target = t * spec.level_k
    ranges = _coordinate_ranges(spec, t)
    checkpoints = _prefix_checkpoints(spec, t)

    # dp[s] = number of ways for the processed prefix to sum to s
    dp = [0] * (target + 1)
    dp[0] = 1
    for index, (lo, hi) in enumerate(ranges, start=1):
        nxt = [0] * (target + 1)
        for s, ways in enumerate(dp):
            if not ways:
                continue
            for v in range(lo, min(hi, target - s) + 1):
                nxt[s + v] += ways
        if index in checkpoints:
            clo, chi = checkpoints[index]
            for s in range(target + 1):
                if s < clo or s > chi:
                    nxt[s] = 0
        dp = nxt
    return dp[target]


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for a, pa in enumerate(p):
        for b, qb in enumerate(q):
            out[a + b] += pa * qb
    return out


def interpolate_at_integers(values: Sequence[int]) -> list[Fraction]:
    """
    Exact coefficients (ascending) of the unique degree <= d polynomial
    through the points (0, values[0]), ..., (d, values[d]).
    """
    d = len(values) - 1
    coeffs = [Fraction(0)] * (d + 1)
    for i, yi in enumerate(values):
        basis = [Fraction(1)]
        denom = 1
        for j in range(d + 1):
            if j == i:
                continue
            basis = _poly_mul(basis, [Fraction(-j), Fraction(1)])
            denom *= i - j
        scale = Fraction(yi, denom)
        for p, c in enumerate(basis):
            coeffs[p] += c * scale
    return coeffs


def eval_poly(coeffs: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class EhrhartRecord:
    dimension: int
    evaluations: tuple[int, ...]
    coefficients: tuple[Fraction, ...]
    normalized_volume: int

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "evaluations": list(self.evaluations),
            "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coefficients],
            "normalized_volume": self.normalized_volume,
        }


def ehrhart_volume(spec: AlcovedSpec, cap: int = DEFAULT_AMBIENT_CAP) -> EhrhartRecord:
    """
    Evaluate the lattice-point count at t = 0..d, interpolate, and return
    the record with normalized volume d! * (leading coefficient).
    """
    if spec.ambient_n > cap:
        raise ScaleCapError(
            f"ambient dimension {spec.ambient_n} exceeds the cap of {cap}"
        )
    d = spec.ambient_n - 1
    evaluations = tuple(count_dilated_lattice_points(spec, t) for t in range(d + 1))
    if evaluations[0] != 1:
        raise ValueError(f"empty or unbounded polytope: h(0) = {evaluations[0]}")
    coeffs = interpolate_at_integers(evaluations)
    if coeffs[d] == 0:
        raise DegenerateDimensionError(
            f"leading Ehrhart coefficient vanishes: polytope has dimension < {d}"
        )
    for t, val in enumerate(evaluations):
        assert eval_poly(coeffs, t) == val
    volume = math.factorial(d) * coeffs[d]
    if volume.denominator != 1 or volume < 0:
        raise AssertionError(f"normalized volume {volume} is not a nonnegative integer")
    return EhrhartRecord(d, evaluations, tuple(coeffs), int(volume))


def spec_for_Pkni(k: int, n: int, i: int) -> AlcovedSpec:
    """
    The i-th cyclic copy of the P_{k,n} slice inside Delta(n+1, k(n+1)).
    Presented with prefix-anchored bounds after rotating coordinates by
    k*i (volume preserving); i = 0 is spec_for_Pkn(k, n) itself.
    """
    if not 0 <= i <= n:
        raise ValueError(f"piece index {i} outside 0..{n}")
    base = spec_for_Pkn(k, n)
    if i == 0:
        return base
    return AlcovedSpec(
        ambient_n=base.ambient_n,
        level_k=base.level_k,
        bounds=base.bounds,
        rotation=k * i,
    )


def _piece_membership(
    k: int, n: int, i: int, point: Sequence[Fraction], strict: bool
) -> bool:
    """Whether the point of Delta(n+1, k(n+1)) lies in the i-th cyclic piece."""
    N = k * (n + 1)
    for t in range(1, n + 1):
        total = sum(point[(k * i + s) % N] for s in range(k * t))
        if strict:
            if not total < t:
                return False
        elif not total <= t:
            return False
    return True


def _sample_hypersimplex_points(
    k: int, n: int, count: int, rng: random.Random, denominator: int = 97
) -> list[tuple[Fraction, ...]]:
    """Fixed-seed rational points of Delta(n+1, k(n+1)) by rejection sampling."""
    N = k * (n + 1)
    level = n + 1
    points = []
    attempts = 0
    while len(points) < count and attempts < 200_000:
        attempts += 1
        coords = [rng.randint(0, denominator) for _ in range(N - 1)]
        last = denominator * level - sum(coords)
        if not 0 <= last <= denominator:
            continue
        coords.append(last)
        points.append(tuple(Fraction(c, denominator) for c in coords))
    return points


@dataclass(frozen=True)
class SubdivisionReport:
    k: int
    n: int
    piece_volumes: tuple[int, ...]
    total_volume: int
    hypersimplex_volume: int
    expected_piece_volume: int
    expected_total_volume: int
    points_probed: int
    interior_hits: tuple[int, ...]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "piece_volumes": list(self.piece_volumes),
            "total_volume": self.total_volume,
            "hypersimplex_volume": self.hypersimplex_volume,
            "expected_piece_volume": self.expected_piece_volume,
            "expected_total_volume": self.expected_total_volume,
            "points_probed": self.points_probed,
            "interior_hits": list(self.interior_hits),
            "failures": list(self.failures),
            "passed": self.passed,
        }


def verify_subdivision(
    k: int,
    n: int,
    cap: int = DEFAULT_AMBIENT_CAP,
    samples: int = 120,
    seed: int = PROBE_SEED,
) -> SubdivisionReport:
    """
    Check that the n+1 cyclic pieces have equal volume summing to the
    hypersimplex volume, and probe random rational points for coverage
    and disjoint interiors.
    """
    failures: list[str] = []
    pieces = [ehrhart_volume(spec_for_Pkni(k, n, i), cap) for i in range(n + 1)]
    volumes = tuple(rec.normalized_volume for rec in pieces)
    if len(set(volumes)) != 1:
        failures.append(f"piece volumes differ: {volumes}")

    N = k * (n + 1)
    hyper = ehrhart_volume(spec_for_hypersimplex(n + 1, N), cap).normalized_volume
    expected_total = eulerian(n, N - 1)
    expected_piece = fuss_eulerian_catalan(k, n)
    total = sum(volumes)
    if hyper != expected_total:
        failures.append(
            f"hypersimplex volume {hyper} != Eulerian number {expected_total}"
        )
    if total != hyper:
        failures.append(f"piece volumes sum to {total}, hypersimplex has {hyper}")
    if any(v != expected_piece for v in volumes):
        failures.append(f"piece volumes {volumes} != expected {expected_piece}")

    rng = random.Random(seed)
    points = _sample_hypersimplex_points(k, n, samples, rng)
    interior_hits = [0] * (n + 1)
    for point in points:
        member = [
            _piece_membership(k, n, i, point, strict=False) for i in range(n + 1)
        ]
        if not any(member):
            failures.append(f"point {point} is covered by no piece")
            continue
        for i in range(n + 1):
            if not _piece_membership(k, n, i, point, strict=True):
                continue
            interior_hits[i] += 1
            for j in range(n + 1):
                if j != i and member[j]:
                    failures.append(
                        f"point {point} is interior to piece {i} but also in piece {j}"
                    )
    return SubdivisionReport(
        k=k,
        n=n,
        piece_volumes=volumes,
        total_volume=total,
        hypersimplex_volume=hyper,
        expected_piece_volume=expected_piece,
        expected_total_volume=expected_total,
        points_probed=len(points),
        interior_hits=tuple(interior_hits),
        failures=tuple(failures),
    )
