"""
Exact big-integer number families: Eulerian, Catalan, Eulerian-Catalan,
and the Fuss-type quotients A(n, kn+k-1)/(n+1).

Everything is computed with Python's arbitrary-precision integers.  The
Eulerian numbers use the two-term recurrence in one direction only; the
row symmetry A(m, n) = A(n-m-1, n) is exercised by the test suite as an
independent check, never as a computation shortcut.
"""
from __future__ import annotations

import functools
import math


@functools.lru_cache(maxsize=None)
def _eulerian(m: int, n: int) -> int:
    if m < 0 or m > n - 1:
        return 0
    if n == 1:
        return 1  # A(0, 1); out-of-range m handled above
    return (n - m) * _eulerian(m - 1, n - 1) + (m + 1) * _eulerian(m, n - 1)


def eulerian(m: int, n: int) -> int:
    """Number of permutations of [n] with m descents; 0 for m out of range."""
    if n <= 0:
        raise ValueError("n must be >= 1")
    if n > 500:
        # recursion depth guard: fill the memo table row by row
        for nn in range(1, n + 1, 400):
            for mm in range(nn):
                _eulerian(mm, nn)
    return _eulerian(m, n)


def _exact_quotient(numerator: int, divisor: int, what: str) -> int:
    q, r = divmod(numerator, divisor)
    if r != 0:
        raise AssertionError(
            f"{what}: {numerator} is not divisible by {divisor}; "
            "this indicates a bug in the Eulerian recurrence"
        )
    return q


def eulerian_catalan(n: int) -> int:
    """EC_n = A(n, 2n+1) / (n+1); the quotient is provably integral."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _exact_quotient(eulerian(n, 2 * n + 1), n + 1, f"EC_{n}")


def fuss_eulerian_catalan(k: int, n: int) -> int:
    """A(n, kn+k-1) / (n+1), counting (k-1)-Dyck permutations; k >= 2."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    return _exact_quotient(
        eulerian(n, k * n + k - 1), n + 1, f"fuss({k}, {n})"
    )


def catalan(n: int) -> int:
    """binomial(2n, n) / (n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)
