import math

import pytest

from eulercat.numbers import catalan, eulerian, eulerian_catalan, fuss_eulerian_catalan
from eulercat.paths import enumerate_diagonal_paths

from conftest import brute_descent_census


def test_eulerian_small_values_against_brute_force():
    assert eulerian(0, 5) == 1
    assert eulerian(1, 3) == brute_descent_census(3)[1] == 4
    assert eulerian(2, 5) == brute_descent_census(5)[2] == 66


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_matches_exhaustive_census(n):
    census = brute_descent_census(n)
    for m in range(n):
        assert eulerian(m, n) == census.get(m, 0)


def test_eulerian_out_of_range_and_errors():
    assert eulerian(-1, 4) == 0
    assert eulerian(4, 4) == 0
    with pytest.raises(ValueError):
        eulerian(0, 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_eulerian_row_symmetry_and_sum(n):
    for m in range(n):
        assert eulerian(m, n) == eulerian(n - m - 1, n)
    assert sum(eulerian(m, n) for m in range(n)) == math.factorial(n)


def test_eulerian_catalan_values():
    assert [eulerian_catalan(n) for n in range(5)] == [1, 2, 22, 604, 31238]


@pytest.mark.parametrize("n", range(1, 11))
def test_eulerian_catalan_equals_twice_off_central(n):
    assert eulerian_catalan(n) == 2 * eulerian(n, 2 * n)


def test_fuss_values():
    assert fuss_eulerian_catalan(2, 2) == eulerian_catalan(2) == 22
    assert fuss_eulerian_catalan(3, 1) == 13
    assert fuss_eulerian_catalan(4, 0) == 1


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("n", range(7))
def test_fuss_divisibility_identity(k, n):
    assert (n + 1) * fuss_eulerian_catalan(k, n) == eulerian(n, k * n + k - 1)


def test_fuss_rejects_small_k():
    with pytest.raises(ValueError):
        fuss_eulerian_catalan(1, 3)


def test_catalan_values_against_path_enumeration():
    from eulercat.paths import exceedance

    assert catalan(0) == 1
    # C(n) counts the diagonal paths with exceedance 0

    assert catalan(3) == sum(
        1 for p in enumerate_diagonal_paths(3) if exceedance(p) == 0
    ) == 5
    assert catalan(8) == sum(
        1 for p in enumerate_diagonal_paths(8) if exceedance(p) == 0
    ) == 1430


def test_big_values_stay_exact():
    # the central Eulerian number near n = 10 exceeds 64 bits
    assert eulerian(10, 21) > 2**63
    assert eulerian_catalan(10) * 11 == eulerian(10, 21)
