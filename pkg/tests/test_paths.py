import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulercat.numbers import catalan
from eulercat.paths import (
    chung_feller_orbit,
    enumerate_diagonal_paths,
    exceedance,
    exceedance_positions,
    h_step_vector,
    is_dyck_permutation,
    is_k_ballot,
    path_from_h_vector,
    path_from_perm,
    path_from_word,
    word_from_string,
    word_to_string,
)
from eulercat.permcore import complement, enumerate_by_descent_count

from conftest import permutations_st

binary_words = st.lists(st.integers(0, 1), max_size=12).map(tuple)


def path_points(path):
    """All lattice points visited by the path, starting at the origin."""
    x = y = 0
    points = [(0, 0)]
    for step in path:
        if step == "E":
            x += 1
        else:
            y += 1
        points.append((x, y))
    return points


def test_path_from_perm_examples():
    assert path_from_perm((1, 3, 2)) == "EN"
    assert path_from_perm((1, 2, 3, 4, 5)) == "EEEE"
    assert path_from_perm((2, 1, 3)) == "NE"


def test_is_k_ballot_examples():
    assert is_k_ballot(word_from_string("0101"), 1)
    assert not is_k_ballot(word_from_string("10"), 1)
    assert is_k_ballot(word_from_string("0010"), 2)
    assert not is_k_ballot(word_from_string("0100"), 2)
    with pytest.raises(ValueError):
        is_k_ballot((0, 1), 0)


def test_is_dyck_permutation_examples():
    assert is_dyck_permutation((1, 3, 2), 1)
    assert not is_dyck_permutation((2, 1, 3), 1)
    assert is_dyck_permutation((1, 2, 3, 4), 3)


def test_exceedance_examples():
    assert exceedance("EN") == 0
    assert exceedance("NE") == 1
    assert exceedance("EEENNN") == 0
    with pytest.raises(ValueError):
        exceedance("EEN")
    with pytest.raises(ValueError):
        exceedance("EX")


def test_exceedance_positions_examples():
    assert exceedance_positions("NE") == {0}
    assert exceedance_positions("EN") == frozenset()
    assert exceedance_positions("NNEE") == {0, 1}


def test_h_step_vector_examples():
    assert h_step_vector("EN") == (1, 0)
    assert h_step_vector("NE") == (0, 1)
    assert h_step_vector("EEENNN") == (3, 0, 0, 0)


def test_path_from_h_vector_examples():
    assert path_from_h_vector((1, 0)) == "EN"
    assert path_from_h_vector((0, 1)) == "NE"
    with pytest.raises(ValueError):
        path_from_h_vector((2, 0))


@pytest.mark.parametrize("n", range(7))
def test_h_vector_round_trip_is_bijective(n):
    for path in enumerate_diagonal_paths(n):
        assert path_from_h_vector(h_step_vector(path)) == path
    for c in itertools.product(range(n + 1), repeat=n + 1):
        if sum(c) == n:
            assert h_step_vector(path_from_h_vector(c)) == c


def test_chung_feller_orbit_examples():
    assert set(chung_feller_orbit("EN")) == {"EN", "NE"}
    assert chung_feller_orbit("") == ("",)
    assert exceedance("") == 0


@pytest.mark.parametrize("n", range(6))
def test_chung_feller_orbit_realizes_every_exceedance(n):
    for path in enumerate_diagonal_paths(n):
        orbit = chung_feller_orbit(path)
        assert sorted(exceedance(p) for p in orbit) == list(range(n + 1))
        assert path in orbit


@pytest.mark.parametrize("n", range(1, 7))
def test_exceedance_buckets_are_catalan(n):
    buckets = Counter(exceedance(p) for p in enumerate_diagonal_paths(n))
    assert buckets == {j: catalan(n) for j in range(n + 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_zero_exceedance_is_the_dyck_condition(n):
    for path in enumerate_diagonal_paths(n):
        below_diagonal = all(y <= x for x, y in path_points(path))
        assert (exceedance(path) == 0) == below_diagonal


@pytest.mark.parametrize("n", [1, 2, 3])
def test_complement_flips_exceedance(n):
    for w in enumerate_by_descent_count(2 * n + 1, n):
        assert exceedance(path_from_perm(complement(w))) == n - exceedance(
            path_from_perm(w)
        )


@given(binary_words, st.integers(1, 4))
def test_ballot_condition_matches_path_geometry(bits, k):
    path = path_from_word(bits)
    geometric = all(
        Fraction(y) <= Fraction(x, k) for x, y in path_points(path)
    )
    assert is_k_ballot(bits, k) == geometric


@given(permutations_st())
def test_path_length_and_word_round_trip(w):
    path = path_from_perm(w)
    assert len(path) == len(w) - 1
    bits = word_from_string(word_to_string(tuple(1 if s == "N" else 0 for s in path)))
    assert path_from_word(bits) == path
