import pytest

from eulercat.alcoved import (
    AlcovedSpec,
    Bound,
    all_subsets,
    exceedance_position_census,
    spec_for_P2n_flipped,
    spec_for_Pkn,
    spec_for_hypersimplex,
    subset_key,
    w_set_count,
)
from eulercat.errors import ScaleCapError
from eulercat.numbers import eulerian, eulerian_catalan, fuss_eulerian_catalan
from eulercat.orbit import count_dyck_permutations


def prefix_bounds(spec):
    return {(b.i, b.j): (b.lower, b.upper) for b in spec.bounds if not b.box}


def test_spec_for_hypersimplex_shape():
    spec = spec_for_hypersimplex(3, 6)
    assert spec.ambient_n == 6 and spec.level_k == 3
    assert prefix_bounds(spec) == {}
    with pytest.raises(ValueError):
        spec_for_hypersimplex(0, 4)
    with pytest.raises(ValueError):
        spec_for_hypersimplex(4, 4)


def test_spec_for_pkn_examples():
    spec = spec_for_Pkn(2, 2)
    assert spec.ambient_n == 6 and spec.level_k == 3
    assert prefix_bounds(spec) == {(0, 2): (None, 1), (0, 4): (None, 2)}
    spec = spec_for_Pkn(2, 1)
    assert spec.ambient_n == 4 and spec.level_k == 2
    assert prefix_bounds(spec) == {(0, 2): (None, 1)}
    spec = spec_for_Pkn(3, 1)
    assert spec.ambient_n == 6 and spec.level_k == 2
    assert prefix_bounds(spec) == {(0, 3): (None, 1)}


def test_spec_for_p2n_flipped_examples():
    assert spec_for_P2n_flipped(2, ()) == spec_for_Pkn(2, 2)
    spec = spec_for_P2n_flipped(2, {1})
    assert prefix_bounds(spec) == {(0, 2): (1, None), (0, 4): (None, 2)}
    spec = spec_for_P2n_flipped(2, {1, 2})
    assert prefix_bounds(spec) == {(0, 2): (1, None), (0, 4): (2, None)}
    with pytest.raises(ValueError):
        spec_for_P2n_flipped(2, {3})


def test_spec_validation():
    with pytest.raises(ValueError):
        AlcovedSpec(ambient_n=4, level_k=2, bounds=(Bound(2, 1, upper=1),))
    with pytest.raises(ValueError):
        AlcovedSpec(ambient_n=4, level_k=2, bounds=(Bound(0, 2, lower=2, upper=1),))


def test_w_set_count_hypersimplex_examples():
    assert w_set_count(spec_for_hypersimplex(3, 6)) == 66
    assert w_set_count(spec_for_hypersimplex(1, 2)) == 1
    assert w_set_count(spec_for_hypersimplex(2, 4)) == 4


@pytest.mark.parametrize("n", range(2, 8))
def test_w_set_count_hypersimplex_is_eulerian(n):
    for k in range(1, n):
        assert w_set_count(spec_for_hypersimplex(k, n)) == eulerian(k - 1, n - 1)


def test_w_set_count_pkn_examples():
    assert w_set_count(spec_for_Pkn(2, 2)) == 22
    assert w_set_count(spec_for_Pkn(3, 1)) == 13


@pytest.mark.parametrize("k,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_w_set_count_pkn_matches_fuss_and_dyck(k, n):
    count = w_set_count(spec_for_Pkn(k, n))
    assert count == fuss_eulerian_catalan(k, n)
    assert count == count_dyck_permutations(n, k)


def test_w_set_count_scale_cap():
    with pytest.raises(ScaleCapError):
        w_set_count(spec_for_Pkn(2, 6))  # S_13


def test_exceedance_position_census_examples():
    assert exceedance_position_census(1) == {(): 2, (1,): 2}
    census = exceedance_position_census(2)
    assert census == {(): 22, (1,): 11, (2,): 11, (1, 2): 22}
    assert sum(census.values()) == eulerian(2, 5)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_census_entries_match_flipped_spec_counts(n):
    census = exceedance_position_census(n)
    assert sum(census.values()) == eulerian(n, 2 * n + 1)
    for T, count in census.items():
        assert count == w_set_count(spec_for_P2n_flipped(n, T))
    for j in range(n + 1):
        total_j = sum(c for T, c in census.items() if len(T) == j)
        assert total_j == eulerian_catalan(n)


def test_subset_helpers():
    assert all_subsets(2) == [(), (1,), (2,), (1, 2)]
    assert subset_key(()) == "{}"
    assert subset_key((2, 1)) == "{1,2}"


def test_spec_json_shape():
    record = spec_for_Pkn(2, 2).to_json_dict()
    assert record["ambient_n"] == 6 and record["level_k"] == 3
    assert record["bounds"] == [
        {"i": 0, "j": 2, "b": None, "c": 1},
        {"i": 0, "j": 4, "b": None, "c": 2},
    ]
