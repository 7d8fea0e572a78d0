import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgedeg.diamonds import (
    Diamond,
    HodgeNumbers,
    InvalidDiamond,
    InvalidHodgeNumbers,
    PrimitiveDiamond,
    WeightMismatch,
    enumerate_diamonds,
    is_valid_diamond,
    primitive_decomposition,
    pure_diamond,
    reconstruct,
    shift,
    subdomain_specs,
    validate_hodge_numbers,
)
from oracles import bab_family, brute_force_diamonds, gg_family, small_domains

H = HodgeNumbers.from_tuple
DOMAINS = list(small_domains(6, 6))
ALL = [(h, f) for h in DOMAINS for f in enumerate_diamonds(h)]


def test_hodge_numbers_indexing():
    h = H((1, 2, 3, 2, 1))
    assert h.weight == 4 and h[4] == 1 and h[2] == 3
    assert h.h(1, 3) == 2 and h.h(0, 3) == 0
    assert h.dim == 9 and str(h) == "(1,2,3,2,1)"


@pytest.mark.parametrize("values", [(2, 3), (1, -1, 1), (0, 0)])
def test_invalid_hodge_numbers(values):
    assert not validate_hodge_numbers(H(values))
    with pytest.raises(InvalidHodgeNumbers):
        enumerate_diamonds(H(values))


def test_pure_diamond_is_valid():
    h = H((1, 2, 2, 1))
    f = pure_diamond(h)
    assert f.as_dict() == {(3, 0): 1, (2, 1): 2, (1, 2): 2, (0, 3): 1}
    assert is_valid_diamond(h, f)


@pytest.mark.parametrize(
    "cells, condition",
    [
        ({(1, 0): 2, (0, 1): 1}, "hd1"),
        ({(1, 0): 1, (0, 1): 1, (0, 0): 1, (1, 1): 1, (2, 1): 1}, "hd1"),
    ],
)
def test_column_sum_violations(cells, condition):
    check = is_valid_diamond(H((1, 1)), Diamond(1, cells))
    assert condition in check.failed()


@pytest.mark.parametrize(
    "values, cells, condition",
    [
        ((1, 1), {(1, 0): 1, (1, 1): 1}, "hd2"),
        ((1, 1, 1), {(1, 0): 1, (0, 1): 1, (2, 2): 1}, "hd3"),
        ((1, 0, 1), {(0, 0): 1, (2, 2): 1}, "hd4"),
    ],
)
def test_condition_witnesses(values, cells, condition):
    check = is_valid_diamond(H(values), Diamond(len(values) - 1, cells))
    assert not check
    assert condition in check.failed()


def test_hd4_is_the_only_failure_for_an_inverted_string():
    check = is_valid_diamond(H((1, 0, 1)), Diamond(2, {(0, 0): 1, (2, 2): 1}))
    assert check.failed() == ["hd4"]
    assert check.violations[0].cell == (1, 1)


def test_weight_mismatch():
    with pytest.raises(WeightMismatch):
        is_valid_diamond(H((1, 1)), Diamond(2, {(1, 1): 1}))


def test_shift_moves_down_the_diagonal():
    f = Diamond(2, {(2, 2): 1, (1, 1): 3})
    assert shift(f, 1).as_dict() == {(1, 1): 1, (0, 0): 3}
    assert shift(f, -1).as_dict() == {(3, 3): 1, (2, 2): 3}
    assert shift(shift(f, 2), -2) == f


def test_primitive_examples_from_closed_forms():
    for g in range(1, 6):
        for r, f in gg_family(g).items():
            j = primitive_decomposition(f)
            assert j.as_dict() == {k: v for k, v in {(1, 0): g - r, (0, 1): g - r, (1, 1): r}.items() if v}
    for b in range(4):
        for a in range(7):
            for (r, s), f in bab_family(b, a).items():
                expected = {
                    (2, 0): b - r - s, (0, 2): b - r - s,
                    (2, 1): s, (1, 2): s,
                    (1, 1): a - r - 2 * s, (2, 2): r,
                }
                assert primitive_decomposition(f).as_dict() == {k: v for k, v in expected.items() if v}


def test_primitive_rejects_non_diamond():
    with pytest.raises(InvalidDiamond):
        primitive_decomposition(Diamond(2, {(1, 1): 1, (2, 2): 2}))


def test_primitive_diamond_window():
    with pytest.raises(ValueError):
        PrimitiveDiamond(2, {(0, 1): 1})


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALL))
def test_round_trips(hf):
    h, f = hf
    j = primitive_decomposition(f)
    assert reconstruct(j) == f
    assert primitive_decomposition(reconstruct(j)) == j


def test_subdomain_specs_of_nodal_diamond():
    f = gg_family(2)[1]
    specs = {s.level: s.hodge_numbers() for s in subdomain_specs(primitive_decomposition(f))}
    assert specs == {0: H((1, 1)), 1: H((0, 1, 0))}


@pytest.mark.parametrize(
    "values, count",
    [((2, 2), 3), ((1, 2, 1), 3), ((1, 0, 1), 1), ((2, 4, 2), 6), ((1, 2, 2, 1), 8), ((3, 6, 3), 10)],
)
def test_enumeration_counts(values, count):
    assert len(enumerate_diamonds(H(values))) == count


def test_one_a_one_family():
    for a, count in [(0, 1), (1, 2), (2, 3), (5, 3)]:
        fs = enumerate_diamonds(H((1, a, 1)))
        assert len(fs) == count
        assert pure_diamond(H((1, a, 1))) in fs


def test_closed_form_families():
    for g in range(1, 6):
        assert set(enumerate_diamonds(H((g, g)))) == set(gg_family(g).values())
    for b in range(4):
        for a in range(7):
            if a + b:
                assert set(enumerate_diamonds(H((b, a, b)))) == set(bab_family(b, a).values())


@pytest.mark.parametrize("h", [h for h in DOMAINS if h.weight <= 4], ids=str)
def test_enumeration_matches_oracle(h):
    fs = enumerate_diamonds(h)
    assert len(set(fs)) == len(fs)
    assert fs == sorted(fs)
    assert set(fs) == brute_force_diamonds(h)


def test_enumeration_is_deterministic():
    h = H((1, 2, 3, 2, 1))
    assert enumerate_diamonds(h) == enumerate_diamonds(h)


def test_render_shows_grid():
    # rows run from q = n down to q = 0, columns from p = 0
    assert gg_family(1)[1].render() == ". 1\n1 ."
    assert gg_family(2)[0].render() == "2 .\n. 2"
