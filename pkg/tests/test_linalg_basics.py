from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgedeg.linalg.scalar import I, ONE, ZERO, Gauss, format_scalar, parse_complex, parse_scalar
from hodgedeg.linalg.subspace import (
    DimensionMismatch,
    Subspace,
    determinant,
    identity,
    inverse,
    mat,
    matmul,
    nullspace,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(Gauss, rationals, rationals)


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@given(gauss, gauss)
def test_conjugation_is_a_field_automorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a * a.conjugate() == Gauss(a.norm())


def test_i_squared_and_powers():
    assert I * I == -ONE
    assert I**4 == ONE
    assert I**-1 == -I


@given(gauss)
def test_format_parse_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@pytest.mark.parametrize(
    "z, text",
    [
        (Gauss(Fraction(1, 2), -3), "1/2-3i"),
        (I, "0+1i"),
        (Gauss(-4), "-4"),
        (Gauss(0, Fraction(-2, 3)), "0-2/3i"),
    ],
)
def test_format_examples(z, text):
    assert format_scalar(z) == text


@pytest.mark.parametrize("bad", ["i", "1+i", "2/", "1/2+3", "abc", "1.5"])
def test_strict_grammar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@pytest.mark.parametrize(
    "text, z",
    [("i", I), ("2i", Gauss(0, 2)), ("1+i", Gauss(1, 1)), ("-i", -I), ("3/4i", Gauss(0, Fraction(3, 4))), ("5", Gauss(5))],
)
def test_loose_complex_input(text, z):
    assert parse_complex(text) == z


@pytest.mark.parametrize("bad", ["", "+", "1+", "ii", "i2"])
def test_loose_complex_rejects(bad):
    with pytest.raises(ValueError):
        parse_complex(bad)


small_ints = st.integers(-3, 3)


def vectors(d):
    return st.lists(st.lists(small_ints, min_size=d, max_size=d), max_size=d)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.just(d), vectors(d), vectors(d))))
def test_dimension_formula(args):
    d, a, b = args
    A, B = Subspace(d, a), Subspace(d, b)
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    assert (A & B) <= A and A <= A + B
    assert A.annihilator().annihilator() == A
    assert A.annihilator().dim == d - A.dim


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.lists(small_ints, min_size=d, max_size=d), min_size=d, max_size=d), vectors(d))))
def test_image_preimage_adjunction(args):
    d, m, vs = args
    m = mat(m)
    A = Subspace(d, vs)
    assert A.image(m).preimage(m) >= A
    assert A.preimage(m).image(m) <= A
    assert Subspace.kernel(m).dim + Subspace.image_of(m).dim == d


def test_nullspace_and_kernel():
    m = mat([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(m, 3)
    assert len(ns) == 2
    k = Subspace.kernel(m)
    assert k.contains([-2, 1, 0]) and k.contains([-3, 0, 1])
    assert not k.contains([1, 0, 0])


def test_conjugate_and_reality():
    s = Subspace(2, [[1, I]])
    assert not s.is_real()
    assert s.conjugate() == Subspace(2, [[1, -I]])
    assert (s + s.conjugate()).is_real()


def test_determinant_and_inverse():
    m = mat([[2, 1, 0], [1, 3, I], [0, 1, 1]])
    assert determinant(m) == Gauss(5, -2)
    assert matmul(m, inverse(m)) == identity(3)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace(2, [[1, 0]]) + Subspace(3, [[1, 0, 0]])


def test_perp_and_pairing():
    q = mat([[0, -1], [1, 0]])
    line = Subspace(2, [[1, 0]])
    assert line.perp(q) == line  # skew form: every line is isotropic
    assert line.pairs_to_zero(q, line)
    assert not line.pairs_to_zero(q, Subspace(2, [[0, 1]]))
