from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hflcalc.errors import EmptyPolytope, HalfIntegralExponent, NonUnitAugmentation, ParityError
from hflcalc.laurent import (
    HalfInt,
    Laurent1,
    Laurent2,
    apply_unit,
    newton_polytope,
    substitute_unit,
    symmetry_defect,
    torsion_series,
)

TREFOIL = Laurent1.from_terms([(-1, 1), (0, -1), (1, 1)])


def test_halfint_parsing():
    assert HalfInt.of("3/2").doubled == 3
    assert HalfInt.of("-1/2").doubled == -1
    assert HalfInt.of(2).doubled == 4
    assert HalfInt.of(Fraction(-5, 2)).doubled == -5
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-4)) == "-2"
    with pytest.raises(ValueError):
        HalfInt.of("1/3")
    with pytest.raises(TypeError):
        HalfInt.of(True)


def test_mixed_parity_rejected():
    with pytest.raises(ParityError):
        Laurent1({0: 1, 1: 1})
    with pytest.raises(ParityError):
        Laurent2({(1, 1): 1, (0, 1): 1})


def test_arithmetic():
    one_minus_t = Laurent1.from_terms([(0, 1), (1, -1)])
    geo = Laurent1.from_terms([(0, 1), (1, 1), (2, 1)])
    assert one_minus_t * geo == Laurent1.from_terms([(0, 1), (3, -1)])
    assert (TREFOIL - TREFOIL).is_zero()
    assert TREFOIL.mirror() == TREFOIL
    assert TREFOIL.augmentation() == 1
    assert TREFOIL.coefficient(0) == -1


def test_unit_ratio():
    shifted = TREFOIL.shift(4) * -1
    assert shifted.unit_ratio(TREFOIL) == (-1, 4)
    assert Laurent1({0: 1, 2: 2}).unit_ratio(TREFOIL) is None


def test_torsion_series_trefoil():
    a = torsion_series(TREFOIL)
    assert [a[k] for k in range(-3, 4)] == [1, 1, 1, 0, 1, 0, 0]


def test_torsion_series_errors():
    with pytest.raises(NonUnitAugmentation):
        torsion_series(Laurent1({0: 2}))
    with pytest.raises(HalfIntegralExponent):
        torsion_series(Laurent1({1: 1}))


def test_substitution_and_symmetry():
    p = Laurent2.from_terms([("1/2", "3/2", 1), ("-1/2", "-3/2", 1)])
    assert substitute_unit(p, 2) == Laurent1.from_terms([("1/2", 1), ("-1/2", 1)])
    assert substitute_unit(p, 1) == Laurent1.from_terms([("3/2", 1), ("-3/2", 1)])
    ok, unit = symmetry_defect(p)
    assert ok and unit == (1, HalfInt(0), HalfInt(0))
    q = p.shift(2, 0)
    ok, unit = symmetry_defect(q)
    assert ok and unit[1] == HalfInt.of(2)
    asym = Laurent2.from_terms([(-2, -3, 1), (-1, -2, 1), (0, 0, 1), (1, 1, 1), (2, 3, 1)])
    assert not symmetry_defect(asym)[0]


def test_newton_polytope():
    p = Laurent2.from_terms([("1/2", "3/2", 1), ("-1/2", "-3/2", 1)])
    poly = newton_polytope(p)
    assert poly.as_strings() == [["-1/2", "-3/2"], ["1/2", "3/2"]]
    with pytest.raises(EmptyPolytope):
        newton_polytope(Laurent2())


small = st.integers(-4, 4)
poly1 = st.dictionaries(st.integers(-5, 5).map(lambda e: 2 * e), st.integers(-3, 3), max_size=6).map(Laurent1)
poly2 = st.dictionaries(
    st.tuples(small, small).map(lambda ij: (2 * ij[0] + 1, 2 * ij[1] + 1)), st.integers(-3, 3), max_size=6
).map(Laurent2)


@given(poly1)
def test_torsion_differences(p):
    p = p + Laurent1({0: 1 - p.augmentation()})
    a = torsion_series(p)
    for k in range(a.window_lo - 2, a.window_hi + 3):
        assert a[k] - a[k + 1] == p.coefficient(k)


@given(poly1, poly1)
def test_augmentation_multiplicative(p, q):
    assert (p * q).augmentation() == p.augmentation() * q.augmentation()


@given(poly2)
def test_mirror_involution(p):
    assert p.mirror().mirror() == p
    ok, unit = symmetry_defect(p)
    if ok:
        assert apply_unit(p, unit) == p


@given(poly2)
def test_newton_contains_exponents(p):
    if p.is_zero():
        return
    poly = newton_polytope(p)
    for i, j in p.terms:
        assert poly.contains((Fraction(i, 2), Fraction(j, 2)))
