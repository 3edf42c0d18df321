from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hflcalc import catalog
from hflcalc.errors import NotLSpaceKnotSeries, NotLSpaceLinkData, ParityError
from hflcalc.hfunc import (
    KnotH,
    horizontal_drop,
    knot_h,
    lattice_point,
    link_h,
    symmetry_failures,
    vertical_drop,
    vertical_fill,
    window_radius,
)
from hflcalc.laurent import Laurent1, Laurent2, torsion_series
from hflcalc.linkdata import LinkData
from strategies import lspace_knot_delta, split_link, torus_link

import random

# h on s1, s2 = -3..3; rows from s2 = 3 down
L7N1_H = [
    [4, 3, 2, 1, 0, 0, 0],
    [4, 3, 2, 1, 0, 0, 0],
    [4, 3, 2, 1, 1, 1, 1],
    [4, 3, 2, 1, 1, 1, 1],
    [5, 4, 3, 2, 2, 2, 2],
    [5, 4, 3, 3, 3, 3, 3],
    [6, 5, 4, 4, 4, 4, 4],
]
# h on s1, s2 = -4..4; rows from s2 = 4 down
B20_H = [
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 1, 0, 0, 0],
    [5, 4, 3, 2, 2, 1, 1, 1, 1],
    [5, 4, 3, 3, 2, 2, 2, 2, 2],
    [6, 5, 4, 3, 3, 3, 3, 3, 3],
    [7, 6, 5, 4, 4, 4, 4, 4, 4],
    [8, 7, 6, 5, 5, 5, 5, 5, 5],
]


def _grid(h, r):
    return [[h(s1, s2) for s1 in range(-r, r + 1)] for s2 in range(r, -r - 1, -1)]


def test_trefoil_knot_h():
    k = knot_h(torsion_series(Laurent1.from_terms([(-1, 1), (0, -1), (1, 1)])))
    assert [k(s) for s in range(-3, 3)] == [3, 2, 1, 1, 0, 0]
    assert k.genus_bound == 1


def test_knot_h_rejects_bad_series():
    with pytest.raises(NotLSpaceKnotSeries):
        KnotH(torsion_series(Laurent1.from_terms([(-1, -1), (0, 3), (1, -1)])))


def test_lattice_point():
    assert lattice_point(("1/2", "-3/2"), 1) == (1, -3)
    with pytest.raises(ParityError):
        lattice_point((0, 0), 1)


def test_l7n1_grid(h_l7n1):
    assert _grid(h_l7n1, 3) == L7N1_H


def test_b20_grid(h_b20):
    assert _grid(h_b20, 4) == B20_H
    assert h_b20(0, 0) == h_b20(-1, 0) == 2


def test_b238_grid():
    h = link_h(catalog.link("b(-2,3,8)-sym"))
    for (d1, d2), v in catalog.b_2_3_8_values().items():
        assert h.hd(d1, d2) == v


def test_split_is_sum(trefoils):
    h = link_h(trefoils)
    for s1 in range(-6, 7):
        for s2 in range(-6, 7):
            assert h(s1, s2) == h.h1(s1) + h.h2(s2)


def test_both_fills_agree(b20):
    r = window_radius(b20)
    assert vertical_fill(b20, r) == link_h(b20).grid()


def test_extension_outside_window(h_l7n1):
    r = h_l7n1.radius
    assert h_l7n1.hd(r + 20, 0) == h_l7n1.h2(-1)
    assert h_l7n1.hd(0, r + 20) == h_l7n1.h1(-1)
    far = h_l7n1.hd(-r - 20, -r - 20)
    assert far == h_l7n1.hd(r + 20, r + 20) + r + 20


def test_rejects_inconsistent(l7n1):
    p = Laurent2.from_terms([("1/2", "3/2", 3), ("-1/2", "-3/2", 3)])
    with pytest.raises(NotLSpaceLinkData):
        link_h(LinkData.build("x", 2, p, l7n1.delta_1, l7n1.delta_2))


def _check_h(link):
    h = link_h(link)
    cs = h.coords()
    for d1 in cs[1:]:
        for d2 in cs[1:]:
            assert h.hd(d1 - 2, d2) - h.hd(d1, d2) == horizontal_drop(link, d1, d2)
            assert h.hd(d1, d2 - 2) - h.hd(d1, d2) == vertical_drop(link, d1, d2)
    assert symmetry_failures(h) == []
    for d1 in cs:
        for d2 in cs:
            assert h.hd(-d1, -d2) == h.hd(d1, d2) + (d1 + d2) // 2


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)", "split-trefoils", "split-unknots", "b(-2,3,8)-sym"])
def test_catalog_consistency(name):
    _check_h(catalog.link(name))


def test_printed_b238_breaks_symmetry():
    assert symmetry_failures(link_h(catalog.link("b(-2,3,8)")))


@pytest.mark.parametrize("n", range(1, 6))
def test_torus_links(n):
    _check_h(torus_link(n))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_split_links(seed):
    _check_h(split_link(random.Random(seed)))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_random_knot_h_symmetry(seed):
    k = knot_h(torsion_series(lspace_knot_delta(random.Random(seed), 5)))
    for s in range(-8, 9):
        assert k(-s) == k(s) + s
        assert k(s - 1) - k(s) in (0, 1)
