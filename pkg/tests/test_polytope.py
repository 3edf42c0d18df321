from __future__ import annotations

from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hflcalc import catalog
from hflcalc.errors import EmptySupport, TrivialComponent, ZeroAlexander
from hflcalc.geometry import Polygon, convex_hull, halfplane_intersection
from hflcalc.laurent import newton_polytope
from hflcalc.polytope import (
    dual_thurston_polytope,
    floer_polytope,
    newton_compare,
    support_euler,
    support_hat,
    thurston_x,
    y_norm,
)


def pts(*xs):
    return [(Fr(a), Fr(b)) for a, b in xs]


def test_hull_basics():
    assert convex_hull(pts((0, 0), (1, 0), (1, 1), (0, 1), (Fr(1, 2), Fr(1, 2)))) == pts((0, 0), (1, 0), (1, 1), (0, 1))
    assert convex_hull(pts((0, 0), (1, 1), (2, 2))) == pts((0, 0), (2, 2))
    assert Polygon(pts((1, 1))).vertices == tuple(pts((1, 1)))


def test_halfplanes_square():
    cons = [((1, 0), 1), ((-1, 0), 1), ((0, 1), 2), ((0, -1), 2)]
    assert halfplane_intersection(cons) == Polygon(pts((1, 2), (-1, 2), (-1, -2), (1, -2)))


coord = st.fractions(min_value=-5, max_value=5, max_denominator=4)
point_sets = st.lists(st.tuples(coord, coord), min_size=1, max_size=12)


@given(point_sets)
def test_hull_contains_inputs(points):
    poly = Polygon(points)
    for p in points:
        assert poly.contains(p)
    assert set(poly.vertices) <= {(Fr(a), Fr(b)) for a, b in points}


@given(point_sets, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_support_is_max(points, u):
    poly = Polygon(points)
    assert poly.support(u) == max(u[0] * a + u[1] * b for a, b in points)


@given(point_sets)
def test_halfplanes_recover_hull(points):
    poly = Polygon(points)
    dirs = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    for n in poly.edge_normals():
        dirs.add(n)
    rebuilt = halfplane_intersection([(u, poly.support(u)) for u in dirs])
    assert rebuilt == poly


def test_l7n1_norms(l7n1):
    assert thurston_x(l7n1, (1, 0)).x_value == 1
    assert thurston_x(l7n1, (0, 1)).x_value == 3
    dual = dual_thurston_polytope(l7n1)
    assert dual.as_strings() == [["-1/2", "-3/2"], ["1/2", "3/2"]]
    assert dual == newton_polytope(l7n1.delta_link)
    assert dual_thurston_polytope(l7n1, scale="full") == dual.scaled(2)
    assert newton_compare(l7n1).relation == "equal"


def test_b20(b20):
    cmp = newton_compare(b20)
    assert cmp.relation == "equal" and cmp.hull_equals_euler_hull
    assert thurston_x(b20, (1, 0)).x_value == 3


def test_b238_sym():
    link = catalog.link("b(-2,3,8)-sym")
    dual = dual_thurston_polytope(link)
    assert dual == Polygon(pts((-2, -3), (1, 1), (2, 3), (-1, -1)))
    assert newton_compare(link).relation == "equal"


def test_split_trefoils(trefoils):
    assert floer_polytope(trefoils) == Polygon(pts((-1, -1), (1, -1), (1, 1), (-1, 1)))
    half = Fr(1, 2)
    assert dual_thurston_polytope(trefoils) == Polygon(pts((-half, -half), (half, -half), (half, half), (-half, half)))
    with pytest.raises(ZeroAlexander):
        newton_compare(trefoils)


def test_split_unknots():
    with pytest.raises(TrivialComponent):
        dual_thurston_polytope(catalog.link("split-unknots"))


def test_y_norm_empty():
    with pytest.raises(EmptySupport):
        y_norm([], (1, 0))


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)", "b(-2,3,8)-sym"])
def test_newton_inside_dual(name):
    link = catalog.link(name)
    assert dual_thurston_polytope(link).contains_polygon(newton_polytope(link.delta_link))


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)", "b(-2,3,8)-sym", "split-trefoils"])
def test_central_symmetry(name):
    link = catalog.link(name)
    assert floer_polytope(link).is_centrally_symmetric()


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)", "b(-2,3,8)-sym"])
def test_euler_hull_equals_floer_hull(name):
    link = catalog.link(name)
    assert support_euler(link) <= support_hat(link)
    assert Polygon(support_euler(link)) == floer_polytope(link)
