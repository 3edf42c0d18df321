"""Floer polytope, Thurston norm and dual Thurston polytope of a two-component link.

The Thurston norm is read off the support of the hat groups:
x(h) = 2 y(h) - |h1| - |h2| with y the support function of the hull of
the support. ``dual_thurston_polytope`` returns by default the polygon
whose support function is x/2, the normalization in which it is compared
with the Newton polytope of the Alexander polynomial; ``scale="full"``
gives the polygon whose support function is x itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    EmptySupport,
    NegativeNorm,
    TrivialComponent,
    VerificationFailed,
    WindowTooSmall,
    ZeroAlexander,
)
from .geometry import Point, Polygon, as_point, halfplane_intersection
from .hflhat import hfl_hat_d
from .hflminus import GradedDim
from .hfunc import DEFAULT_MARGIN, HFunction, link_h
from .laurent import newton_polytope
from .linkdata import LinkData

AXES: tuple[Point, ...] = tuple(as_point(u) for u in ((1, 0), (-1, 0), (0, 1), (0, -1)))


def hat_table(link: LinkData, margin: int = DEFAULT_MARGIN, retries: int = 2) -> tuple[HFunction, dict[tuple[int, int], GradedDim]]:
    """Hat groups at every window point, with an empty outer ring."""
    for attempt in range(retries + 1):
        h = link_h(link, margin + 2 * attempt)
        cs = h.coords()
        table = {(d1, d2): hfl_hat_d(h, d1, d2) for d2 in cs for d1 in cs}
        edge = (cs[0], cs[-1])
        if not any(g for (d1, d2), g in table.items() if d1 in edge or d2 in edge):
            return h, table
    raise WindowTooSmall(f"hat groups of {link.name or 'link'} reach the window border")


def _as_points(doubled: Iterable[tuple[int, int]]) -> frozenset[Point]:
    return frozenset((Fraction(a, 2), Fraction(b, 2)) for a, b in doubled)


def support_hat(link: LinkData, margin: int = DEFAULT_MARGIN) -> frozenset[Point]:
    _, table = hat_table(link, margin)
    return _as_points(p for p, g in table.items() if g)


def support_euler(link: LinkData, margin: int = DEFAULT_MARGIN) -> frozenset[Point]:
    _, table = hat_table(link, margin)
    return _as_points(p for p, g in table.items() if g.euler)


def floer_polytope(link: LinkData) -> Polygon:
    return Polygon(support_hat(link))


def y_norm(support: Iterable, h) -> Fraction:
    pts = [as_point(s) for s in support]
    if not pts:
        raise EmptySupport("y-norm of an empty support")
    u = as_point(h)
    return max(abs(u[0] * s[0] + u[1] * s[1]) for s in pts)


@dataclass(frozen=True)
class NormReport:
    direction: Point
    y_value: Fraction
    x_value: Fraction

    def as_dict(self) -> dict[str, str]:
        from .geometry import format_rational

        return {
            "direction": [format_rational(c) for c in self.direction],
            "y": format_rational(self.y_value),
            "x": format_rational(self.x_value),
        }


def _is_unknot(link: LinkData, component: int) -> bool:
    return link.delta(component).terms == {0: 1}


def check_components(link: LinkData) -> None:
    if link.is_split and (_is_unknot(link, 1) or _is_unknot(link, 2)):
        raise TrivialComponent(f"{link.name or 'link'} has a split unknotted component")


def _x_from_support(support, h) -> tuple[Fraction, Fraction]:
    u = as_point(h)
    y = y_norm(support, u)
    return y, 2 * y - abs(u[0]) - abs(u[1])


def thurston_x(link: LinkData, h, support: Iterable | None = None) -> NormReport:
    check_components(link)
    pts = support_hat(link) if support is None else support
    y, x = _x_from_support(pts, h)
    if x < 0:
        raise NegativeNorm(f"x = {x} in direction {tuple(h)}")
    return NormReport(as_point(h), y, x)


def _directions(support_hull: Polygon) -> list[Point]:
    dirs = set(AXES)
    for n in support_hull.scaled(2).edge_normals():
        dirs.add(as_point(n))
        dirs.add((-n[0], -n[1]))
    return sorted(dirs)


def dual_thurston_polytope(link: LinkData, scale: str = "half", support: Iterable | None = None) -> Polygon:
    """Polygon with support function x/2 (``half``) or x (``full``)."""
    if scale not in ("half", "full"):
        raise ValueError("scale must be 'half' or 'full'")
    check_components(link)
    pts = support_hat(link) if support is None else frozenset(as_point(p) for p in support)
    factor = Fraction(1, 2) if scale == "half" else Fraction(1)
    hull = Polygon(pts)
    dirs = _directions(hull)
    cons = []
    for u in dirs:
        _, x = _x_from_support(pts, u)
        if x < 0:
            raise NegativeNorm(f"x = {x} in direction {u}")
        cons.append((u, factor * x))
    poly = halfplane_intersection(cons)
    if poly.is_empty():
        raise VerificationFailed("the norm constraints have no common solution")
    for u, c in cons:
        if poly.support(u) != c:
            raise VerificationFailed(f"support in direction {u} is {poly.support(u)}, expected {c}")
    return poly


@dataclass(frozen=True)
class NewtonComparison:
    relation: str
    dual_thurston: Polygon
    newton: Polygon
    hull_equals_euler_hull: bool

    def as_dict(self) -> dict:
        return {
            "relation": self.relation,
            "dual_thurston": self.dual_thurston.as_strings(),
            "newton": self.newton.as_strings(),
            "floer_hull_equals_euler_hull": self.hull_equals_euler_hull,
        }


def newton_compare(link: LinkData) -> NewtonComparison:
    if link.is_split:
        raise ZeroAlexander("Delta_L vanishes, so there is no Newton polytope (split-like link)")
    _, table = hat_table(link)
    supp = _as_points(p for p, g in table.items() if g)
    euler = _as_points(p for p, g in table.items() if g.euler)
    dual = dual_thurston_polytope(link, support=supp)
    newton = newton_polytope(link.delta_link)
    if dual == newton:
        relation = "equal"
    elif dual.contains_polygon(newton):
        relation = "newton_strictly_inside"
    else:
        relation = "incomparable"
    return NewtonComparison(relation, dual, newton, Polygon(supp) == Polygon(euler))
