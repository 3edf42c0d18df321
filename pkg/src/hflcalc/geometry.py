"""Exact planar convex geometry over the rationals.

Polygons may be degenerate: an empty polygon, a single point and a segment
are all valid values. No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EmptyPolytope

Point = tuple[Fraction, Fraction]


def as_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable) -> list[Point]:
    """Monotone-chain hull, counter-clockwise, collinear points dropped.

    The returned list starts at the lexicographically smallest point.
    """
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Polygon:
    """A convex polygon with rational vertices listed counter-clockwise."""

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Iterable = ()):
        self._vertices: tuple[Point, ...] = tuple(convex_hull(vertices))

    @classmethod
    def from_points(cls, points: Iterable) -> "Polygon":
        return cls(points)

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def is_empty(self) -> bool:
        return not self._vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polygon):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        inner = ", ".join(f"({format_rational(x)}, {format_rational(y)})" for x, y in self._vertices)
        return f"Polygon([{inner}])"

    def support(self, direction) -> Fraction:
        """max over the polygon of <z, direction>."""
        if not self._vertices:
            raise EmptyPolytope("support function of an empty polygon")
        u = as_point(direction)
        return max(u[0] * v[0] + u[1] * v[1] for v in self._vertices)

    def contains(self, point) -> bool:
        p = as_point(point)
        vs = self._vertices
        if not vs:
            return False
        if len(vs) == 1:
            return p == vs[0]
        if len(vs) == 2:
            a, b = vs
            if cross(a, b, p) != 0:
                return False
            return min(a, b) <= p <= max(a, b)
        n = len(vs)
        return all(cross(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))

    def contains_polygon(self, other: "Polygon") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def scaled(self, k) -> "Polygon":
        k = Fraction(k)
        return Polygon((k * x, k * y) for x, y in self._vertices)

    def negated(self) -> "Polygon":
        return Polygon((-x, -y) for x, y in self._vertices)

    def is_centrally_symmetric(self) -> bool:
        return self == self.negated()

    def edge_normals(self) -> list[Point]:
        """Outward normals of the edges (both sides for a segment)."""
        vs = self._vertices
        if len(vs) < 2:
            return []
        if len(vs) == 2:
            (ax, ay), (bx, by) = vs
            n = (by - ay, ax - bx)
            return [n, (-n[0], -n[1])]
        out = []
        for i, (ax, ay) in enumerate(vs):
            bx, by = vs[(i + 1) % len(vs)]
            out.append((by - ay, ax - bx))
        return out

    def as_strings(self) -> list[list[str]]:
        return [[format_rational(x), format_rational(y)] for x, y in self._vertices]


def halfplane_intersection(constraints: Sequence[tuple]) -> Polygon:
    """Intersect half-planes ``<normal, z> <= offset``.

    The region must be bounded; callers include both signs of each axis.
    Vertices are found among pairwise intersections of boundary lines,
    which also covers segments and points.
    """
    cons = [(as_point(u), Fraction(c)) for u, c in constraints]
    candidates = set()
    for (u, c), (v, d) in combinations(cons, 2):
        det = u[0] * v[1] - u[1] * v[0]
        if det == 0:
            continue
        x = (c * v[1] - d * u[1]) / det
        y = (u[0] * d - v[0] * c) / det
        candidates.add((x, y))
    feasible = [p for p in candidates if all(u[0] * p[0] + u[1] * p[1] <= c for u, c in cons)]
    return Polygon(feasible)
