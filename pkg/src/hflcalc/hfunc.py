"""h-functions of L-space knots and two-component L-space links.

Lattice points are handled in doubled coordinates throughout: ``(d1, d2)``
stands for ``(d1/2, d2/2)`` and both entries have the parity of ``lk``.
"""

from __future__ import annotations

from typing import Protocol

from .errors import NotLSpaceKnotSeries, NotLSpaceLinkData, ParityError
from .laurent import HalfInt, TorsionSeries
from .linkdata import LinkData

DEFAULT_MARGIN = 3


class HLookup(Protocol):
    """Anything that answers h at a doubled lattice point."""

    lk: int

    def hd(self, d1: int, d2: int) -> int: ...


def lattice_point(p, lk: int) -> tuple[int, int]:
    """Doubled coordinates of ``p``, checking that it lies in (Z + lk/2)^2."""
    d1, d2 = HalfInt.of(p[0]).doubled, HalfInt.of(p[1]).doubled
    if d1 % 2 != lk % 2 or d2 % 2 != lk % 2:
        raise ParityError(f"({HalfInt(d1)}, {HalfInt(d2)}) is not a lattice point for lk = {lk}")
    return d1, d2


class KnotH:
    """h(s) = sum of a_k over k > s for an L-space knot."""

    __slots__ = ("series", "lo", "hi", "_values")

    def __init__(self, series: TorsionSeries):
        self.series = series
        self.lo, self.hi = series.window_lo, series.window_hi
        bad = [k for k in range(self.lo, self.hi + 1) if series[k] not in (0, 1)]
        if bad:
            raise NotLSpaceKnotSeries(f"a_{bad[0]} = {series[bad[0]]} is not 0 or 1")
        values = {self.hi: 0}
        for s in range(self.hi - 1, self.lo - 2, -1):
            values[s] = values[s + 1] + series[s + 1]
        self._values = values

    @property
    def genus_bound(self) -> int:
        return max(abs(self.lo), abs(self.hi))

    def __call__(self, s: int) -> int:
        if s >= self.hi:
            return 0
        base = self.lo - 1
        if s < base:
            return self._values[base] + (base - s)
        return self._values[s]

    def window(self) -> dict[int, int]:
        b = self.genus_bound + 1
        return {s: self(s) for s in range(-b, b + 1)}


def knot_h(series: TorsionSeries) -> KnotH:
    return KnotH(series)


def window_radius(link: LinkData, margin: int = DEFAULT_MARGIN) -> int:
    """Doubled radius D of the stored box [-D/2, D/2]^2."""
    ext = max((max(abs(i), abs(j)) for i, j in link.delta_link.terms), default=0)
    g1 = max(abs(link.series_1.window_lo), abs(link.series_1.window_hi))
    g2 = max(abs(link.series_2.window_lo), abs(link.series_2.window_hi))
    lk = abs(link.lk)
    radius = max(ext + 1, 2 * g1 + lk, 2 * g2 + lk, lk) + 2 * margin
    if radius % 2 != link.lk % 2:
        radius += 1
    return radius


class HFunction:
    """The h-function on a finite box with closed-form extension outside.

    Inside the box values are stored. To the right of or above the box the
    function agrees with a component h-function; to the left of or below
    it the symmetry h(-s) = h(s) + s1 + s2 maps the query back.
    """

    def __init__(self, link: LinkData, radius: int, grid: dict[tuple[int, int], int], h1: KnotH, h2: KnotH):
        self.link = link
        self.lk = link.lk
        self.radius = radius
        self._grid = grid
        self.h1 = h1
        self.h2 = h2

    def coords(self) -> list[int]:
        """Doubled coordinates along one side of the box, increasing."""
        return list(range(-self.radius, self.radius + 1, 2))

    def in_window(self, d1: int, d2: int) -> bool:
        return (d1, d2) in self._grid

    def hd(self, d1: int, d2: int) -> int:
        value = self._grid.get((d1, d2))
        if value is not None:
            return value
        if (d1 - self.lk) % 2 or (d2 - self.lk) % 2:
            raise ParityError(f"({HalfInt(d1)}, {HalfInt(d2)}) is off the lattice for lk={self.lk}")
        if d2 >= self.radius:
            return self.h1((d1 - self.lk) // 2)
        if d1 >= self.radius:
            return self.h2((d2 - self.lk) // 2)
        # far left or bottom: the mirror point is to the right or above
        return self.hd(-d1, -d2) - (d1 + d2) // 2

    def __call__(self, s1, s2) -> int:
        return self.hd(*lattice_point((s1, s2), self.lk))

    def grid(self) -> dict[tuple[int, int], int]:
        return dict(self._grid)


def _row_tail(terms, d1: int, d2: int) -> int:
    """Sum of a^L over first exponent >= d1 in the row with second exponent d2."""
    return sum(c for (i, j), c in terms.items() if j == d2 and i >= d1)


def _col_tail(terms, d1: int, d2: int) -> int:
    return sum(c for (i, j), c in terms.items() if i == d1 and j >= d2)


def vertical_drop(link: LinkData, d1: int, d2: int) -> int:
    """h(s1, s2 - 1) - h(s1, s2) from the Alexander data."""
    return link.series_2[(d2 - link.lk) // 2] - _row_tail(link.delta_link.terms, d1 + 1, d2 - 1)


def horizontal_drop(link: LinkData, d1: int, d2: int) -> int:
    """h(s1 - 1, s2) - h(s1, s2) from the Alexander data."""
    return link.series_1[(d1 - link.lk) // 2] - _col_tail(link.delta_link.terms, d1 - 1, d2 + 1)


def link_h(link: LinkData, margin: int = DEFAULT_MARGIN) -> HFunction:
    """Fill the box row by row with the horizontal recursion, then check the vertical one."""
    if link.is_split and link.lk != 0:
        raise NotLSpaceLinkData("Delta_L vanishes but the linking number is nonzero")
    h1 = knot_h(link.series_1)
    h2 = knot_h(link.series_2)
    radius = window_radius(link, margin)
    coords = list(range(-radius, radius + 1, 2))
    lk = link.lk
    grid: dict[tuple[int, int], int] = {}
    for d2 in reversed(coords):
        grid[(radius, d2)] = h2((d2 - lk) // 2)
        for d1 in range(radius, -radius, -2):
            drop = horizontal_drop(link, d1, d2)
            if drop not in (0, 1):
                raise NotLSpaceLinkData(
                    f"horizontal drop {drop} at ({HalfInt(d1)}, {HalfInt(d2)})"
                )
            grid[(d1 - 2, d2)] = grid[(d1, d2)] + drop

    for d1 in coords:
        if grid[(d1, radius)] != h1((d1 - lk) // 2):
            raise NotLSpaceLinkData(f"top edge disagrees with h1 at s1 = {HalfInt(d1)}")
        for d2 in coords[1:]:
            drop = grid[(d1, d2 - 2)] - grid[(d1, d2)]
            if drop != vertical_drop(link, d1, d2) or drop not in (0, 1):
                raise NotLSpaceLinkData(
                    f"vertical recursion fails at ({HalfInt(d1)}, {HalfInt(d2)})"
                )
    return HFunction(link, radius, grid, h1, h2)


def symmetry_failures(h: HFunction) -> list[tuple[int, int]]:
    """Window points where h(-s) = h(s) + s1 + s2 fails."""
    grid = h.grid()
    return sorted(
        (d1, d2)
        for (d1, d2), v in grid.items()
        if grid.get((-d1, -d2), v + (d1 + d2) // 2) != v + (d1 + d2) // 2
    )


def vertical_fill(link: LinkData, radius: int) -> dict[tuple[int, int], int]:
    """The same box filled column by column from the top seed; used as a cross-check."""
    h1 = knot_h(link.series_1)
    lk = link.lk
    grid: dict[tuple[int, int], int] = {}
    for d1 in range(-radius, radius + 1, 2):
        grid[(d1, radius)] = h1((d1 - lk) // 2)
        for d2 in range(radius, -radius, -2):
            grid[(d1, d2 - 2)] = grid[(d1, d2)] + vertical_drop(link, d1, d2)
    return grid


def h_at(h: HLookup, p) -> int:
    return h.hd(*lattice_point(p, h.lk))
