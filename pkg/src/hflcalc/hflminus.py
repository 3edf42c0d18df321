"""HFL^- at a lattice point from the local shape of h, and knot Floer groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InconsistentSquare
from .hfunc import HLookup, KnotH, lattice_point


class GradedDim:
    """Graded F_2 vector space recorded as grading -> multiplicity."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean = {}
        for g, m in (dims or {}).items():
            if m < 0:
                raise ValueError("multiplicities are nonnegative")
            if m:
                clean[int(g)] = int(m)
        self._dims = clean

    @classmethod
    def from_gradings(cls, gradings: Iterable[int]) -> "GradedDim":
        acc: dict[int, int] = {}
        for g in gradings:
            acc[g] = acc.get(g, 0) + 1
        return cls(acc)

    @property
    def dims(self) -> dict[int, int]:
        return dict(self._dims)

    def __getitem__(self, g: int) -> int:
        return self._dims.get(g, 0)

    def gradings(self) -> list[int]:
        """Gradings with multiplicity, highest first."""
        out = []
        for g in sorted(self._dims, reverse=True):
            out.extend([g] * self._dims[g])
        return out

    @property
    def rank(self) -> int:
        return sum(self._dims.values())

    @property
    def euler(self) -> int:
        return sum(m if g % 2 == 0 else -m for g, m in self._dims.items())

    def is_zero(self) -> bool:
        return not self._dims

    def __bool__(self) -> bool:
        return bool(self._dims)

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedDim):
            return self._dims == other._dims
        if isinstance(other, Mapping):
            return self._dims == GradedDim(other)._dims
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._dims.items()))

    def shift(self, k: int) -> "GradedDim":
        return GradedDim({g + k: m for g, m in self._dims.items()})

    def __add__(self, other: "GradedDim") -> "GradedDim":
        acc = dict(self._dims)
        for g, m in other._dims.items():
            acc[g] = acc.get(g, 0) + m
        return GradedDim(acc)

    def tensor(self, other: "GradedDim") -> "GradedDim":
        acc: dict[int, int] = {}
        for g1, m1 in self._dims.items():
            for g2, m2 in other._dims.items():
                acc[g1 + g2] = acc.get(g1 + g2, 0) + m1 * m2
        return GradedDim(acc)

    def relative(self) -> tuple[int, ...]:
        """Gradings measured down from the top one; forgets absolute position."""
        gs = self.gradings()
        return tuple(gs[0] - g for g in gs) if gs else ()

    def __repr__(self) -> str:
        return f"GradedDim({self})"

    def __str__(self) -> str:
        if not self._dims:
            return "0"
        parts = []
        for g in sorted(self._dims, reverse=True):
            m = self._dims[g]
            parts.append(f"F[{g}]" if m == 1 else f"F[{g}]^{m}")
        return " + ".join(parts)

    def as_dict(self) -> dict[str, int]:
        return {str(g): self._dims[g] for g in sorted(self._dims, reverse=True)}


ZERO = GradedDim()


@dataclass(frozen=True)
class LocalSquare:
    """h at (s1-1, s2), (s1, s2), (s1-1, s2-1), (s1, s2-1)."""

    h_ul: int
    h_ur: int
    h_ll: int
    h_lr: int

    @property
    def drops(self) -> tuple[int, int, int, int]:
        """(top, bottom, left, right) drops."""
        return (
            self.h_ul - self.h_ur,
            self.h_ll - self.h_lr,
            self.h_ll - self.h_ul,
            self.h_lr - self.h_ur,
        )


_CASES = {
    (0, 0, 0, 0): 1,
    (0, 0, 1, 1): 2,
    (1, 1, 0, 0): 3,
    (0, 1, 1, 0): 4,
    (1, 0, 0, 1): 5,
    (1, 1, 1, 1): 6,
}


def classify_square(q: LocalSquare) -> int:
    drops = q.drops
    case = _CASES.get(drops)
    if case is None:
        raise InconsistentSquare(f"square {q} has drops {drops}")
    return case


def square_at(h: HLookup, d1: int, d2: int) -> LocalSquare:
    """Local square whose upper-right corner is the doubled point (d1, d2)."""
    return LocalSquare(h.hd(d1 - 2, d2), h.hd(d1, d2), h.hd(d1 - 2, d2 - 2), h.hd(d1, d2 - 2))


def hfl_minus_square(q: LocalSquare) -> GradedDim:
    case = classify_square(q)
    top = -2 * q.h_ur
    if case == 4:
        return GradedDim({top + 1: 1})
    if case == 5:
        return GradedDim({top: 1})
    if case == 6:
        return GradedDim({top: 1, top - 1: 1})
    return ZERO


def hfl_minus_d(h: HLookup, d1: int, d2: int) -> GradedDim:
    return hfl_minus_square(square_at(h, d1, d2))


def hfl_minus_at(h: HLookup, p) -> GradedDim:
    return hfl_minus_d(h, *lattice_point(p, h.lk))


def euler_minus_at(h: HLookup, p) -> int:
    case = classify_square(square_at(h, *lattice_point(p, h.lk)))
    return {4: -1, 5: 1}.get(case, 0)


def knot_hfk_at(k: KnotH, s: int, flavor: str = "hat") -> GradedDim:
    a = k(s)
    d_minus = k(s - 1) - a
    d_plus = a - k(s + 1)
    if flavor == "minus":
        return GradedDim({-2 * a: 1}) if d_minus == 1 else ZERO
    if flavor != "hat":
        raise ValueError(f"unknown flavor {flavor!r}")
    if (d_minus, d_plus) == (1, 0):
        return GradedDim({-2 * a: 1})
    if (d_minus, d_plus) == (0, 1):
        return GradedDim({-2 * a + 1: 1})
    return ZERO


def knot_genus(k: KnotH) -> int:
    for s in range(k.genus_bound + 1, -1, -1):
        if knot_hfk_at(k, s, "hat"):
            return s
    return 0
