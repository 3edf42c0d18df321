"""Hat-flavored link Floer homology from the h-function.

The E^1 page at s is built from the four minus groups at s + (1,1),
s + (0,1), s + (1,0) and s. Each corner is placed at its cube offset and
d_1 = U_1 + U_2 sends a generator of grading x to the generator of
grading x - 2 in the neighbouring corner when there is one. The only
possible higher differential d_2 joins the far corner to s itself, and
when it might be nonzero the answer is pinned down by the symmetric
point -s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import InconsistentSquare, NotSplitInput, OutsideGrid, UnresolvableD2
from .gf2 import compose, matrix_rows, rank
from .hflminus import GradedDim, hfl_minus_d, knot_hfk_at
from .hfunc import HLookup, KnotH, lattice_point
from .laurent import HalfInt
from .linkdata import LinkData

# corner -> (displacement in doubled coordinates, cube offset)
CORNERS: dict[str, tuple[tuple[int, int], int]] = {
    "11": ((2, 2), -2),
    "01": ((0, 2), -1),
    "10": ((2, 0), -1),
    "00": ((0, 0), 0),
}
# edges of the square: (source, target, which U)
EDGES: tuple[tuple[str, str, int], ...] = (
    ("11", "01", 1),
    ("11", "10", 2),
    ("01", "00", 2),
    ("10", "00", 1),
)


@dataclass
class SpectralState:
    point: tuple[int, int]
    groups: dict[str, GradedDim]
    offsets: dict[str, int]
    d1: dict[tuple[str, str], list[tuple[int, int]]]
    e2_by_cube: dict[int, GradedDim] = field(default_factory=dict)
    ambiguous_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def e1(self) -> GradedDim:
        out = GradedDim()
        for c, g in self.groups.items():
            out = out + g.shift(self.offsets[c])
        return out

    @property
    def e2(self) -> GradedDim:
        out = GradedDim()
        for g in self.e2_by_cube.values():
            out = out + g
        return out

    @property
    def has_pairs(self) -> bool:
        return bool(self.ambiguous_pairs)


def build_e1(h: HLookup, p) -> SpectralState:
    d1, d2 = lattice_point(p, h.lk)
    return build_e1_d(h, d1, d2)


def build_e1_d(h: HLookup, d1: int, d2: int) -> SpectralState:
    groups = {}
    for corner, ((dx, dy), _) in CORNERS.items():
        groups[corner] = hfl_minus_d(h, d1 + dx, d2 + dy)
    offsets = {c: off for c, (_, off) in CORNERS.items()}
    maps: dict[tuple[str, str], list[tuple[int, int]]] = {}
    for src, tgt, _ in EDGES:
        maps[(src, tgt)] = [(x, x - 2) for x in groups[src].gradings() if groups[tgt][x - 2]]
    return SpectralState((d1, d2), groups, offsets, maps)


def _basis(state: SpectralState, cube: int) -> list[tuple[str, int]]:
    out = []
    for corner, g in state.groups.items():
        if state.offsets[corner] == cube:
            out.extend((corner, x) for x in g.gradings())
    return out


def _d1_rows(state: SpectralState, cube: int) -> tuple[list[tuple[str, int]], list[tuple[str, int]], list[int]]:
    """Basis at ``cube``, basis at ``cube + 1`` and d_1 as bitset rows."""
    src = _basis(state, cube)
    tgt = _basis(state, cube + 1)
    index = {b: k for k, b in enumerate(tgt)}
    entries = []
    for i, (corner, x) in enumerate(src):
        for (s, t), pairs in state.d1.items():
            if s != corner:
                continue
            for a, b in pairs:
                if a == x:
                    entries.append((i, index[(t, b)]))
    return src, tgt, matrix_rows(entries, len(src))


def _total(state: SpectralState, b: tuple[str, int]) -> int:
    return b[1] + state.offsets[b[0]]


def apply_d1(state: SpectralState) -> SpectralState:
    """Fill the E^2 page (per cube level) and the list of d_2 candidates."""
    rows_out: dict[int, tuple] = {c: _d1_rows(state, c) for c in (-2, -1)}
    sq = compose(rows_out[-2][2], rows_out[-1][2])
    if any(sq):
        raise InconsistentSquare(f"d1 does not square to zero at {state.point}")

    e2: dict[int, GradedDim] = {}
    for cube in (-2, -1, 0):
        basis = _basis(state, cube)
        dims: dict[int, int] = {}
        for g in sorted({_total(state, b) for b in basis}):
            n = sum(1 for b in basis if _total(state, b) == g)
            out_rank = 0
            if cube in rows_out:
                src, _, rows = rows_out[cube]
                out_rank = rank(r for b, r in zip(src, rows) if _total(state, b) == g)
            in_rank = 0
            if cube - 1 in rows_out:
                src, tgt, rows = rows_out[cube - 1]
                keep = [k for k, b in enumerate(tgt) if _total(state, b) == g]
                mask = sum(1 << k for k in keep)
                in_rank = rank(r & mask for b, r in zip(src, rows) if _total(state, b) == g + 1)
            dims[g] = n - out_rank - in_rank
        e2[cube] = GradedDim(dims)
    state.e2_by_cube = e2
    pairs = []
    for g in e2[-2].gradings():
        if e2[0][g - 1]:
            pairs.append((g, g - 1))
    state.ambiguous_pairs = sorted(set(pairs), reverse=True)
    return state


def e2_state(h: HLookup, d1: int, d2: int) -> SpectralState:
    return apply_d1(build_e1_d(h, d1, d2))


@dataclass
class HatResult:
    group: GradedDim
    state: SpectralState
    mirror_state: SpectralState | None = None
    removed_pairs: int = 0

    @property
    def via_mirror(self) -> bool:
        return self.mirror_state is not None


def _removals(state: SpectralState, k: int) -> list[GradedDim]:
    """Every page obtained by cancelling k source/target pairs."""
    src = state.e2_by_cube[-2]
    tgt = state.e2_by_cube[0]
    slots = [(g, min(src[g], tgt[g - 1])) for g, _ in state.ambiguous_pairs]
    total = state.e2
    out = []
    for counts in product(*(range(cap + 1) for _, cap in slots)):
        if sum(counts) != k:
            continue
        removed: dict[int, int] = {}
        for (g, _), n in zip(slots, counts):
            removed[g] = removed.get(g, 0) + n
            removed[g - 1] = removed.get(g - 1, 0) + n
        out.append(GradedDim({g: total[g] - removed.get(g, 0) for g in set(total.dims) | set(removed)}))
    return out


def resolve_hat(h: HLookup, d1: int, d2: int) -> HatResult:
    state = e2_state(h, d1, d2)
    if not state.has_pairs:
        return HatResult(state.e2, state)
    where = f"({HalfInt(d1)}, {HalfInt(d2)})"
    mirror = e2_state(h, -d1, -d2)
    if mirror.has_pairs:
        raise UnresolvableD2(f"both {where} and its mirror admit a second differential")
    diff = state.e2.rank - mirror.e2.rank
    if diff < 0 or diff % 2:
        raise UnresolvableD2(f"rank difference {diff} with the mirror point is not a nonnegative even number")
    target = mirror.e2.relative()
    options = {page for page in _removals(state, diff // 2) if page.relative() == target}
    if len(options) != 1:
        raise UnresolvableD2(f"{len(options)} candidate pages at {where}")
    return HatResult(options.pop(), state, mirror, diff // 2)


def hfl_hat_d(h: HLookup, d1: int, d2: int) -> GradedDim:
    return resolve_hat(h, d1, d2).group


def hfl_hat_at(h: HLookup, p) -> GradedDim:
    return hfl_hat_d(h, *lattice_point(p, h.lk))


TWO_DIM = GradedDim({0: 1, -1: 1})


def hfl_hat_split(link: LinkData, p) -> GradedDim:
    """Tensor product formula for a split link."""
    if not link.is_split or link.lk != 0:
        raise NotSplitInput(f"{link.name or 'link'} has nonzero Alexander polynomial or linking number")
    d1, d2 = lattice_point(p, 0)
    k1, k2 = KnotH(link.series_1), KnotH(link.series_2)
    return knot_hfk_at(k1, d1 // 2).tensor(knot_hfk_at(k2, d2 // 2)).tensor(TWO_DIM)


class SyntheticGrid:
    """A few h-values around one point, completed by the symmetry of h.

    ``rows`` is a 3x3 block read like a picture: the first row is
    s2 = p2 + 1 and the first column is s1 = p1 - 1.
    """

    def __init__(self, rows: Sequence[Sequence[int]], center=(5, 5), lk: int = 0):
        self.lk = lk
        c1, c2 = lattice_point(center, lk)
        self.center = (c1, c2)
        values: dict[tuple[int, int], int] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                values[(c1 + 2 * (c - 1), c2 + 2 * (1 - r))] = int(v)
        for (a, b), v in list(values.items()):
            mirrored = v + (a + b) // 2
            if mirrored < 0:
                raise ValueError("center too close to the origin for nonnegative mirror values")
            values.setdefault((-a, -b), mirrored)
        self._values = values

    @classmethod
    def from_mapping(cls, values: Mapping[tuple[int, int], int], lk: int = 0) -> "SyntheticGrid":
        grid = cls.__new__(cls)
        grid.lk = lk
        grid.center = (0, 0)
        grid._values = dict(values)
        return grid

    def hd(self, d1: int, d2: int) -> int:
        try:
            return self._values[(d1, d2)]
        except KeyError:
            raise OutsideGrid(f"({HalfInt(d1)}, {HalfInt(d2)}) is outside the synthetic grid") from None

    def points(self) -> list[tuple[int, int]]:
        return sorted(self._values)


def offset_pattern(template: Iterable[Iterable[int]], h: int) -> list[list[int]]:
    """Add ``h`` to every entry of a pattern written relative to h."""
    return [[h + v for v in row] for row in template]


__all__ = [
    "CORNERS",
    "EDGES",
    "HatResult",
    "SpectralState",
    "SyntheticGrid",
    "apply_d1",
    "build_e1",
    "e2_state",
    "hfl_hat_at",
    "hfl_hat_d",
    "hfl_hat_split",
    "offset_pattern",
    "resolve_hat",
]
