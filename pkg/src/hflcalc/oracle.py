"""Brute-force cone models over GF(2) for cross-checking the case analysis.

Every vertex of a model carries a truncated tower F[U]/U^N whose top
generator sits in grading -2h(vertex). Edge maps are powers of U fixed by
the gradings, and the homology is computed one grading at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TruncationTooSmall
from .gf2 import apply, kernel, rank
from .hflminus import GradedDim
from .hfunc import HLookup, lattice_point

# inner cone: displacement from the corner and cube grading
_INNER = (((0, 0), 0), ((-2, 0), 1), ((0, -2), 1), ((-2, -2), 2))
# outer cube of the hat model: displacement from s and cube offset
_OUTER = (((2, 2), -2), ((0, 2), -1), ((2, 0), -1), ((0, 0), 0))


@dataclass
class ModelComplex:
    """Basis entries are (vertex id, U-power, grading); ``boundary[i]`` is a bitset of targets.

    ``levels`` gives the outer cube offset of each vertex. The boundary never
    lowers it, so it defines the filtration behind the spectral sequence.
    """

    basis: list[tuple[int, int, int]]
    boundary: list[int]
    truncation: int
    cutoff: int
    shift: int
    vertices: list[tuple[int, int]]
    levels: list[int]

    def level(self, i: int) -> int:
        return self.levels[self.basis[i][0]]

    def check(self) -> None:
        """Boundary squares to zero and lowers the grading by one."""
        for i, row in enumerate(self.boundary):
            g = self.basis[i][2]
            acc = 0
            r = row
            while r:
                j = r.bit_length() - 1
                r ^= 1 << j
                if self.basis[j][2] != g - 1:
                    raise AssertionError("boundary does not lower the grading by one")
                acc ^= self.boundary[j]
            if acc:
                raise AssertionError("boundary does not square to zero")


class _Builder:
    def __init__(self, n: int):
        self.n = n
        self.vertices: list[tuple[int, int]] = []
        self.levels: list[int] = []
        self.grade: list[int] = []
        self.edges: list[tuple[int, int, int]] = []

    def vertex(self, point: tuple[int, int], h: int, cube: int, level: int = 0) -> int:
        self.vertices.append(point)
        self.levels.append(level)
        self.grade.append(-2 * h + cube)
        return len(self.vertices) - 1

    def edge(self, src: int, tgt: int, power: int) -> None:
        if power < 0:
            raise ValueError("negative U-power; the h-values are not a valid h-function")
        self.edges.append((src, tgt, power))

    def finish(self, cutoff: int, shift: int) -> ModelComplex:
        n = self.n
        basis = [(v, k, self.grade[v] - 2 * k) for v in range(len(self.vertices)) for k in range(n)]
        rows = [0] * len(basis)
        for src, tgt, power in self.edges:
            for k in range(n - power):
                rows[src * n + k] ^= 1 << (tgt * n + k + power)
        return ModelComplex(basis, rows, n, cutoff, shift, list(self.vertices), list(self.levels))


def _normalize(h: HLookup, points) -> tuple[dict[tuple[int, int], int], int]:
    raw = {q: h.hd(*q) for q in points}
    low = min(raw.values())
    return {q: v - low for q, v in raw.items()}, low


def _check_truncation(n: int, top: int) -> None:
    if n < 2 * top + 8:
        raise TruncationTooSmall(f"N = {n} is below 2 * {top} + 8")


def _add_cone(b: _Builder, hv, corner: tuple[int, int], outer: int) -> list[int]:
    ids = []
    for (dx, dy), cube in _INNER:
        q = (corner[0] + dx, corner[1] + dy)
        ids.append(b.vertex(q, hv[q], cube + outer, outer))
    a, vb, vd, vc = ids
    # inclusions from the lower corners into the upper ones
    for src, tgt in ((vc, vb), (vc, vd), (vb, a), (vd, a)):
        b.edge(src, tgt, hv[b.vertices[src]] - hv[b.vertices[tgt]])
    return ids


def minimum_truncation(h: HLookup, p, hat: bool = False) -> int:
    d1, d2 = lattice_point(p, h.lk)
    span = 4 if hat else 2
    pts = [(d1 + x, d2 + y) for x in range(-2, span - 1, 2) for y in range(-2, span - 1, 2)]
    hv, _ = _normalize(h, pts)
    return 2 * max(hv.values()) + 8


def build_minus_model(h: HLookup, p, n: int) -> ModelComplex:
    d1, d2 = lattice_point(p, h.lk)
    pts = [(d1 + dx, d2 + dy) for (dx, dy), _ in _INNER]
    hv, low = _normalize(h, pts)
    top = max(hv.values())
    _check_truncation(n, top)
    b = _Builder(n)
    _add_cone(b, hv, (d1, d2), 0)
    return b.finish(-2 * n + 2 * top + 4, -2 * low)


def build_hat_model(h: HLookup, p, n: int) -> ModelComplex:
    d1, d2 = lattice_point(p, h.lk)
    pts = [(d1 + x, d2 + y) for x in (-2, 0, 2) for y in (-2, 0, 2)]
    hv, low = _normalize(h, pts)
    top = max(hv.values())
    _check_truncation(n, top)
    b = _Builder(n)
    cones = {}
    for (dx, dy), outer in _OUTER:
        cones[(dx, dy)] = _add_cone(b, hv, (d1 + dx, d2 + dy), outer)
    # U_1 lowers s1, U_2 lowers s2; vertex w goes to w - e_i as U^(1 + h(w) - h(w - e_i))
    for (sx, sy), (tx, ty) in (((2, 2), (0, 2)), ((2, 2), (2, 0)), ((0, 2), (0, 0)), ((2, 0), (0, 0))):
        for src, tgt in zip(cones[(sx, sy)], cones[(tx, ty)]):
            ws, wt = b.vertices[src], b.vertices[tgt]
            b.edge(src, tgt, 1 + hv[ws] - hv[wt])
    return b.finish(-2 * n + 2 * top + 4, -2 * low)


def graded_homology(c: ModelComplex) -> GradedDim:
    """Homology in gradings above the truncation cutoff, shifted back to true gradings."""
    by_grade: dict[int, list[int]] = {}
    for i, (_, _, g) in enumerate(c.basis):
        by_grade.setdefault(g, []).append(i)
    dims = {}
    for g, idx in by_grade.items():
        if g <= c.cutoff:
            continue
        out_rank = rank(c.boundary[i] for i in idx)
        in_rank = rank(c.boundary[i] for i in by_grade.get(g + 1, []))
        dim = len(idx) - out_rank - in_rank
        if dim:
            dims[g + c.shift] = dim
    return GradedDim(dims)


def minus_homology(h: HLookup, p, n: int | None = None) -> GradedDim:
    n = n if n is not None else minimum_truncation(h, p)
    return graded_homology(build_minus_model(h, p, n))


def hat_homology(h: HLookup, p, n: int | None = None) -> GradedDim:
    n = n if n is not None else minimum_truncation(h, p, hat=True)
    return graded_homology(build_hat_model(h, p, n))


def _grades(c: ModelComplex) -> dict[int, list[int]]:
    by_grade: dict[int, list[int]] = {}
    for i, (_, _, g) in enumerate(c.basis):
        by_grade.setdefault(g, []).append(i)
    return by_grade


def spectral_page(c: ModelComplex, r: int) -> dict[int, GradedDim]:
    """E_r of the filtration by outer cube offset, as {level: graded dimension}.

    Uses E_r^p = (Z_r^p + F^(p+1)) / (B_(r-1)^p + F^(p+1)) with
    Z_r^p = {x in F^p : dx in F^(p+r)} and B_(r-1)^p = F^p meet d(F^(p-r+1)),
    computed separately in each grading.
    """
    by_grade = _grades(c)
    pos = {i: k for idx in by_grade.values() for k, i in enumerate(idx)}

    def local_images(g: int) -> list[int]:
        out = []
        for i in by_grade.get(g, []):
            row, acc = c.boundary[i], 0
            while row:
                j = row.bit_length() - 1
                row ^= 1 << j
                acc |= 1 << pos[j]
            out.append(acc)
        return out

    def mask(g: int, keep) -> int:
        return sum(1 << k for k, i in enumerate(by_grade.get(g, [])) if keep(c.level(i)))

    def lift(combo: int, positions: list[int]) -> int:
        out, k = 0, 0
        while combo:
            if combo & 1:
                out |= 1 << positions[k]
            combo >>= 1
            k += 1
        return out

    pages: dict[int, dict[int, int]] = {}
    levels = sorted(set(c.levels))
    for g, idx in by_grade.items():
        if g <= c.cutoff:
            continue
        imgs_g = local_images(g)
        imgs_up = local_images(g + 1)
        up_idx = by_grade.get(g + 1, [])
        for p in levels:
            upper = [1 << k for k, i in enumerate(idx) if c.level(i) >= p + 1]
            src = [k for k, i in enumerate(idx) if c.level(i) >= p]
            low = mask(g - 1, lambda lv: lv < p + r)
            z = [lift(v, src) for v in kernel([imgs_g[k] & low for k in src])]
            srcy = [k for k, i in enumerate(up_idx) if c.level(i) >= p - r + 1]
            below = mask(g, lambda lv: lv < p)
            ys = [lift(v, srcy) for v in kernel([imgs_up[k] & below for k in srcy])]
            b = [apply(y, imgs_up) for y in ys]
            dim = rank(z + upper) - rank(b + upper)
            if dim:
                pages.setdefault(p, {})[g + c.shift] = dim
    return {p: GradedDim(pages.get(p, {})) for p in levels}


def hat_page(h: HLookup, p, r: int = 2, n: int | None = None) -> GradedDim:
    """Total E_r page of the hat model (r = 2 gives the page before d_2)."""
    n = n if n is not None else minimum_truncation(h, p, hat=True)
    out = GradedDim()
    for part in spectral_page(build_hat_model(h, p, n), r).values():
        out = out + part
    return out
