from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hflcalc import catalog, gf2
from hflcalc.errors import TruncationTooSmall
from hflcalc.hflhat import SyntheticGrid, e2_state, hfl_hat_d, offset_pattern
from hflcalc.hflminus import GradedDim, hfl_minus_d
from hflcalc.hfunc import link_h
from hflcalc.oracle import (
    build_hat_model,
    build_minus_model,
    graded_homology,
    hat_homology,
    hat_page,
    minimum_truncation,
    minus_homology,
    spectral_page,
)


def dense_rank(m: np.ndarray) -> int:
    """Plain Gaussian elimination over GF(2) on a dense 0/1 array."""
    m = m.copy() % 2
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i, c]), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
        if r == rows:
            break
    return r


def to_dense(rows: list[int], width: int) -> np.ndarray:
    return np.array([[(row >> j) & 1 for j in range(width)] for row in rows], dtype=np.uint8).reshape(
        len(rows), width
    )


def dense_homology(c) -> GradedDim:
    """Reference homology through a dense boundary matrix, one grading at a time."""
    n = len(c.basis)
    full = to_dense(c.boundary, n)
    grades = np.array([g for _, _, g in c.basis])
    dims = {}
    for g in sorted(set(grades.tolist())):
        if g <= c.cutoff:
            continue
        here = np.flatnonzero(grades == g)
        above = np.flatnonzero(grades == g + 1)
        out_rank = dense_rank(full[np.ix_(here, np.arange(n))]) if len(here) else 0
        in_rank = dense_rank(full[np.ix_(above, here)]) if len(above) and len(here) else 0
        dim = len(here) - out_rank - in_rank
        if dim:
            dims[g + c.shift] = dim
    return GradedDim(dims)


bitrows = st.lists(st.integers(0, 2**12 - 1), max_size=12)


@given(bitrows)
def test_rank_matches_dense(rows):
    assert gf2.rank(rows) == dense_rank(to_dense(rows, 12))


@given(bitrows)
def test_kernel_is_kernel(images):
    ker = gf2.kernel(images)
    for v in ker:
        assert gf2.apply(v, images) == 0
    assert len(ker) == len(images) - gf2.rank(images)


@given(st.lists(st.integers(0, 2**6 - 1), min_size=6, max_size=6), st.lists(st.integers(0, 2**6 - 1), min_size=6, max_size=6))
def test_compose(a, b):
    da, db = to_dense(a, 6).astype(int), to_dense(b, 6).astype(int)
    assert np.array_equal(to_dense(gf2.compose(a, b), 6), (da @ db) % 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=10))
def test_square_zero_complex(n, pairs):
    """A square-zero complex A -> B -> C built as d = [0 f; 0 0] blocks: sparse and dense ranks agree."""
    from hflcalc.oracle import ModelComplex

    f = [0] * n
    for i, j in pairs:
        f[i % n] ^= 1 << (j % n)
    basis = [(0, 0, 1)] * n + [(1, 0, 0)] * n
    boundary = [row << n for row in f] + [0] * n
    c = ModelComplex(basis, boundary, 1, -100, 0, [], [])
    c.check()
    assert graded_homology(c) == dense_homology(c)


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)", "split-trefoils", "b(-2,3,8)-sym"])
def test_minus_model_everywhere(name):
    h = link_h(catalog.link(name))
    for d1 in h.coords():
        for d2 in h.coords():
            p = (f"{d1}/2", f"{d2}/2")
            n = minimum_truncation(h, p)
            want = hfl_minus_d(h, d1, d2)
            assert minus_homology(h, p, n) == want
            assert minus_homology(h, p, n + 3) == want


def test_dense_reference_on_models(h_b20):
    for p in [(0, 0), (1, 0), (-1, -1), (2, 1)]:
        c = build_hat_model(h_b20, p, minimum_truncation(h_b20, p, hat=True))
        c.check()
        assert graded_homology(c) == dense_homology(c)
        m = build_minus_model(h_b20, p, minimum_truncation(h_b20, p))
        assert graded_homology(m) == dense_homology(m)


@pytest.mark.parametrize("name", ["L7n1", "b(20,-3)"])
def test_hat_model_pages(name):
    h = link_h(catalog.link(name))
    lo, hi = -8, 8
    for d1 in range(lo, hi + 1, 2):
        for d2 in range(lo, hi + 1, 2):
            p = (f"{d1}/2", f"{d2}/2")
            n = minimum_truncation(h, p, hat=True)
            c = build_hat_model(h, p, n)
            state = e2_state(h, d1, d2)
            pages = spectral_page(c, 2)
            for level, cube in ((-2, -2), (-1, -1), (0, 0)):
                assert pages[level] == state.e2_by_cube[cube]
            assert hat_homology(h, p, n) == hfl_hat_d(h, d1, d2)


def test_hat_page_e1(h_l7n1):
    state = e2_state(h_l7n1, 0, 0)
    assert hat_page(h_l7n1, (0, 0), r=1) == state.e1


@pytest.mark.parametrize("name", sorted(catalog.D2_EXPECTED))
def test_pattern_models(name):
    grid = SyntheticGrid(offset_pattern(catalog.PATTERNS[name], 3))
    e2 = e2_state(grid, 10, 10).e2
    assert hat_page(grid, (5, 5)) == e2
    assert hat_homology(grid, (5, 5)) == hfl_hat_d(grid, 10, 10)


def test_truncation_too_small(h_b20):
    with pytest.raises(TruncationTooSmall):
        build_minus_model(h_b20, (0, 0), 3)
