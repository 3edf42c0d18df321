"""Small GF(2) linear algebra on rows stored as Python int bitsets."""

from __future__ import annotations

from typing import Iterable


def rank(rows: Iterable[int]) -> int:
    """Rank of the matrix whose rows are the given bitsets."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                r += 1
                break
            row ^= p
    return r


def matrix_rows(entries: Iterable[tuple[int, int]], n_rows: int) -> list[int]:
    """Bitset rows from (row, col) positions of ones; repeated entries cancel."""
    rows = [0] * n_rows
    for i, j in entries:
        rows[i] ^= 1 << j
    return rows


def compose(a_rows: list[int], b_rows: list[int]) -> list[int]:
    """Rows of A*B where A has rows indexed like the output and columns like B's rows."""
    out = []
    for row in a_rows:
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc ^= b_rows[k]
            row >>= 1
            k += 1
        out.append(acc)
    return out


def kernel(images: list[int]) -> list[int]:
    """Basis of the kernel of the map sending source vector i to ``images[i]``.

    Kernel vectors are returned as bitsets over the source indices.
    """
    pivots: dict[int, tuple[int, int]] = {}
    out = []
    for i, img in enumerate(images):
        combo = 1 << i
        while img:
            top = img.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (img, combo)
                break
            img ^= hit[0]
            combo ^= hit[1]
        if not img:
            out.append(combo)
    return out


def apply(vector: int, images: list[int]) -> int:
    """Image of a source bitset under the map given by ``images``."""
    acc = 0
    k = 0
    while vector:
        if vector & 1:
            acc ^= images[k]
        vector >>= 1
        k += 1
    return acc
