"""Built-in links and synthetic h-grids used by the CLI, the tests and the demos."""

from __future__ import annotations

import copy
from typing import Any

from .errors import UnknownName
from .linkdata import LinkData, parse_link

UNKNOT = [{"e": 0, "c": 1}]
TREFOIL = [{"e": -1, "c": 1}, {"e": 0, "c": -1}, {"e": 1, "c": 1}]


def _terms(triples):
    return [{"e1": a, "e2": b, "c": c} for a, b, c in triples]


LINKS: dict[str, dict[str, Any]] = {
    "L7n1": {
        "name": "L7n1",
        "linking_number": 2,
        "alexander_link": _terms([("1/2", "3/2", 1), ("-1/2", "-3/2", 1)]),
        "alexander_component_1": UNKNOT,
        "alexander_component_2": TREFOIL,
    },
    "b(20,-3)": {
        "name": "b(20,-3)",
        "linking_number": 2,
        "alexander_link": _terms(
            [
                ("1/2", "3/2", 1),
                ("3/2", "1/2", 1),
                ("1/2", "-1/2", 1),
                ("-1/2", "1/2", 1),
                ("-3/2", "-1/2", 1),
                ("-1/2", "-3/2", 1),
                ("3/2", "3/2", -1),
                ("1/2", "1/2", -1),
                ("-1/2", "-1/2", -1),
                ("-3/2", "-3/2", -1),
            ]
        ),
        "alexander_component_1": UNKNOT,
        "alexander_component_2": UNKNOT,
    },
    "split-trefoils": {
        "name": "split-trefoils",
        "linking_number": 0,
        "alexander_link": [],
        "alexander_component_1": TREFOIL,
        "alexander_component_2": TREFOIL,
    },
    "split-unknots": {
        "name": "split-unknots",
        "linking_number": 0,
        "alexander_link": [],
        "alexander_component_1": UNKNOT,
        "alexander_component_2": UNKNOT,
    },
    # As it is usually printed: the term t1^-1 t2^-2 has no mirror partner.
    "b(-2,3,8)": {
        "name": "b(-2,3,8)",
        "linking_number": 5,
        "alexander_link": _terms([(-2, -3, 1), (-1, -2, 1), (0, 0, 1), (1, 1, 1), (2, 3, 1)]),
        "alexander_component_1": UNKNOT,
        "alexander_component_2": TREFOIL,
    },
    # The symmetric polynomial consistent with both one-variable reductions
    # and with the h-grid below.
    "b(-2,3,8)-sym": {
        "name": "b(-2,3,8)-sym",
        "linking_number": 5,
        "alexander_link": _terms([(-2, -3, 1), (-1, -1, 1), (0, 0, 1), (1, 1, 1), (2, 3, 1)]),
        "alexander_component_1": UNKNOT,
        "alexander_component_2": TREFOIL,
    },
}

# Entries whose validation is expected to carry warnings.
WARNING_EXPECTED = {"b(-2,3,8)"}

# h-values of b(-2,3,8) on s1 = -9/2 .. 7/2 (columns) and s2 = 9/2 .. -9/2 (rows).
B_2_3_8_GRID_S1 = [-9, -7, -5, -3, -1, 1, 3, 5, 7]
B_2_3_8_GRID_S2 = [9, 7, 5, 3, 1, -1, -3, -5, -7, -9]
B_2_3_8_GRID = [
    [7, 6, 5, 4, 3, 2, 1, 0, 0],
    [7, 6, 5, 4, 3, 2, 1, 0, 0],
    [7, 6, 5, 4, 3, 2, 1, 1, 1],
    [7, 6, 5, 4, 3, 2, 1, 1, 1],
    [7, 6, 5, 4, 3, 2, 2, 2, 2],
    [7, 6, 5, 4, 3, 3, 3, 3, 3],
    [7, 6, 5, 4, 4, 4, 4, 4, 4],
    [8, 7, 6, 5, 5, 5, 5, 5, 5],
    [8, 7, 6, 6, 6, 6, 6, 6, 6],
    [9, 8, 7, 7, 7, 7, 7, 7, 7],
]


def b_2_3_8_values() -> dict[tuple[int, int], int]:
    """The grid above keyed by doubled coordinates."""
    return {
        (d1, d2): B_2_3_8_GRID[r][c]
        for r, d2 in enumerate(B_2_3_8_GRID_S2)
        for c, d1 in enumerate(B_2_3_8_GRID_S1)
    }


# 3x3 neighbourhoods relative to h = h(s + (1,1)), rows from s2 + 1 down,
# columns from s1 - 1 rightward.
PATTERNS: dict[str, list[list[int]]] = {
    "1a": [[1, 0, 0], [2, 1, 0], [2, 2, 1]],
    "1b": [[1, 0, 0], [2, 1, 0], [3, 2, 1]],
    "2a": [[1, 1, 0], [2, 1, 1], [3, 2, 1]],
    "2b": [[2, 1, 0], [2, 1, 1], [3, 2, 2]],
    "2c": [[2, 1, 0], [2, 1, 1], [3, 2, 1]],
    "2d": [[1, 1, 0], [2, 1, 1], [3, 2, 2]],
    "3a": [[2, 1, 0], [3, 2, 1], [3, 3, 2]],
    "3b": [[2, 1, 0], [3, 2, 1], [4, 3, 2]],
    "3c": [[1, 1, 0], [2, 2, 1], [3, 2, 1]],
    "3d": [[2, 1, 0], [2, 2, 1], [3, 2, 2]],
    "3e": [[1, 1, 0], [2, 2, 1], [3, 2, 2]],
    "3f": [[2, 1, 0], [2, 2, 1], [3, 2, 1]],
    "rank4-odd": [[1, 0, 0], [1, 1, 0], [2, 1, 1]],
    "rank4-even": [[1, 1, 0], [2, 1, 1], [2, 2, 1]],
}

# (rank, grading relative to -2h) of the final answer for the d_2 patterns
D2_EXPECTED: dict[str, tuple[int, int]] = {
    "2a": (3, -2),
    "2b": (1, -2),
    "2c": (2, -2),
    "2d": (2, -2),
    "3c": (1, -3),
    "3d": (3, -3),
    "3e": (2, -3),
    "3f": (2, -3),
}
MIRROR_PATTERNS = {"2b", "3c"}


def names() -> list[str]:
    return sorted(LINKS) + sorted(f"pattern-{k}" for k in PATTERNS)


def document(name: str) -> dict[str, Any]:
    """Link document, or a grid document for ``pattern-*`` names."""
    if name in LINKS:
        return copy.deepcopy(LINKS[name])
    if name.startswith("pattern-") and name[8:] in PATTERNS:
        return {
            "name": name,
            "kind": "grid",
            "linking_number": 0,
            "center": [5, 5],
            "rows": [[v for v in row] for row in PATTERNS[name[8:]]],
        }
    raise UnknownName(name)


def link(name: str) -> LinkData:
    if name not in LINKS:
        raise UnknownName(name)
    return parse_link(LINKS[name])
