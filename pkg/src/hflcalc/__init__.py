"""Link Floer homology of two-component L-space links from Alexander polynomials.

The pipeline runs Alexander data -> h-function -> HFL^- and hat HFL at each
lattice point -> Floer and dual Thurston polytopes. Exponents and lattice
points are stored doubled, so half-integers stay exact.
"""

from __future__ import annotations

from . import catalog
from .errors import HflError
from .geometry import Polygon, convex_hull
from .hflhat import SyntheticGrid, hfl_hat_at, hfl_hat_d, hfl_hat_split, resolve_hat
from .hflminus import GradedDim, classify_square, hfl_minus_at, knot_hfk_at
from .hfunc import HFunction, KnotH, knot_h, link_h
from .laurent import HalfInt, Laurent1, Laurent2, newton_polytope, torsion_series
from .linkdata import LinkData, parse_link, render, validate
from .oracle import hat_homology, hat_page, minus_homology
from .polytope import (
    dual_thurston_polytope,
    floer_polytope,
    newton_compare,
    thurston_x,
    y_norm,
)

__version__ = "0.1.0"

__all__ = [
    "GradedDim",
    "HFunction",
    "HalfInt",
    "HflError",
    "KnotH",
    "Laurent1",
    "Laurent2",
    "LinkData",
    "Polygon",
    "SyntheticGrid",
    "catalog",
    "classify_square",
    "convex_hull",
    "dual_thurston_polytope",
    "floer_polytope",
    "hat_homology",
    "hat_page",
    "hfl_hat_at",
    "hfl_hat_d",
    "hfl_hat_split",
    "hfl_minus_at",
    "knot_h",
    "knot_hfk_at",
    "link_h",
    "minus_homology",
    "newton_compare",
    "newton_polytope",
    "parse_link",
    "render",
    "resolve_hat",
    "thurston_x",
    "torsion_series",
    "validate",
    "y_norm",
]
