"""From Alexander polynomials to hat link Floer homology for b(20,-3).

Run with ``python3 demos/01_pretzel_walkthrough.py``.
"""

from __future__ import annotations

from hflcalc import catalog
from hflcalc.hflhat import hfl_hat_at
from hflcalc.hflminus import hfl_minus_at
from hflcalc.hfunc import link_h
from hflcalc.linkdata import validate

# The link is given by its two-variable Alexander polynomial, the
# polynomials of its components (both unknots here) and the linking number.
link = catalog.link("b(20,-3)")
print(link.delta_link)
print("linking number", link.lk)

# validate checks the sign normalization and the one-variable reductions,
# then builds the h-function to make sure the data is usable downstream.
print(validate(link).as_dict())

# The h-function is filled from the right edge of a box with the horizontal
# recursion and checked against the vertical one. Lower left is larger.
h = link_h(link)
for s2 in range(3, -4, -1):
    print(" ".join(f"{h(s1, s2):2d}" for s1 in range(-3, 4)))

# HFL^- at a point only depends on the 2x2 square of h-values ending there.
print("HFL^-(1, 1) =", hfl_minus_at(h, (1, 1)))

# The hat groups come from a 3x3 neighbourhood. The rank table is
# symmetric under s -> -s, and the largest rank is 4.
for s2 in range(3, -4, -1):
    print(" ".join(str(hfl_hat_at(h, (s1, s2)).rank) for s1 in range(-3, 4)))
print("HFL^(0, 0) =", hfl_hat_at(h, (0, 0)))
