"""Split links: vanishing Alexander polynomial but a nonempty polytope."""

from __future__ import annotations

from hflcalc import catalog
from hflcalc.errors import TrivialComponent, ZeroAlexander
from hflcalc.hflhat import hfl_hat_at, hfl_hat_split
from hflcalc.hfunc import link_h
from hflcalc.polytope import dual_thurston_polytope, floer_polytope, newton_compare

link = catalog.link("split-trefoils")
h = link_h(link)

# For a split link h is the sum of the two knot h-functions.
print(all(h(a, b) == h.h1(a) + h.h2(b) for a in range(-4, 5) for b in range(-4, 5)))

# The generic pipeline agrees with the tensor product formula.
for s2 in range(1, -2, -1):
    for s1 in range(-1, 2):
        g = hfl_hat_at(h, (s1, s2))
        assert g == hfl_hat_split(link, (s1, s2))
        print((s1, s2), g)

print(floer_polytope(link).as_strings())
print(dual_thurston_polytope(link).as_strings())

try:
    newton_compare(link)
except ZeroAlexander as exc:
    print("no Newton polytope:", exc)

try:
    dual_thurston_polytope(catalog.link("split-unknots"))
except TrivialComponent as exc:
    print("norm undefined:", exc)
