"""Thurston norm and dual Thurston polytope of L7n1 and of b(20,-3).

The support of hat HFL spans the link Floer polytope. Its support function
y gives the Thurston norm through x(h) = 2 y(h) - |h1| - |h2|.
"""

from __future__ import annotations

from hflcalc import catalog
from hflcalc.polytope import (
    dual_thurston_polytope,
    floer_polytope,
    newton_compare,
    support_hat,
    thurston_x,
)

l7n1 = catalog.link("L7n1")
print([f"({a}, {b})" for a, b in sorted(support_hat(l7n1))])
print("Floer polytope:", floer_polytope(l7n1).as_strings())

# Unknot component first, then the trefoil component.
for direction in [(1, 0), (0, 1), (1, 1), (1, -1)]:
    r = thurston_x(l7n1, direction)
    print(direction, "y =", r.y_value, "x =", r.x_value)

# The dual polytope here degenerates to a segment, and it equals the
# Newton polytope of the Alexander polynomial.
print(dual_thurston_polytope(l7n1).as_strings())
print(dual_thurston_polytope(l7n1, scale="full").as_strings())
print(newton_compare(l7n1).as_dict())

# For b(20,-3) both polygons are the same hexagon, and the Floer polytope
# equals the hull of the points with nonzero Euler characteristic.
print(newton_compare(catalog.link("b(20,-3)")).as_dict())
