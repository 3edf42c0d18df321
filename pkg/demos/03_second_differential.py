"""When the spectral sequence might have a nonzero d_2.

The hat group at s is computed from the four minus groups at s, s + (1,0),
s + (0,1) and s + (1,1). After d_1 the page can still hold a generator
in the far corner and one at s exactly one grading lower. Whether d_2
cancels them is decided by comparing with the point -s.
"""

from __future__ import annotations

from hflcalc import catalog
from hflcalc.hflhat import SyntheticGrid, e2_state, offset_pattern, resolve_hat
from hflcalc.oracle import hat_homology, hat_page

for name in ["2a", "2b", "3c", "3d"]:
    rows = offset_pattern(catalog.PATTERNS[name], 3)
    grid = SyntheticGrid(rows)  # 3x3 block around (5, 5), mirror side filled in
    state = e2_state(grid, 10, 10)
    res = resolve_hat(grid, 10, 10)
    print(f"pattern {name}")
    for row in rows:
        print("   ", row)
    print("    E1 =", state.e1)
    print("    E2 =", state.e2, " candidate pairs:", state.ambiguous_pairs)
    print("    final =", res.group, " via mirror:", res.via_mirror)

    # The brute-force model over GF(2) sees the same E2 page and the same
    # homology, without any case analysis.
    print("    model E2 =", hat_page(grid, (5, 5)), " model H =", hat_homology(grid, (5, 5)))

# A real example: L7n1 has one such point.
from hflcalc.hfunc import link_h  # noqa: E402

h = link_h(catalog.link("L7n1"))
res = resolve_hat(h, -2, -4)
print("L7n1 at (-1, -2):", res.state.e2, "->", res.group)
