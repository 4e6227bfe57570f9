"""Khovanov homology and the Jones polynomial.

The cube of resolutions yields a graded chain complex over Z whose
homology refines the Jones polynomial: the graded Euler characteristic
equals an independent Kauffman-style state sum, and both survive
Reidemeister moves unchanged.
"""

import random

from knotfoam import (
    braid_to_pd,
    build_complex,
    graded_euler_characteristic,
    integral_homology,
    kauffman_oracle,
    parse_pd,
    reidemeister_move,
)
from knotfoam.diagram import r2_sites


def show(name, pd):
    cx = build_complex(pd, "Kh")
    table = integral_homology(cx)
    print("%s  (writhe data: %d crossings)" % (name, pd.n))
    print("  jones: %s" % graded_euler_characteristic(cx))
    print("  %4s %4s %6s  %s" % ("i", "q", "betti", "torsion"))
    for i, q, betti, torsion in table.rows():
        t = ",".join("Z/%d" % x for x in torsion) or "-"
        print("  %4d %4d %6d  %s" % (i, q, betti, t))
    assert table.graded_euler() == kauffman_oracle(pd)
    print()


show("unknot", parse_pd(""))
show("right trefoil", braid_to_pd([1, 1, 1], 2))
show("left trefoil", braid_to_pd([-1, -1, -1], 2))
show("figure eight", braid_to_pd([1, -2, 1, -2], 3))
show("hopf link", braid_to_pd([1, 1], 2))

# -- invariance ----------------------------------------------------------
# Adding kinks and clasps changes the diagram but not the homology.
rng = random.Random(2)
pd = braid_to_pd([1, 1, 1], 2)
reference = tuple(integral_homology(build_complex(pd, "Kh")).rows())
for move in ("R1+", "R2", "R1-", "R1+", "R2"):
    if move == "R2":
        pd = reidemeister_move(pd, "R2", rng.choice(r2_sites(pd)))
    else:
        pd = reidemeister_move(pd, move, rng.choice(sorted(pd.arcs())))
    rows = tuple(integral_homology(build_complex(pd, "Kh")).rows())
    assert rows == reference, move
print("betti table of the trefoil unchanged under 5 R1/R2 moves")
print("final diagram has %d crossings" % pd.n)
