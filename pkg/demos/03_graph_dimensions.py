"""Graded dimensions of planar trivalent graphs.

The state space of a graph has graded dimension (q + q^-1)^n where n
counts its blue loops.  Computing the dimension instead by repeatedly
removing bigon and square faces gives the same answer, which is the
content of the graded-dimension theorem; every reduction is exercised
here on smoothings of actual link diagrams.
"""

import random

from knotfoam import (
    State,
    blue_loop_count,
    braid_to_pd,
    cup_basis,
    find_bigon_or_square,
    graded_dimension,
    graph_evaluation,
    reduce_step,
    smoothing_graph,
)
from knotfoam.graphs import random_planar_graph
from knotfoam.polyring import LaurentQ

# -- smoothings of a one-crossing unknot --------------------------------
pd = braid_to_pd([1], 2)
g = smoothing_graph(pd, State((1,)))  # disoriented smoothing: a red edge
print("theta-shaped smoothing graph:")
print("  blue loops:      ", blue_loop_count(g))
print("  evaluation:      ", graph_evaluation(g))
print("  graded dimension:", graded_dimension(g))

face = find_bigon_or_square(g)
print("  first reducible face:", face.kind)
g2, factor = reduce_step(g, face)
print("  reduction factor:", factor, "  red edges left:", g2.red_edge_count())

# -- the cup-foam basis --------------------------------------------------
# A basis element puts at most one dot on each blue loop; its q-degree
# is (#undotted - #dotted), and the degrees add up to the dimension.
print()
print("cup basis of the theta graph:")
for dots, degree in cup_basis(g):
    print("  dots=%s  q-degree=%+d" % (dots, degree))

# -- the theorem on random graphs ----------------------------------------
rng = random.Random(1)
print()
print("checking 100 random smoothing graphs...")
for i in range(100):
    graph = random_planar_graph(rng)
    reduced = graded_dimension(graph)
    counted = graph_evaluation(graph)
    assert reduced == counted, i
    total = LaurentQ.zero()
    for _dots, degree in cup_basis(graph):
        total = total + LaurentQ.q(degree)
    assert total == reduced
print("reduction, circle count and cup basis all agree")
