"""Evaluating closed decorated foams.

A foam is a collection of blue and red facets glued along binding
circles, each binding carrying two blue pages and one red page.  The
evaluation sums signed monomials over all proper {1,2}-colorings of the
blue facets and divides exactly by a power of (X1 - X2); the result is
always a symmetric polynomial with integer coefficients.
"""

import random

from knotfoam import (
    Binding,
    Facet,
    Foam,
    enumerate_colorings,
    evaluate_foam,
    random_closed_foam,
)

# -- spheres -----------------------------------------------------------
# The three simplest closed foams.  A red sphere has a single coloring
# and evaluates to -1; an undotted blue sphere's two colorings cancel,
# and one dot breaks the cancellation.

red_sphere = Foam((Facet("r", "red"),), ())
blue_sphere = Foam((Facet("b", "blue"),), ())
dotted = Foam((Facet("b", "blue", dots=1),), ())

print("red sphere:            ", evaluate_foam(red_sphere))
print("blue sphere:           ", evaluate_foam(blue_sphere))
print("blue sphere, one dot:  ", evaluate_foam(dotted))
print("blue sphere, two dots: ", evaluate_foam(Foam((Facet("b", "blue", dots=2),), ())))

# Dots on a red facet multiply by X1+X2, squares by X1*X2.
decorated = Foam((Facet("r", "red", dots=1, squares=1),), ())
print("red sphere, dot+square:", evaluate_foam(decorated))

# -- the theta foam ----------------------------------------------------
# Two blue disks and one red disk share a single binding circle.  The
# two colorings swap the blue disks; a dot breaks the symmetry and the
# page order in the binding fixes the sign.

theta = Foam(
    (
        Facet("U", "blue", slots=("u",)),
        Facet("L", "blue", slots=("l",)),
        Facet("R", "red", slots=("r",)),
    ),
    (Binding("beta", ("u", "l"), "r"),),
)
print()
print("theta foam colorings:  ", len(enumerate_colorings(theta)))
print("theta foam:            ", evaluate_foam(theta))

dotted_theta = Foam(
    (
        Facet("U", "blue", dots=1, slots=("u",)),
        Facet("L", "blue", slots=("l",)),
        Facet("R", "red", slots=("r",)),
    ),
    (Binding("beta", ("u", "l"), "r"),),
)
print("theta, dot on 1st page:", evaluate_foam(dotted_theta))

# -- the symmetry proposition ------------------------------------------
# Every valid closed foam evaluates to a symmetric integer polynomial:
# the division by (X1 - X2)^(chi/2) is always exact.

rng = random.Random(0)
print()
print("checking 200 random foams...")
for i in range(200):
    foam = random_closed_foam(rng)
    value = evaluate_foam(foam)
    assert value.is_symmetric(), (i, value)
print("all 200 evaluations are symmetric integer polynomials")
