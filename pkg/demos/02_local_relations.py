"""The local relations of the foam evaluation.

Each relation is an identity between formal combinations of open foams
sharing a boundary.  The closure harness caps every free circle with a
disk carrying 0..max_dots dots and compares the two sides exactly; a
wrong sign anywhere shows up as a witness closure.
"""

from knotfoam import relation_fixtures, verify_local_relation
from knotfoam.foam import FoamCombination
from knotfoam.polyring import IntPoly2

print("verifying every checked-in relation with max_dots = 2:")
for name, description, lhs, rhs in relation_fixtures():
    ok, witness = verify_local_relation(lhs, rhs, max_dots=2)
    print("  %-30s %s" % (name, "pass" if ok else "FAIL %s" % witness))
    assert ok

# The harness is not a rubber stamp: corrupt one side and it points at
# the first closure where the two sides disagree.
print()
print("corrupting the red neck-cutting relation on purpose...")
for name, _desc, lhs, rhs in relation_fixtures():
    if name != "red-neck-cutting":
        continue
    wrong = FoamCombination(
        tuple((IntPoly2.constant(-1) * c, f) for c, f in rhs.terms),
        name="wrong-sign",
    )
    ok, witness = verify_local_relation(lhs, wrong, max_dots=2)
    assert not ok
    print("  caught: closure dots=%s" % (witness["dots"],))
    print("    lhs evaluates to %s" % witness["lhs"])
    print("    rhs evaluates to %s" % witness["rhs"])
