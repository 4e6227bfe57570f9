import random

import pytest

from knotfoam.errors import MalformedFoam, NonBipartiteBinding, OddEuler
from knotfoam.foam import (
    BLUE,
    RED,
    SIGMA_1,
    SIGMA_B,
    Binding,
    Facet,
    Foam,
    blue_components,
    cap_closure,
    chi_subsurface,
    count_n12,
    enumerate_colorings,
    evaluate_foam,
    foam_from_json,
    foam_to_json,
    random_closed_foam,
    validate_foam,
)
from knotfoam.polyring import IntPoly2

E = IntPoly2.x1_plus_x2()
PI = IntPoly2.x1_times_x2()


def blue_sphere(dots=0):
    return Foam((Facet("b", BLUE, dots=dots),), ())


def red_sphere(dots=0, squares=0):
    return Foam((Facet("r", RED, dots=dots, squares=squares),), ())


def theta(dots_u=0, dots_l=0, dots_r=0, squares_r=0, order=("u", "l")):
    return Foam(
        (
            Facet("U", BLUE, dots=dots_u, slots=("u",)),
            Facet("L", BLUE, dots=dots_l, slots=("l",)),
            Facet("R", RED, dots=dots_r, squares=squares_r, slots=("r",)),
        ),
        (Binding("beta", order, "r"),),
    )


def test_validate_ok():
    validate_foam(red_sphere())
    validate_foam(theta())


def test_validate_rejects_squares_on_blue():
    with pytest.raises(MalformedFoam):
        validate_foam(Foam((Facet("b", BLUE, squares=1),), ()))


def test_validate_rejects_missing_slot():
    foam = Foam((Facet("b", BLUE, slots=("s",)),), (Binding("x", ("s", "t"), "u"),))
    with pytest.raises(MalformedFoam):
        validate_foam(foam)


def test_validate_rejects_red_page_on_blue():
    foam = Foam(
        (
            Facet("a", BLUE, slots=("s1",)),
            Facet("b", BLUE, slots=("s2",)),
            Facet("c", BLUE, slots=("s3",)),
        ),
        (Binding("x", ("s1", "s2"), "s3"),),
    )
    with pytest.raises(MalformedFoam):
        validate_foam(foam)


def test_blue_components():
    assert len(blue_components(blue_sphere())) == 1
    two = Foam((Facet("a", BLUE), Facet("b", BLUE)), ())
    assert len(blue_components(two)) == 2
    assert len(blue_components(theta())) == 1


def test_coloring_counts():
    assert len(enumerate_colorings(blue_sphere())) == 2
    assert len(enumerate_colorings(red_sphere())) == 1
    assert len(enumerate_colorings(theta())) == 2


def test_colorings_proper_and_deterministic():
    foam = theta()
    colorings = enumerate_colorings(foam)
    assert colorings == enumerate_colorings(foam)
    for c in colorings:
        assert c["U"] != c["L"]


def test_nonbipartite_rejected():
    foam = Foam(
        (
            Facet("b", BLUE, slots=("s1", "s2")),
            Facet("r", RED, slots=("s3",)),
        ),
        (Binding("x", ("s1", "s2"), "s3"),),
    )
    with pytest.raises(NonBipartiteBinding):
        enumerate_colorings(foam)


def test_chi_subsurface():
    c = enumerate_colorings(blue_sphere())[0]
    # base coloring assigns 1 to the sphere
    assert c["b"] == 1
    assert chi_subsurface(blue_sphere(), c, SIGMA_1) == 2
    rc = enumerate_colorings(red_sphere())[0]
    assert chi_subsurface(red_sphere(), rc, SIGMA_B) == 0
    tc = enumerate_colorings(theta())[0]
    assert chi_subsurface(theta(), tc, SIGMA_B) == 2


def test_chi_odd_guard():
    disk = Foam((Facet("b", BLUE, slots=("h",)),), ())
    with pytest.raises(OddEuler):
        chi_subsurface(disk, {"b": 1}, SIGMA_B)


def test_count_n12():
    assert count_n12(red_sphere(), {}) == 0
    assert count_n12(blue_sphere(), {"b": 1}) == 0
    foam = theta()
    assert count_n12(foam, {"U": 1, "L": 2}) == 1
    assert count_n12(foam, {"U": 2, "L": 1}) == 0


def test_sphere_evaluations():
    assert evaluate_foam(red_sphere()) == IntPoly2.constant(-1)
    assert evaluate_foam(blue_sphere()).is_zero()
    assert evaluate_foam(blue_sphere(dots=1)) == IntPoly2.constant(-1)
    assert evaluate_foam(blue_sphere(dots=2)) == -1 * E


def test_red_sphere_decorations():
    for p in range(3):
        for s in range(3):
            expected = IntPoly2.constant(-1) * E ** p * PI ** s
            assert evaluate_foam(red_sphere(dots=p, squares=s)) == expected


def test_theta_evaluations():
    assert evaluate_foam(theta()).is_zero()
    assert evaluate_foam(theta(dots_u=1)) == IntPoly2.one()
    assert evaluate_foam(theta(dots_l=1)) == IntPoly2.constant(-1)
    # reversing the page order flips the sign
    assert evaluate_foam(theta(dots_u=1, order=("l", "u"))) == IntPoly2.constant(-1)


def test_evaluate_requires_closed():
    disk = Foam((Facet("b", BLUE, slots=("h",)),), ())
    with pytest.raises(MalformedFoam):
        evaluate_foam(disk)


def test_cap_closure_cylinder():
    cyl = Foam((Facet("c", BLUE, slots=("t", "b")),), ())
    assert evaluate_foam(cap_closure(cyl)).is_zero()
    assert evaluate_foam(cap_closure(cyl, {"t": 1})) == IntPoly2.constant(-1)
    assert evaluate_foam(cap_closure(cyl, {"t": 1, "b": 1})) == -1 * E


def test_cap_closure_bad_slot():
    with pytest.raises(MalformedFoam):
        cap_closure(blue_sphere(), {"nope": 1})


def test_random_foams_symmetric():
    rng = random.Random(7)
    for _ in range(120):
        foam = random_closed_foam(rng)
        value = evaluate_foam(foam)
        assert value.is_symmetric()


def test_coloring_count_matches_components():
    rng = random.Random(8)
    for _ in range(60):
        foam = random_closed_foam(rng)
        k = len(blue_components(foam))
        assert len(enumerate_colorings(foam)) == 2 ** k


def test_chi_parity():
    rng = random.Random(9)
    for _ in range(60):
        foam = random_closed_foam(rng)
        for coloring in enumerate_colorings(foam):
            assert chi_subsurface(foam, coloring, SIGMA_1) % 2 == 0
            assert chi_subsurface(foam, coloring, SIGMA_B) % 2 == 0


def test_red_decoration_multiplies():
    rng = random.Random(10)
    for _ in range(40):
        foam = random_closed_foam(rng)
        reds = foam.red_facets()
        if not reds:
            continue
        target = reds[0].id
        base = evaluate_foam(foam)
        p, s = rng.randint(0, 2), rng.randint(0, 2)
        decorated = Foam(
            tuple(
                Facet(f.id, f.color, f.genus, f.dots + (p if f.id == target else 0),
                      f.squares + (s if f.id == target else 0), f.slots)
                for f in foam.facets
            ),
            foam.bindings,
        )
        assert evaluate_foam(decorated) == base * E ** p * PI ** s


def test_blue_two_dot_reduction_consistency():
    # adding two dots on one blue facet agrees with the reduction
    # (X1+X2) * one dot - X1*X2 * no dot, facet by facet
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        foam = random_closed_foam(rng)
        blues = foam.blue_facets()
        if not blues:
            continue
        target = blues[0].id

        def with_dots(extra):
            return Foam(
                tuple(
                    Facet(f.id, f.color, f.genus,
                          f.dots + (extra if f.id == target else 0),
                          f.squares, f.slots)
                    for f in foam.facets
                ),
                foam.bindings,
            )

        lhs = evaluate_foam(with_dots(2))
        rhs = E * evaluate_foam(with_dots(1)) - PI * evaluate_foam(with_dots(0))
        assert lhs == rhs
        checked += 1


def test_json_round_trip():
    rng = random.Random(12)
    for _ in range(20):
        foam = random_closed_foam(rng)
        again = foam_from_json(foam_to_json(foam))
        assert evaluate_foam(again) == evaluate_foam(foam)


def test_json_rejects_mismatched_boundary():
    data = foam_to_json(Foam((Facet("b", BLUE, slots=("h",)),), ()))
    data["free_boundary"] = []
    with pytest.raises(MalformedFoam):
        foam_from_json(data)
