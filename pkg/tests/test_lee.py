import random

import pytest

from knotfoam.diagram import braid_to_pd, mirror, parse_pd, r2_sites, reidemeister_move
from knotfoam.errors import NotAKnot, RankMismatch
from knotfoam.lee import (
    build_lee,
    class_filtration_degree,
    filtration_profile,
    lee_homology_betti,
    lee_rank,
    oriented_resolution_generators,
    s_invariant,
    slice_genus_lower_bound,
)
from knotfoam.khovanov import KH, build_complex


def test_unknot_lee_complex():
    fc = build_lee(parse_pd(""))
    assert fc.total_dim() == 2
    assert fc.matrix(0) == {}
    assert lee_rank(fc, 1) == 2


def test_one_crossing_unknot_rank():
    fc = build_lee(braid_to_pd([1], 2))
    assert lee_rank(fc, 1) == 2


def test_lee_rank_theorem():
    from knotfoam.diagram import link_components

    cases = [
        (braid_to_pd([1, 1, 1], 2), 1),
        (braid_to_pd([1, 1], 2), 2),          # hopf link
        (braid_to_pd([1, 1, 1, 1], 2), 2),    # T(2,4) link
        (braid_to_pd([1, -2, 1, -2], 3), 1),  # figure eight
        (braid_to_pd([1, 1, 2, 2], 3), 3),    # identity permutation: 3 parts
    ]
    for pd, comps in cases:
        assert link_components(pd) == comps
        assert lee_rank(build_lee(pd), comps) == 2 ** comps


def test_lee_rank_mismatch_error():
    fc = build_lee(braid_to_pd([1, 1, 1], 2))
    with pytest.raises(RankMismatch):
        lee_rank(fc, 2)


def test_phi_raises_q_by_four():
    rng = random.Random(60)
    from knotfoam.errors import InvalidBraid

    for _ in range(10):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(2, 6))]
        try:
            pd = braid_to_pd(word, 3)
        except InvalidBraid:
            continue
        kh = build_complex(pd, KH)
        fc = build_lee(pd)
        for i in fc.degrees:
            qs = fc.q_degrees(i)
            qs_next = fc.q_degrees(i + 1)
            for (r, c), v in fc.matrix(i).items():
                jump = qs_next[r] - qs[c]
                assert jump in (0, 4)
                if jump == 0:
                    assert kh.matrix(i).get((r, c)) == v


def test_unknot_generators():
    pd = parse_pd("")
    fc = build_lee(pd)
    sa, sb = oriented_resolution_generators(pd, fc)
    gens = fc.generators[0]
    coeff_a = {gens[i].labels: v for i, v in sa.chain.items()}
    coeff_b = {gens[i].labels: v for i, v in sb.chain.items()}
    assert coeff_a == {(0,): 1, (1,): 1}     # 1 + X
    assert coeff_b == {(0,): 1, (1,): -1}    # 1 - X


def test_generators_are_cycles():
    for word, strands in ([1, 1, 1], 2), ([1, -2, 1, -2], 3), ([1], 2):
        pd = braid_to_pd(word, strands)
        oriented_resolution_generators(pd)  # raises NotACycle on failure


def test_scaling_preserves_filtration_degree():
    from knotfoam.lee import LeeClass

    pd = braid_to_pd([1, 1, 1], 2)
    fc = build_lee(pd)
    sa, _sb = oriented_resolution_generators(pd, fc)
    scaled = LeeClass(sa.hom_degree, {k: 3 * v for k, v in sa.chain.items()})
    assert class_filtration_degree(fc, scaled) == class_filtration_degree(fc, sa)


def test_unknot_profile():
    fc = build_lee(parse_pd(""))
    assert filtration_profile(fc) == {-1: 2, 1: 1, 2: 0}


def test_profile_monotone():
    for word, strands in ([1, 1, 1], 2), ([1, -2, 1, -2], 3), ([1, 1, 1, 1, 1], 2):
        fc = build_lee(braid_to_pd(word, strands))
        profile = filtration_profile(fc)
        levels = sorted(profile)
        values = [profile[j] for j in levels]
        assert values == sorted(values, reverse=True)


def test_trefoil_profile_two_jumps():
    fc = build_lee(braid_to_pd([1, 1, 1], 2))
    profile = filtration_profile(fc)
    jumps = []
    levels = sorted(profile)
    for a, b in zip(levels, levels[1:]):
        if profile[a] != profile[b]:
            jumps.append(a)
    assert len(jumps) == 2
    assert jumps[1] - jumps[0] == 2


def test_s_values():
    assert s_invariant(parse_pd(""))[0] == 0
    assert s_invariant(braid_to_pd([1, 1, 1], 2))[0] == 2
    assert s_invariant(braid_to_pd([-1, -1, -1], 2))[0] == -2
    assert s_invariant(braid_to_pd([1, -2, 1, -2], 3))[0] == 0
    assert s_invariant(braid_to_pd([1, 1, 1, 1, 1], 2))[0] == 4


def test_s_structure():
    for word, strands in ([1, 1, 1], 2), ([1, -2, 1, -2], 3), ([1, 1, 1, 1, 1], 2):
        pd = braid_to_pd(word, strands)
        s, detail = s_invariant(pd)
        assert s % 2 == 0
        assert detail["s_max"] == detail["s_min"] + 2
        assert detail["class_degrees"] == (detail["s_min"], detail["s_min"])


def test_s_mirror_antisymmetry():
    for word, strands in ([1, 1, 1], 2), ([1, 1, 1, 1, 1], 2), ([1, -2, 1, -2], 3):
        pd = braid_to_pd(word, strands)
        s, _ = s_invariant(pd)
        sm, _ = s_invariant(mirror(pd))
        assert sm == -s


def test_s_invariant_under_moves():
    rng = random.Random(61)
    pd = braid_to_pd([1, 1, 1], 2)
    s0, _ = s_invariant(pd)
    for _ in range(4):
        mv = rng.choice(["R1+", "R1-", "R2"])
        if mv == "R2":
            pd = reidemeister_move(pd, "R2", rng.choice(r2_sites(pd)))
        else:
            pd = reidemeister_move(pd, mv, rng.choice(sorted(pd.arcs())))
        assert s_invariant(pd)[0] == s0


def test_s_rejects_links():
    with pytest.raises(NotAKnot):
        s_invariant(braid_to_pd([1, 1], 2))


def test_lee_betti_concentrated_for_knots():
    fc = build_lee(braid_to_pd([1, 1, 1], 2))
    assert lee_homology_betti(fc) == {0: 2}


def test_knot_q_degrees_share_parity():
    # odd q-degrees throughout, so s_min/s_max are odd and s is even
    for word, strands in ([1], 2), ([1, 1, 1], 2), ([1, -2, 1, -2], 3):
        fc = build_lee(braid_to_pd(word, strands))
        qs = [q for i in fc.degrees for q in fc.q_degrees(i)]
        assert all(q % 2 == 1 for q in qs)


def test_slice_genus_bound():
    assert slice_genus_lower_bound(0) == 0
    assert slice_genus_lower_bound(2) == 1
    assert slice_genus_lower_bound(-4) == 2
