"""Decorated foams and their exact evaluation.

A foam is a purely combinatorial object here: facets colored blue or
red, each carrying a genus, a number of dots and (on red facets only) a
number of squares, glued along *bindings*.  A binding is a singular
circle with exactly three pages: an ordered pair of blue pages and one
red page.  Slots name the boundary circles of facets; a slot is either
attached to exactly one binding or left free, in which case the foam is
open.

The evaluation of a closed foam sums, over all colorings of the blue
facets by {1, 2} (proper across every binding), the terms

    (-1)^(chi(S1)/2) * (-1)^(n12) * prod_F P_F(X_c)

and divides the total exactly by (X1 - X2)^(chi(Sb)/2), where S1 is the
subsurface of facets carrying color 1 (blue colored 1, plus every red
facet), Sb is the full blue subsurface, n12 counts bindings whose
ordered blue pages are colored (1, 2), and P_F is X_c^dots on a blue
facet and (X1+X2)^dots * (X1*X2)^squares on a red one.  The result is a
symmetric polynomial with integer coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MalformedFoam, NonBipartiteBinding, OddEuler
from .polyring import IntPoly2

BLUE = "blue"
RED = "red"


@dataclass(frozen=True)
class Facet:
    id: str
    color: str
    genus: int = 0
    dots: int = 0
    squares: int = 0
    slots: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))

    @property
    def euler(self):
        """chi = 2 - 2*genus - number of boundary circles."""
        return 2 - 2 * self.genus - len(self.slots)


@dataclass(frozen=True)
class Binding:
    id: str
    blue_pages: tuple  # ordered pair of slot ids on blue facets
    red_page: str      # slot id on a red facet

    def __post_init__(self):
        object.__setattr__(self, "blue_pages", tuple(self.blue_pages))


@dataclass(frozen=True)
class Foam:
    """A foam; closed when every slot is attached to a binding.

    Free slots (the ``free_boundary``) are plain blue or red circles.
    """

    facets: tuple = ()
    bindings: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        object.__setattr__(self, "bindings", tuple(self.bindings))

    # -- lookup helpers -------------------------------------------------

    def facet_by_id(self, facet_id):
        for f in self.facets:
            if f.id == facet_id:
                return f
        raise KeyError(facet_id)

    def slot_owner(self, slot):
        for f in self.facets:
            if slot in f.slots:
                return f
        raise KeyError(slot)

    @property
    def free_boundary(self):
        """Ordered list of (slot, color) pairs not attached to any binding."""
        bound = set()
        for b in self.bindings:
            bound.update(b.blue_pages)
            bound.add(b.red_page)
        out = []
        for f in self.facets:
            for s in f.slots:
                if s not in bound:
                    out.append((s, f.color))
        return out

    @property
    def is_closed(self):
        return not self.free_boundary

    def blue_facets(self):
        return [f for f in self.facets if f.color == BLUE]

    def red_facets(self):
        return [f for f in self.facets if f.color == RED]


def validate_foam(foam):
    """Check all structural invariants; raises MalformedFoam on failure."""
    seen_ids = set()
    owners = {}
    for f in foam.facets:
        if f.id in seen_ids:
            raise MalformedFoam("duplicate facet id %r" % f.id)
        seen_ids.add(f.id)
        if f.color not in (BLUE, RED):
            raise MalformedFoam("facet %r has unknown color %r" % (f.id, f.color))
        if f.genus < 0 or f.dots < 0 or f.squares < 0:
            raise MalformedFoam("facet %r has negative decoration data" % f.id)
        if f.color == BLUE and f.squares:
            raise MalformedFoam("facet %r is blue but carries squares" % f.id)
        for s in f.slots:
            if s in owners:
                raise MalformedFoam("slot %r appears on two facets" % s)
            owners[s] = f

    used = set()
    binding_ids = set()
    for b in foam.bindings:
        if b.id in binding_ids:
            raise MalformedFoam("duplicate binding id %r" % b.id)
        binding_ids.add(b.id)
        if len(b.blue_pages) != 2:
            raise MalformedFoam("binding %r needs exactly two blue pages" % b.id)
        for s in b.blue_pages:
            if s not in owners:
                raise MalformedFoam("binding %r references missing slot %r" % (b.id, s))
            if owners[s].color != BLUE:
                raise MalformedFoam("binding %r blue page %r is on a red facet" % (b.id, s))
        if b.red_page not in owners:
            raise MalformedFoam("binding %r references missing slot %r" % (b.id, b.red_page))
        if owners[b.red_page].color != RED:
            raise MalformedFoam("binding %r red page %r is on a blue facet" % (b.id, b.red_page))
        for s in (*b.blue_pages, b.red_page):
            if s in used:
                raise MalformedFoam("slot %r attached to two bindings" % s)
            used.add(s)
    return foam


def blue_components(foam):
    """Connected components of the blue subsurface.

    Two blue facets are adjacent iff they are the two blue pages of some
    binding.  Returns a list of sorted facet-id lists, sorted by their
    smallest member, so the component count k is ``len(result)``.
    """
    parent = {f.id: f.id for f in foam.blue_facets()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in foam.bindings:
        u = find(foam.slot_owner(b.blue_pages[0]).id)
        v = find(foam.slot_owner(b.blue_pages[1]).id)
        if u != v:
            parent[u] = v
    groups = {}
    for fid in parent:
        groups.setdefault(find(fid), []).append(fid)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def enumerate_colorings(foam):
    """All proper {1,2}-colorings of the blue facets, deterministically.

    There are exactly 2**k of them, where k is the number of blue
    components: each component is 2-colored once by breadth-first
    propagation and then flipped independently.  Raises
    NonBipartiteBinding when propagation hits a contradiction.
    """
    adj = {f.id: [] for f in foam.blue_facets()}
    for b in foam.bindings:
        u = foam.slot_owner(b.blue_pages[0]).id
        v = foam.slot_owner(b.blue_pages[1]).id
        if u == v:
            raise NonBipartiteBinding(
                "binding %r has both blue pages on facet %r" % (b.id, u)
            )
        adj[u].append(v)
        adj[v].append(u)

    base = {}
    components = blue_components(foam)
    for comp in components:
        root = comp[0]
        base[root] = 1
        queue = [root]
        while queue:
            cur = queue.pop(0)
            for nxt in sorted(adj[cur]):
                want = 3 - base[cur]
                if nxt in base:
                    if base[nxt] != want:
                        raise NonBipartiteBinding(
                            "facets %r and %r force conflicting colors" % (cur, nxt)
                        )
                else:
                    base[nxt] = want
                    queue.append(nxt)

    colorings = []
    k = len(components)
    for mask in range(2 ** k):
        assignment = {}
        for i, comp in enumerate(components):
            flip = (mask >> i) & 1
            for fid in comp:
                c = base[fid]
                assignment[fid] = (3 - c) if flip else c
        colorings.append(assignment)
    return colorings


SIGMA_1 = "S1"
SIGMA_B = "Sb"


def chi_subsurface(foam, coloring, which):
    """Euler characteristic of a colored subsurface of a closed foam.

    ``which`` is ``SIGMA_1`` (blue facets colored 1 plus all red facets)
    or ``SIGMA_B`` (all blue facets).  Binding circles contribute zero,
    so the value is the plain sum of facet Euler characteristics; it is
    always even for a valid closed foam.
    """
    total = 0
    for f in foam.facets:
        if which == SIGMA_B:
            if f.color == BLUE:
                total += f.euler
        elif which == SIGMA_1:
            if f.color == RED or coloring.get(f.id) == 1:
                total += f.euler
        else:
            raise ValueError("unknown subsurface selector %r" % which)
    if total % 2:
        raise OddEuler("chi(%s) = %d is odd" % (which, total))
    return total


def count_n12(foam, coloring):
    """Number of bindings whose ordered blue pages are colored (1, 2)."""
    n = 0
    for b in foam.bindings:
        first = foam.slot_owner(b.blue_pages[0]).id
        second = foam.slot_owner(b.blue_pages[1]).id
        if coloring[first] == 1 and coloring[second] == 2:
            n += 1
    return n


def _facet_weight(facet, coloring):
    if facet.color == BLUE:
        c = coloring[facet.id]
        return IntPoly2.x1(facet.dots) if c == 1 else IntPoly2.x2(facet.dots)
    return IntPoly2.x1_plus_x2() ** facet.dots * IntPoly2.x1_times_x2() ** facet.squares


def evaluate_foam(foam):
    """Evaluate a closed foam to an element of Z[X1, X2]."""
    validate_foam(foam)
    if not foam.is_closed:
        raise MalformedFoam("cannot evaluate a foam with free boundary")
    numerator = IntPoly2.zero()
    colorings = enumerate_colorings(foam)
    denom_exp = None
    for coloring in colorings:
        chi1 = chi_subsurface(foam, coloring, SIGMA_1)
        chib = chi_subsurface(foam, coloring, SIGMA_B)
        if denom_exp is None:
            denom_exp = chib // 2
        sign = -1 if ((chi1 // 2) + count_n12(foam, coloring)) % 2 else 1
        term = IntPoly2.constant(sign)
        for f in foam.facets:
            term = term * _facet_weight(f, coloring)
        numerator = numerator + term
    if denom_exp is None:
        # no blue facets at all: single empty coloring over red facets
        denom_exp = 0
    return numerator.divide_by_difference_power(denom_exp)


def cap_closure(foam, caps=None):
    """Close every free slot with a disk cap carrying the given dots.

    ``caps`` maps free slot ids to dot counts (0..2 in the relation
    harness); missing slots get undotted caps.  Gluing a disk along a
    boundary circle simply erases that circle and transfers the disk's
    dots onto the facet, so caps are absorbed rather than stored as
    separate facets; the evaluation cannot tell the difference.
    """
    caps = dict(caps or {})
    free = dict(foam.free_boundary)
    for slot in caps:
        if slot not in free:
            raise MalformedFoam("cap assigned to non-free slot %r" % slot)
    new_facets = []
    for f in foam.facets:
        extra = 0
        kept = []
        for s in f.slots:
            if s in free:
                extra += caps.get(s, 0)
            else:
                kept.append(s)
        if extra or len(kept) != len(f.slots):
            new_facets.append(
                Facet(f.id, f.color, f.genus, f.dots + extra, f.squares, tuple(kept))
            )
        else:
            new_facets.append(f)
    closed = Foam(tuple(new_facets), foam.bindings)
    return validate_foam(closed)


@dataclass(frozen=True)
class FoamCombination:
    """A formal Z[X1,X2]-linear combination of open foams.

    All terms must present the same free-boundary color sequence; the
    i-th free slot of every term is glued to the same cap during
    closure.
    """

    terms: tuple = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def signature(self):
        sigs = {tuple(color for _, color in f.free_boundary) for _, f in self.terms}
        if len(sigs) > 1:
            raise MalformedFoam("terms of %r have mismatched boundaries" % self.name)
        return sigs.pop() if sigs else None


def _closure_value(combination, signature, dots):
    total = IntPoly2.zero()
    for coeff, foam in combination.terms:
        slots = [s for s, _ in foam.free_boundary]
        caps = dict(zip(slots, dots))
        total = total + coeff * evaluate_foam(cap_closure(foam, caps))
    return total


def verify_local_relation(lhs, rhs, max_dots=2):
    """Check an identity of foam combinations under every disk closure.

    Both sides are closed with disk caps carrying 0..max_dots dots in
    every combination, and the evaluations are compared exactly.
    Returns ``(True, None)`` on success and ``(False, witness)`` on the
    first disagreement, where the witness records the dot assignment and
    both values.
    """
    sig_l = lhs.signature()
    sig_r = rhs.signature()
    if sig_l is None and sig_r is None:
        sig = ()
    elif sig_l is None:
        sig = sig_r
    elif sig_r is None:
        sig = sig_l
    elif sig_l != sig_r:
        raise MalformedFoam("left and right boundary signatures differ")
    else:
        sig = sig_l
    for dots in itertools.product(range(max_dots + 1), repeat=len(sig)):
        lv = _closure_value(lhs, sig, dots)
        rv = _closure_value(rhs, sig, dots)
        if lv != rv:
            return False, {"dots": dots, "lhs": lv, "rhs": rv}
    return True, None


# -- random foams -----------------------------------------------------


def random_closed_foam(rng, max_facets=8, max_genus=2, max_decoration=3):
    """A random valid closed foam, colorable by construction.

    Blue facets receive a fixed parity bit and bindings only join blue
    facets of opposite parity, which keeps the page-adjacency graph
    bipartite.
    """
    n_blue = rng.randint(1, min(5, max_facets - 1))
    n_red = rng.randint(0, max(0, min(3, max_facets - n_blue)))
    n_bindings = rng.randint(0, 6)
    if n_bindings and n_red == 0:
        n_red = 1

    parity = {}
    blue_ids = []
    for i in range(n_blue):
        fid = "b%d" % i
        blue_ids.append(fid)
        parity[fid] = i % 2
    red_ids = ["r%d" % i for i in range(n_red)]

    even = [f for f in blue_ids if parity[f] == 0]
    odd = [f for f in blue_ids if parity[f] == 1]

    slots = {fid: [] for fid in blue_ids + red_ids}
    bindings = []
    counter = itertools.count()
    if even and odd:
        for j in range(n_bindings):
            u = rng.choice(even)
            v = rng.choice(odd)
            r = rng.choice(red_ids)
            s1 = "s%d" % next(counter)
            s2 = "s%d" % next(counter)
            s3 = "s%d" % next(counter)
            slots[u].append(s1)
            slots[v].append(s2)
            slots[r].append(s3)
            pages = (s1, s2) if rng.random() < 0.5 else (s2, s1)
            bindings.append(Binding("beta%d" % j, pages, s3))

    facets = []
    for fid in blue_ids:
        facets.append(
            Facet(
                fid,
                BLUE,
                genus=rng.randint(0, max_genus),
                dots=rng.randint(0, max_decoration),
                slots=tuple(slots[fid]),
            )
        )
    for fid in red_ids:
        facets.append(
            Facet(
                fid,
                RED,
                genus=rng.randint(0, max_genus),
                dots=rng.randint(0, max_decoration),
                squares=rng.randint(0, max_decoration),
                slots=tuple(slots[fid]),
            )
        )
    return validate_foam(Foam(tuple(facets), tuple(bindings)))


# -- JSON form --------------------------------------------------------


def foam_to_json(foam):
    return {
        "facets": [
            {
                "id": f.id,
                "color": f.color,
                "genus": f.genus,
                "dots": f.dots,
                "squares": f.squares,
                "slots": list(f.slots),
            }
            for f in foam.facets
        ],
        "bindings": [
            {"id": b.id, "blue_pages": list(b.blue_pages), "red_page": b.red_page}
            for b in foam.bindings
        ],
        "free_boundary": [
            {"slot": s, "color": c} for s, c in foam.free_boundary
        ],
    }


def foam_from_json(data):
    try:
        facets = tuple(
            Facet(
                d["id"],
                d["color"],
                d.get("genus", 0),
                d.get("dots", 0),
                d.get("squares", 0),
                tuple(d.get("slots", ())),
            )
            for d in data["facets"]
        )
        bindings = tuple(
            Binding(d["id"], tuple(d["blue_pages"]), d["red_page"])
            for d in data.get("bindings", ())
        )
    except (KeyError, TypeError) as exc:
        raise MalformedFoam("bad foam JSON: %s" % exc) from exc
    foam = validate_foam(Foam(facets, bindings))
    declared = data.get("free_boundary")
    if declared is not None:
        computed = foam.free_boundary
        given = [(d["slot"], d["color"]) for d in declared]
        if sorted(given) != sorted(computed):
            raise MalformedFoam("declared free boundary does not match structure")
    return foam
