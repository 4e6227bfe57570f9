"""Link diagrams as planar-diagram (PD) codes.

A PD code lists one 4-tuple of arc labels per crossing, read
counterclockwise starting at the incoming under-strand.  The
under-strand therefore runs from slot 0 to slot 2; the over-strand
occupies slots 1 and 3 and its direction is recovered by tracing
orientations around the diagram.  With that convention a crossing is
positive when the over-strand runs from slot 3 to slot 1 (matching the
usual published tables: the table trefoil X[1,4,2,5];X[3,6,4,1];
X[5,2,6,3] comes out with three negative crossings).

The 0-smoothing merges slots (0,1) and (2,3); the 1-smoothing merges
(0,3) and (1,2).  The resolution respecting every strand orientation is
then the 0-smoothing at positive crossings and the 1-smoothing at
negative ones, and its circles are the Seifert circles of the diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import InvalidBraid, InvalidDiagram, InvalidSite, ParseError


@dataclass(frozen=True)
class PDCode:
    crossings: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "crossings", tuple(tuple(c) for c in self.crossings)
        )

    @property
    def n(self):
        return len(self.crossings)

    def arcs(self):
        out = set()
        for c in self.crossings:
            out.update(c)
        return out

    def __str__(self):
        return ";".join("X[%d,%d,%d,%d]" % c for c in self.crossings)


def _arc_occurrences(pd):
    occ = {}
    for ci, c in enumerate(pd.crossings):
        for si, arc in enumerate(c):
            occ.setdefault(arc, []).append((ci, si))
    return occ


def validate_pd(pd):
    occ = _arc_occurrences(pd)
    for arc, places in occ.items():
        if arc <= 0:
            raise InvalidDiagram("arc labels must be positive, got %r" % arc)
        if len(places) != 2:
            raise InvalidDiagram(
                "arc %d appears %d times, expected 2" % (arc, len(places))
            )
    trace_orientations(pd)
    return pd


def trace_orientations(pd):
    """Assign a direction to every over-strand.

    Returns ``over_from_3`` -- a list of booleans, one per crossing,
    true when the over-strand runs slot 3 -> slot 1 (positive crossing).
    Raises InvalidDiagram when no consistent assignment exists.  When a
    component never passes under a crossing its direction is not forced;
    the first undetermined crossing is then resolved to positive, which
    keeps the result deterministic.
    """
    occ = _arc_occurrences(pd)
    # status of an arc occurrence: True = the arc flows into the crossing
    # here (its head), False = it leaves (its tail).
    status = {}
    over_from_3 = [None] * pd.n
    queue = []

    def set_status(place, value, arc):
        if place in status:
            if status[place] != value:
                raise InvalidDiagram("orientation conflict at arc %d" % arc)
            return
        status[place] = value
        queue.append((arc, place, value))

    def set_over(ci, from_3):
        if over_from_3[ci] is not None:
            if over_from_3[ci] != from_3:
                raise InvalidDiagram("orientation conflict at crossing %d" % ci)
            return
        over_from_3[ci] = from_3
        c = pd.crossings[ci]
        if from_3:
            set_status((ci, 3), True, c[3])
            set_status((ci, 1), False, c[1])
        else:
            set_status((ci, 1), True, c[1])
            set_status((ci, 3), False, c[3])

    for ci, c in enumerate(pd.crossings):
        set_status((ci, 0), True, c[0])
        set_status((ci, 2), False, c[2])

    while True:
        while queue:
            arc, place, value = queue.pop(0)
            places = occ[arc]
            other = places[0] if places[1] == place else places[1]
            if places[0] == places[1]:
                raise InvalidDiagram("arc %d occurs twice in one slot" % arc)
            want = not value  # one head and one tail per arc
            ci, si = other
            if si == 0:
                if want is not True:
                    raise InvalidDiagram("arc %d cannot close up" % arc)
            elif si == 2:
                if want is not False:
                    raise InvalidDiagram("arc %d cannot close up" % arc)
            elif si == 3:
                set_over(ci, want)  # head at 3 <=> over runs 3 -> 1
            else:
                set_over(ci, not want)  # head at 1 <=> over runs 1 -> 3
        undecided = [ci for ci in range(pd.n) if over_from_3[ci] is None]
        if not undecided:
            break
        set_over(undecided[0], True)
    return over_from_3


def compute_signs(pd):
    """(n_plus, n_minus, per-crossing signs) from the orientation trace."""
    over = trace_orientations(pd)
    signs = [1 if o else -1 for o in over]
    n_plus = sum(1 for s in signs if s > 0)
    return n_plus, pd.n - n_plus, signs


def link_components(pd):
    """Number of link components (1 for the empty unknot diagram)."""
    if pd.n == 0:
        return 1
    parent = {a: a for a in pd.arcs()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for (a, b, c, d) in pd.crossings:
        union(a, c)
        union(b, d)
    return len({find(a) for a in parent})


_PD_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text):
    """Parse ``X[a,b,c,d];...`` or a bracketed list of 4-tuples.

    The empty string is the 0-crossing unknot diagram.
    """
    text = text.strip()
    if not text:
        return PDCode()
    if text.startswith("[") or text.startswith("("):
        try:
            import ast

            data = ast.literal_eval(text)
            crossings = [tuple(int(v) for v in row) for row in data]
            if any(len(c) != 4 for c in crossings):
                raise ValueError
        except (ValueError, SyntaxError) as exc:
            raise ParseError("malformed PD list", position=0) from exc
        return validate_pd(PDCode(tuple(crossings)))
    crossings = []
    pos = 0
    for chunk in text.split(";"):
        chunk_stripped = chunk.strip()
        m = _PD_TOKEN.fullmatch(chunk_stripped)
        if not m:
            raise ParseError("expected X[a,b,c,d] at %r" % chunk_stripped, position=pos)
        crossings.append(tuple(int(g) for g in m.groups()))
        pos += len(chunk) + 1
    return validate_pd(PDCode(tuple(crossings)))


def braid_to_pd(word, strands):
    """PD code of the closure of a braid word.

    Positive generator k crosses strand k+1 over strand k.  Every strand
    must be involved in at least one crossing, otherwise the closure has
    a crossingless circle that a PD code cannot carry.
    """
    if strands < 2:
        raise InvalidBraid("need at least 2 strands")
    for w in word:
        if w == 0 or abs(w) >= strands:
            raise InvalidBraid("generator %d out of range for %d strands" % (w, strands))
    touched = set()
    for w in word:
        touched.add(abs(w))
        touched.add(abs(w) + 1)
    if touched != set(range(1, strands + 1)):
        raise InvalidBraid("closure has a crossingless component")

    cur = {pos: pos for pos in range(1, strands + 1)}
    initial = dict(cur)
    next_arc = strands + 1
    crossings = []
    for w in word:
        k = abs(w)
        fresh1, fresh2 = next_arc, next_arc + 1
        next_arc += 2
        if w > 0:
            # right strand over left: X[under_in, over_out, under_out, over_in]
            crossings.append((cur[k], fresh1, fresh2, cur[k + 1]))
            cur[k], cur[k + 1] = fresh1, fresh2
        else:
            crossings.append((cur[k + 1], cur[k], fresh1, fresh2))
            cur[k], cur[k + 1] = fresh1, fresh2

    rename = {}
    for pos in range(1, strands + 1):
        final = cur[pos]
        if final == initial[pos]:
            raise InvalidBraid("closure has a crossingless component")
        rename[final] = initial[pos]
    crossings = [tuple(rename.get(a, a) for a in c) for c in crossings]

    labels = sorted({a for c in crossings for a in c})
    relabel = {a: i + 1 for i, a in enumerate(labels)}
    crossings = [tuple(relabel[a] for a in c) for c in crossings]
    return validate_pd(PDCode(tuple(crossings)))


def mirror(pd):
    """The mirror diagram: every crossing's over/under strands swap.

    The mirrored tuple is rotated to start at the new incoming
    under-strand, which is the old incoming over-strand.
    """
    over = trace_orientations(pd)
    crossings = []
    for (a, b, c, d), from_3 in zip(pd.crossings, over):
        if from_3:
            crossings.append((d, a, b, c))
        else:
            crossings.append((b, c, d, a))
    return validate_pd(PDCode(tuple(crossings)))


@dataclass(frozen=True)
class State:
    assignment: tuple  # 0/1 per crossing, indexed by PD position

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))

    def height_sum(self):
        return sum(self.assignment)


@dataclass(frozen=True)
class SmoothingResult:
    circle_count: int
    membership: dict  # arc -> circle id (smallest arc in the circle)

    def circles(self):
        out = {}
        for arc, cid in self.membership.items():
            out.setdefault(cid, set()).add(arc)
        return out


def smooth_state(pd, state):
    """Circles of the complete smoothing selected by ``state``."""
    if pd.n == 0:
        return SmoothingResult(1, {})
    if len(state.assignment) != pd.n:
        raise InvalidDiagram("state length does not match crossing count")
    parent = {a: a for a in pd.arcs()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for (a, b, c, d), s in zip(pd.crossings, state.assignment):
        if s == 0:
            union(a, b)
            union(c, d)
        else:
            union(a, d)
            union(b, c)
    membership = {a: find(a) for a in parent}
    return SmoothingResult(len(set(membership.values())), membership)


def oriented_state(pd):
    """The orientation-respecting state: 0 at positive, 1 at negative."""
    _, _, signs = compute_signs(pd)
    return State(tuple(0 if s > 0 else 1 for s in signs))


def state_height(pd, state):
    """Homological height: sum of the state minus the negative count."""
    _, n_minus, _ = compute_signs(pd)
    return state.height_sum() - n_minus


# -- diagram regions (used to pick valid R2 sites) ----------------------


def regions(pd):
    """Faces of the underlying 4-valent planar graph.

    Each region is a list of ports (crossing, slot); walking a region
    leaves a crossing through a port's arc and re-enters at the arc's
    other endpoint, turning one slot counterclockwise.
    """
    occ = _arc_occurrences(pd)

    def step(port):
        ci, si = port
        arc = pd.crossings[ci][si]
        p1, p2 = occ[arc]
        nci, nsi = p2 if p1 == port else p1
        return (nci, (nsi + 1) % 4)

    seen = set()
    out = []
    for ci in range(pd.n):
        for si in range(4):
            port = (ci, si)
            if port in seen:
                continue
            walk = []
            cur = port
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                cur = step(cur)
            out.append(walk)
    return out


def reidemeister_move(pd, move, site=None):
    """Insert an R1 kink or an R2 clasp.

    * ``move="R1+"`` / ``"R1-"``: ``site`` is an arc label (or None on
      the empty diagram); adds one positive / negative crossing.
    * ``move="R2"``: ``site`` is a pair of ports ((ci, si), (cj, sj))
      bounding one region, as produced by :func:`r2_sites`; adds two
      crossings of opposite sign.
    """
    if move in ("R1+", "R1-"):
        return _r1(pd, move == "R1+", site)
    if move == "R2":
        return _r2(pd, site)
    raise InvalidSite("unknown move %r" % move)


def _fresh_labels(pd, count):
    start = max(pd.arcs(), default=0) + 1
    return list(range(start, start + count))


def _r1(pd, positive, arc):
    if pd.n == 0:
        if positive:
            return validate_pd(PDCode(((1, 1, 2, 2),)))
        return validate_pd(PDCode(((1, 2, 2, 1),)))
    if arc is None or arc not in pd.arcs():
        raise InvalidSite("no arc %r in diagram" % arc)
    y, z = _fresh_labels(pd, 2)
    occ = _arc_occurrences(pd)
    status_head = None
    # find the occurrence where the arc flows into a crossing
    over = trace_orientations(pd)
    for (ci, si) in occ[arc]:
        into = (
            si == 0
            or (si == 3 and over[ci])
            or (si == 1 and not over[ci])
        )
        if into:
            status_head = (ci, si)
            break
    if status_head is None:
        raise InvalidSite("arc %r has no head occurrence" % arc)
    crossings = [list(c) for c in pd.crossings]
    ci, si = status_head
    crossings[ci][si] = z
    if positive:
        kink = (arc, z, y, y)
    else:
        kink = (arc, y, y, z)
    crossings.append(list(kink))
    return validate_pd(PDCode(tuple(tuple(c) for c in crossings)))


def r2_sites(pd):
    """All (port, port) pairs on a common region with distinct arcs."""
    out = []
    for walk in regions(pd):
        for i in range(len(walk)):
            for j in range(i + 1, len(walk)):
                (ci, si), (cj, sj) = walk[i], walk[j]
                if pd.crossings[ci][si] != pd.crossings[cj][sj]:
                    out.append((walk[i], walk[j]))
    return out


def _port_direction(pd, port):
    """True when the arc flows away from the crossing at this port."""
    ci, si = port
    over = trace_orientations(pd)
    if si == 2:
        return True
    if si == 0:
        return False
    if si == 1:
        return over[ci]
    return not over[ci]


def _r2(pd, site):
    if pd.n == 0:
        raise InvalidSite("R2 needs two arcs")
    try:
        px, py = site
    except (TypeError, ValueError):
        raise InvalidSite("R2 site must be a pair of ports") from None
    region_walk = None
    for walk in regions(pd):
        if px in walk and py in walk:
            region_walk = walk
            break
    if region_walk is None:
        raise InvalidSite("ports do not bound a common region")
    x = pd.crossings[px[0]][px[1]]
    y = pd.crossings[py[0]][py[1]]
    if x == y:
        raise InvalidSite("R2 needs two distinct arcs")

    # Walking the region, a port with the arc flowing away from its
    # crossing is traversed with the strand; the two segments run
    # strand-parallel exactly when their walk parities differ.
    dir_x = _port_direction(pd, px)
    dir_y = _port_direction(pd, py)
    m, m2, x2, y2 = _fresh_labels(pd, 4)

    occ = _arc_occurrences(pd)
    over = trace_orientations(pd)

    def head_occurrence(arc):
        for (ci, si) in occ[arc]:
            if (
                si == 0
                or (si == 3 and over[ci])
                or (si == 1 and not over[ci])
            ):
                return (ci, si)
        raise InvalidSite("arc %r has no head occurrence" % arc)

    hx = head_occurrence(x)
    hy = head_occurrence(y)
    crossings = [list(c) for c in pd.crossings]
    crossings[hx[0]][hx[1]] = x2
    crossings[hy[0]][hy[1]] = y2
    if dir_x != dir_y:
        # strand-parallel segments: x under, y over both times;
        # lower crossing negative, upper positive.
        k1 = (x, y, m, m2)
        k2 = (m, y2, x2, m2)
    else:
        # anti-parallel segments
        k1 = (x, y2, m, m2)
        k2 = (m, y, x2, m2)
    crossings.append(list(k1))
    crossings.append(list(k2))
    return validate_pd(PDCode(tuple(tuple(c) for c in crossings)))
