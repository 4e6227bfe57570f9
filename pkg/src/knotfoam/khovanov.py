"""The cube of resolutions and the graded chain complex over Z.

Each crossing is smoothed both ways, giving 2^n complete smoothings.  A
generator is a smoothing together with a {1, X} label on each of its
circles; its homological degree is (sum of the state) - n_minus and its
q-degree is (#1-labels - #X-labels) + degree + n_plus - n_minus.  The
differential flips one crossing from 0 to 1, applying the merge map m or
the split map Delta of the rank-two Frobenius algebra (X^2 = 0), with
the sign (-1)^(number of 1-coordinates before the flipped one).  The Lee
variant deforms the algebra to X^2 = 1; its extra terms raise q-degree
by exactly 4 while the undeformed part preserves it.

Labels are encoded as 0 for the unit generator and 1 for X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import State, compute_signs, smooth_state
from .errors import NotAComplex, TooLarge
from .polyring import LaurentQ

KH = "Kh"
LEE = "Lee"

# merge: (label, label) -> {label: coefficient}
_MERGE_KH = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}}
_MERGE_LEE = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}
# split: label -> {(label, label): coefficient}
_SPLIT_KH = {0: {(0, 1): 1, (1, 0): 1}, 1: {(1, 1): 1}}
_SPLIT_LEE = {0: {(0, 1): 1, (1, 0): 1}, 1: {(0, 0): 1, (1, 1): 1}}


def edge_map(kind, side):
    """The label-level merge or split map of the chosen theory."""
    if kind == "merge":
        return _MERGE_KH if side == KH else _MERGE_LEE
    if kind == "split":
        return _SPLIT_KH if side == KH else _SPLIT_LEE
    raise ValueError("kind must be 'merge' or 'split'")


@dataclass(frozen=True)
class Generator:
    state: tuple          # 0/1 per crossing
    circles: tuple        # canonical circle ids, sorted
    labels: tuple         # 0 (unit) or 1 (X) per circle
    hom_degree: int
    q_degree: int


class GradedChainComplex:
    """Finitely generated free chain complex with a q-degree per generator.

    ``generators[i]`` lists the degree-i generators in a fixed order and
    ``differentials[i]`` is the sparse matrix (row, col) -> entry of the
    map from degree i to degree i+1.
    """

    def __init__(self, side, n_plus, n_minus):
        self.side = side
        self.n_plus = n_plus
        self.n_minus = n_minus
        self.generators = {}
        self.differentials = {}

    @property
    def degrees(self):
        return sorted(self.generators)

    def dim(self, i):
        return len(self.generators.get(i, ()))

    def q_degrees(self, i):
        return [g.q_degree for g in self.generators.get(i, ())]

    def total_dim(self):
        return sum(len(v) for v in self.generators.values())

    def matrix(self, i):
        return self.differentials.get(i, {})

    def check_d_squared(self):
        for i in self.degrees:
            d1 = self.matrix(i)
            d2 = self.matrix(i + 1)
            if not d1 or not d2:
                continue
            by_col = {}
            for (r, c), v in d1.items():
                by_col.setdefault(c, []).append((r, v))
            # compose: (d2 * d1)[r, c] = sum_k d2[r, k] * d1[k, c]
            d2_by_col = {}
            for (r, c), v in d2.items():
                d2_by_col.setdefault(c, []).append((r, v))
            for c, col in by_col.items():
                acc = {}
                for k, v in col:
                    for r, w in d2_by_col.get(k, ()):
                        acc[r] = acc.get(r, 0) + v * w
                if any(acc.values()):
                    raise NotAComplex("d o d != 0 at degree %d" % i)
        return True


def _state_tuple(mask, n):
    return tuple((mask >> j) & 1 for j in range(n))


def _sign(state, j):
    return -1 if sum(state[:j]) % 2 else 1


def build_complex(pd, side=KH, max_crossings=14):
    """Build the Khovanov or Lee complex of a diagram.

    The Lee complex carries the same generators and q-degrees; its
    differential decomposes as the Khovanov part plus a part raising
    q-degree by 4.
    """
    n = pd.n
    if n > max_crossings:
        raise TooLarge("%d crossings exceeds limit %d" % (n, max_crossings))
    n_plus, n_minus, _ = compute_signs(pd)
    cx = GradedChainComplex(side, n_plus, n_minus)

    smoothings = {}
    for mask in range(2 ** n):
        st = _state_tuple(mask, n)
        smoothings[st] = smooth_state(pd, State(st))

    # generators, grouped by homological degree, states in binary order
    index = {}
    for mask in range(2 ** n):
        st = _state_tuple(mask, n)
        res = smoothings[st]
        circles = sorted(set(res.membership.values())) if n else [0]
        i = sum(st) - n_minus
        bucket = cx.generators.setdefault(i, [])
        for labels in itertools.product((0, 1), repeat=len(circles)):
            q = (labels.count(0) - labels.count(1)) + i + n_plus - n_minus
            g = Generator(st, tuple(circles), labels, i, q)
            index[(st, labels)] = (i, len(bucket))
            bucket.append(g)

    merge_map = edge_map("merge", side)
    split_map = edge_map("split", side)

    for mask in range(2 ** n):
        st = _state_tuple(mask, n)
        src = smoothings[st]
        src_circles = sorted(set(src.membership.values()))
        i = sum(st) - n_minus
        for j in range(n):
            if st[j]:
                continue
            tgt_state = tuple(
                (1 if k == j else st[k]) for k in range(n)
            )
            tgt = smoothings[tgt_state]
            sign = _sign(st, j)
            a, b, c, d = pd.crossings[j]
            c1 = src.membership[a]
            c2 = src.membership[c]
            entries = cx.differentials.setdefault(i, {})
            if c1 != c2:
                # two circles merge into one
                tcid = tgt.membership[a]
                others = [cid for cid in src_circles if cid not in (c1, c2)]
                corr = _correspondence(src, tgt, others)
                for labels in itertools.product((0, 1), repeat=len(src_circles)):
                    la = labels[src_circles.index(c1)]
                    lb = labels[src_circles.index(c2)]
                    for lc, coeff in merge_map[(la, lb)].items():
                        _add_entry(
                            entries, index, st, labels, tgt_state, src_circles,
                            tgt, corr, {tcid: lc}, coeff * sign,
                        )
            else:
                # one circle splits in two
                t1 = tgt.membership[a]
                t2 = tgt.membership[b]
                others = [cid for cid in src_circles if cid != c1]
                corr = _correspondence(src, tgt, others)
                for labels in itertools.product((0, 1), repeat=len(src_circles)):
                    lc = labels[src_circles.index(c1)]
                    for (la, lb), coeff in split_map[lc].items():
                        _add_entry(
                            entries, index, st, labels, tgt_state, src_circles,
                            tgt, corr, {t1: la, t2: lb}, coeff * sign,
                        )
    return cx


def _correspondence(src, tgt, circle_ids):
    """Map untouched source circles to their target ids via a shared arc."""
    rep = {}
    for arc, cid in src.membership.items():
        if cid in rep:
            continue
        rep[cid] = arc
    return {cid: tgt.membership[rep[cid]] for cid in circle_ids}


def _add_entry(entries, index, src_state, src_labels, tgt_state, src_circles,
               tgt, corr, forced, coeff):
    if coeff == 0:
        return
    src_by_circle = dict(zip(src_circles, src_labels))
    tgt_circles = sorted(set(tgt.membership.values()))
    tgt_labels = []
    for cid in tgt_circles:
        if cid in forced:
            tgt_labels.append(forced[cid])
        else:
            # cid corresponds to exactly one untouched source circle
            src_cid = next(k for k, v in corr.items() if v == cid)
            tgt_labels.append(src_by_circle[src_cid])
    _, col = index[(src_state, src_labels)]
    _, row = index[(tgt_state, tuple(tgt_labels))]
    key = (row, col)
    entries[key] = entries.get(key, 0) + coeff
    if entries[key] == 0:
        del entries[key]


def graded_euler_characteristic(cx):
    """Sum of (-1)^i q^(q-degree) over all generators."""
    total = LaurentQ.zero()
    for i, gens in cx.generators.items():
        sign = -1 if i % 2 else 1
        terms = {}
        for g in gens:
            terms[g.q_degree] = terms.get(g.q_degree, 0) + sign
        total = total + LaurentQ(terms)
    return total


def kauffman_oracle(pd, max_crossings=14):
    """Unnormalized Jones polynomial by direct state sum.

    Independent of the chain-complex machinery: walks all 2^n
    smoothings, weighting a state of height h (sum of its entries) with
    c circles by (-q)^h (q + q^-1)^c, then applies the orientation
    shift (-1)^(n_minus) q^(n_plus - 2 n_minus).  Normalized so the
    unknot gives q + q^-1.
    """
    n = pd.n
    if n > max_crossings:
        raise TooLarge("%d crossings exceeds limit %d" % (n, max_crossings))
    n_plus, n_minus, _ = compute_signs(pd)
    circle = LaurentQ.circle()
    total = LaurentQ.zero()
    for mask in range(2 ** n):
        st = _state_tuple(mask, n)
        h = sum(st)
        c = smooth_state(pd, State(st)).circle_count
        term = (circle ** c) * ((-1) ** h)
        total = total + term.shifted(h)
    total = total * ((-1) ** n_minus)
    return total.shifted(n_plus - 2 * n_minus)
