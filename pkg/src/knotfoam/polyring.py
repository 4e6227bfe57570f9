"""Exact polynomial arithmetic.

Two small rings are implemented with plain dictionaries and Python's
arbitrary-precision integers:

* ``IntPoly2`` -- polynomials in Z[X1, X2], the value ring of foam
  evaluations.
* ``LaurentQ`` -- Laurent polynomials in q, used for graded dimensions
  and the Jones polynomial.

Values are immutable after construction and all operations are pure, so
instances may be shared freely.
"""

from __future__ import annotations

from .errors import NonExactDivision


def _clean(terms):
    return {k: c for k, c in terms.items() if c != 0}


class IntPoly2:
    """A polynomial in Z[X1, X2].

    Terms are stored as a map ``(e1, e2) -> coefficient`` with no zero
    coefficients and nonnegative exponents.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        terms = _clean(dict(terms or {}))
        for (e1, e2) in terms:
            if e1 < 0 or e2 < 0:
                raise ValueError("exponents must be nonnegative")
        self._terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x1(cls, power=1):
        return cls({(power, 0): 1})

    @classmethod
    def x2(cls, power=1):
        return cls({(0, power): 1})

    @classmethod
    def x1_plus_x2(cls):
        return cls({(1, 0): 1, (0, 1): 1})

    @classmethod
    def x1_times_x2(cls):
        return cls({(1, 1): 1})

    @classmethod
    def x1_minus_x2(cls):
        return cls({(1, 0): 1, (0, 1): -1})

    # -- ring operations ----------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, IntPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return IntPoly2(out)

    def __sub__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) - c
        return IntPoly2(out)

    def __neg__(self):
        return IntPoly2({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly2({k: c * other for k, c in self._terms.items()})
        out = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + c * d
        return IntPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------

    def swap_variables(self):
        """The polynomial with X1 and X2 exchanged."""
        return IntPoly2({(e2, e1): c for (e1, e2), c in self._terms.items()})

    def is_symmetric(self):
        """True iff swapping X1 <-> X2 fixes the polynomial."""
        return self == self.swap_variables()

    def substitute_equal(self):
        """Collapse X1 = X2 = t; returns a map ``t-exponent -> coefficient``."""
        out = {}
        for (e1, e2), c in self._terms.items():
            k = e1 + e2
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return out

    def divide_by_difference_power(self, k):
        """Exact division by (X1 - X2)**k.

        For negative ``k`` the polynomial is multiplied by
        (X1 - X2)**(-k) instead.  Raises :class:`NonExactDivision` when a
        division step leaves a remainder.
        """
        if k < 0:
            return self * IntPoly2.x1_minus_x2() ** (-k)
        p = self
        for _ in range(k):
            p = p._divide_by_difference_once()
        return p

    def _divide_by_difference_once(self):
        # Long division in X1 over Z[X2]: repeatedly strip the term of
        # highest X1-degree.  What is left at X1-degree 0 is the remainder.
        rem = dict(self._terms)
        quot = {}
        while True:
            pending = [(e1, e2) for (e1, e2) in rem if e1 > 0]
            if not pending:
                break
            e1, e2 = max(pending)
            c = rem.pop((e1, e2))
            qk = (e1 - 1, e2)
            quot[qk] = quot.get(qk, 0) + c
            lk = (e1 - 1, e2 + 1)
            rem[lk] = rem.get(lk, 0) + c
            if rem[lk] == 0:
                del rem[lk]
        if rem:
            raise NonExactDivision(
                "remainder %s after division by (X1 - X2)" % _render_xx(rem)
            )
        return IntPoly2(quot)

    def __str__(self):
        return _render_xx(self._terms)

    def __repr__(self):
        return "IntPoly2(%s)" % self


def poly_arith(a, b, op):
    """Dispatch helper: ``op`` is one of ``add``, ``sub``, ``mul``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % op)


def divide_by_difference_power(p, k):
    return p.divide_by_difference_power(k)


def is_symmetric(p):
    return p.is_symmetric()


def _render_var(name, e):
    if e == 0:
        return ""
    if e == 1:
        return name
    return "%s^%d" % (name, e)


def _render_xx(terms):
    if not terms:
        return "0"
    parts = []
    for (e1, e2) in sorted(terms, reverse=True):
        c = terms[(e1, e2)]
        factors = [f for f in (_render_var("X1", e1), _render_var("X2", e2)) if f]
        body = "*".join(factors)
        parts.append(_signed(c, body, first=not parts))
    return "".join(parts)


def _signed(c, body, first):
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if not body:
        core = str(mag)
    elif mag == 1:
        core = body
    else:
        core = "%d*%s" % (mag, body)
    if first:
        return sign + core
    return " %s %s" % (sign or "+", core)


class LaurentQ:
    """A Laurent polynomial in q with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = _clean(dict(terms or {}))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q(cls, power=1):
        return cls({power: 1})

    @classmethod
    def circle(cls):
        """q + q^-1, the graded dimension of a single circle."""
        return cls({1: 1, -1: 1})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentQ(out)

    def __sub__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) - c
        return LaurentQ(out)

    def __neg__(self):
        return LaurentQ({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentQ({k: c * other for k, c in self._terms.items()})
        out = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                out[a + b] = out.get(a + b, 0) + c * d
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = LaurentQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k):
        """Multiply by q**k (k may be negative)."""
        return LaurentQ({e + k: c for e, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            body = _render_var("q", e) if e >= 0 else "q^%d" % e
            if e == 0:
                body = ""
            parts.append(_signed(c, body, first=not parts))
        return "".join(parts)

    def __repr__(self):
        return "LaurentQ(%s)" % self


def laurent_arith(a, b, op):
    """Dispatch helper: ``op`` is ``add``, ``sub``, ``mul`` or ``pow``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    raise ValueError("unknown op %r" % op)
