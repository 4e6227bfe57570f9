"""Named local-relation fixtures for the closure harness.

Each fixture lives in ``fixtures/<name>.json`` and encodes one identity
between linear combinations of open foams.  The files document the
facet and binding tables; this module only loads them.

Fixture JSON schema::

    {
      "name": str,
      "description": str,
      "lhs": [{"coeff": [[e1, e2, c], ...], "foam": <foam JSON>}, ...],
      "rhs": [...]
    }

Coefficients are lists of (X1-exponent, X2-exponent, integer) monomials,
and foams use the same JSON shape accepted by ``knotfoam eval-foam``.
"""

from __future__ import annotations

import json
from importlib import resources

from .foam import FoamCombination, foam_from_json, verify_local_relation
from .polyring import IntPoly2

FIXTURE_NAMES = (
    "sphere-blue",
    "sphere-blue-dot",
    "sphere-red",
    "bubble-blue",
    "bubble-blue-reversed",
    "bubble-red",
    "bubble-red-dot",
    "bubble-red-dot-reversed",
    "bigon",
    "blue-neck-cutting",
    "red-neck-cutting",
    "migration",
    "blue-dot-reduction",
    "red-dot-reduction",
    "red-square-reduction",
    "tube-blue-blue",
    "tube-red-blue",
    "tube-red-blue-reversed",
    "tube-membrane-cylinder",
    "band-cut",
    "band-cut-reversed",
    "strand-through-tube",
    "strand-through-tube-reversed",
    "two-strands-through-tube",
)


def _coeff_from_json(data):
    return IntPoly2({(e1, e2): c for e1, e2, c in data})


def _combination_from_json(terms, name):
    return FoamCombination(
        tuple((_coeff_from_json(t["coeff"]), foam_from_json(t["foam"])) for t in terms),
        name=name,
    )


def load_fixture(name):
    """Load one fixture; returns (name, description, lhs, rhs)."""
    path = resources.files("knotfoam") / "fixtures" / (name + ".json")
    data = json.loads(path.read_text())
    lhs = _combination_from_json(data["lhs"], name + ":lhs")
    rhs = _combination_from_json(data["rhs"], name + ":rhs")
    return data["name"], data.get("description", ""), lhs, rhs


def relation_fixtures():
    """All checked-in relation fixtures, in a fixed order."""
    return [load_fixture(name) for name in FIXTURE_NAMES]


def verify_all_relations(max_dots=2):
    """Run the closure harness over every fixture.

    Returns a list of (name, ok, witness) triples.
    """
    out = []
    for name, _description, lhs, rhs in relation_fixtures():
        ok, witness = verify_local_relation(lhs, rhs, max_dots=max_dots)
        out.append((name, ok, witness))
    return out
