"""Command-line front end.

Subcommands:

* ``knotfoam invariants`` -- Jones polynomial, Khovanov homology table,
  Lee rank, s-invariant and slice-genus bound of a diagram given as
  ``--pd "X[...];..."`` or ``--braid "1 1 1" --strands 2``.
* ``knotfoam eval-foam FILE`` -- evaluate a closed foam from JSON.
* ``knotfoam graph-dim FILE`` -- graded dimension of a trivalent graph.
* ``knotfoam verify-relations`` -- run the local-relation harness.

Results on stdout are byte-identical across repeated runs: timing
information goes to stderr, and cached records are replayed verbatim.
Exit codes: 2 for input errors, 3 when the crossing limit is exceeded,
4 when an internal structural invariant fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import errors
from .diagram import braid_to_pd, link_components, parse_pd, compute_signs
from .foam import evaluate_foam, foam_from_json
from .graphs import graded_dimension, graph_evaluation, graph_from_json
from .homology import integral_homology
from .khovanov import KH, build_complex, graded_euler_characteristic
from .lee import build_lee, lee_rank, s_invariant, slice_genus_lower_bound
from .relations import verify_all_relations

TOOL_VERSION = "knotfoam-0.1.0"

_INPUT_ERRORS = (
    errors.ParseError,
    errors.InvalidDiagram,
    errors.InvalidBraid,
    errors.InvalidSite,
    errors.MalformedFoam,
)
_INTERNAL_ERRORS = (
    errors.PropositionViolated,
    errors.RankMismatch,
    errors.NotACycle,
    errors.NotAComplex,
    errors.OddEuler,
    errors.NonExactDivision,
    errors.NonBipartiteBinding,
    errors.ReductionStuck,
)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="knotfoam")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="link invariants from a diagram")
    inv.add_argument("--pd", help="PD code, e.g. 'X[1,3,4,2];X[3,5,6,4];X[5,1,2,6]'")
    inv.add_argument("--braid", help="braid word, e.g. '1 1 1'")
    inv.add_argument("--strands", type=int, help="strand count for --braid")
    inv.add_argument("--format", choices=("table", "json"), default="table")
    inv.add_argument("--threads", type=int, default=1,
                     help="accepted for interface compatibility; results "
                     "are computed deterministically")
    inv.add_argument("--cache", default=None, help="cache directory "
                     "(default: KNOTFOAM_CACHE environment variable)")
    inv.add_argument("--max-crossings", type=int, default=14)
    inv.add_argument("--skip", action="append", default=[],
                     choices=("lee", "s"), help="skip an invariant")

    ef = sub.add_parser("eval-foam", help="evaluate a closed foam JSON file")
    ef.add_argument("path")

    gd = sub.add_parser("graph-dim", help="graded dimension of a graph JSON file")
    gd.add_argument("path")

    vr = sub.add_parser("verify-relations", help="run the local-relation harness")
    vr.add_argument("--max-dots", type=int, default=2)

    args = parser.parse_args(argv)
    try:
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "eval-foam":
            return _cmd_eval_foam(args)
        if args.command == "graph-dim":
            return _cmd_graph_dim(args)
        return _cmd_verify_relations(args)
    except errors.TooLarge as exc:
        print("size limit: %s" % exc, file=sys.stderr)
        return 3
    except _INTERNAL_ERRORS as exc:
        print("internal invariant violated: %s: %s"
              % (type(exc).__name__, exc), file=sys.stderr)
        return 4
    except _INPUT_ERRORS as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2


def _cmd_invariants(args):
    if (args.pd is None) == (args.braid is None):
        print("input error: provide exactly one of --pd / --braid",
              file=sys.stderr)
        return 2
    if args.pd is not None:
        pd = parse_pd(args.pd)
        echo = {"pd": str(pd)}
    else:
        if args.strands is None:
            print("input error: --braid needs --strands", file=sys.stderr)
            return 2
        word = [int(w) for w in args.braid.replace(",", " ").split()]
        pd = braid_to_pd(word, args.strands)
        echo = {"braid": word, "strands": args.strands, "pd": str(pd)}

    skip = set(args.skip)
    cache_dir = args.cache or os.environ.get("KNOTFOAM_CACHE")
    key = None
    if cache_dir:
        payload = "|".join((TOOL_VERSION, str(pd), ",".join(sorted(skip))))
        key = hashlib.sha256(payload.encode()).hexdigest()
        path = os.path.join(cache_dir, key + ".json")
        if os.path.exists(path):
            with open(path) as fh:
                record = json.load(fh)
            _emit(record, args.format)
            print("cache hit: %s" % path, file=sys.stderr)
            return 0

    record, timings = _compute_record(pd, echo, skip, args.max_crossings)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, key + ".json")
        with open(path, "w") as fh:
            json.dump(record, fh, sort_keys=True)
            fh.write("\n")
    _emit(record, args.format)
    for stage, dt in timings.items():
        print("timing %-10s %.3fs" % (stage, dt), file=sys.stderr)
    return 0


def _compute_record(pd, echo, skip, max_crossings):
    timings = {}
    t0 = time.perf_counter()
    n_plus, n_minus, _ = compute_signs(pd)
    components = link_components(pd)
    cx = build_complex(pd, KH, max_crossings=max_crossings)
    jones = graded_euler_characteristic(cx)
    table = integral_homology(cx)
    if table.graded_euler() != jones:
        raise errors.PropositionViolated(
            "homology table disagrees with the graded Euler characteristic"
        )
    timings["khovanov"] = time.perf_counter() - t0

    record = {
        "input": echo,
        "n_plus": n_plus,
        "n_minus": n_minus,
        "components": components,
        "jones": str(jones),
        "khovanov": [
            {"i": i, "q": q, "betti": b, "torsion": t}
            for i, q, b, t in table.rows()
        ],
        "lee_rank": None,
        "s": None,
        "slice_genus_lower_bound": None,
        "tool_version": TOOL_VERSION,
    }

    if "lee" not in skip:
        t0 = time.perf_counter()
        fc = build_lee(pd, max_crossings=max_crossings)
        record["lee_rank"] = lee_rank(fc, components)
        timings["lee"] = time.perf_counter() - t0
        if "s" not in skip and components == 1:
            t0 = time.perf_counter()
            s, detail = s_invariant(pd, max_crossings=max_crossings)
            record["s"] = s
            record["s_min"] = detail["s_min"]
            record["s_max"] = detail["s_max"]
            record["slice_genus_lower_bound"] = slice_genus_lower_bound(s)
            timings["s"] = time.perf_counter() - t0
    return record, timings


def _emit(record, fmt):
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
        return
    echo = record["input"]
    print("input: %s" % json.dumps(echo, sort_keys=True))
    print("crossings: %d positive, %d negative   components: %d"
          % (record["n_plus"], record["n_minus"], record["components"]))
    print("jones: %s" % record["jones"])
    print("khovanov homology:")
    print("  %4s %4s %6s  %s" % ("i", "q", "betti", "torsion"))
    for row in record["khovanov"]:
        torsion = ",".join("Z/%d" % t for t in row["torsion"]) or "-"
        print("  %4d %4d %6d  %s" % (row["i"], row["q"], row["betti"], torsion))
    if record["lee_rank"] is not None:
        print("lee rank: %d" % record["lee_rank"])
    if record["s"] is not None:
        print("s-invariant: %d   (s_min=%d, s_max=%d)   slice genus >= %d"
              % (record["s"], record["s_min"], record["s_max"],
                 record["slice_genus_lower_bound"]))


def _cmd_eval_foam(args):
    with open(args.path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            print("input error: %s" % exc, file=sys.stderr)
            return 2
    foam = foam_from_json(data)
    value = evaluate_foam(foam)
    print(value)
    print("symmetric: %s" % ("true" if value.is_symmetric() else "false"))
    return 0


def _cmd_graph_dim(args):
    with open(args.path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            print("input error: %s" % exc, file=sys.stderr)
            return 2
    g = graph_from_json(data)
    dim = graded_dimension(g)
    print(dim)
    agrees = dim == graph_evaluation(g)
    print("matches circle count: %s" % ("true" if agrees else "false"))
    return 0


def _cmd_verify_relations(args):
    results = verify_all_relations(max_dots=args.max_dots)
    failed = 0
    for name, ok, witness in results:
        print("%-30s %s" % (name, "pass" if ok else "FAIL"))
        if not ok:
            failed += 1
            print("  witness dots=%s" % (witness["dots"],))
            print("  lhs = %s" % witness["lhs"])
            print("  rhs = %s" % witness["rhs"])
    print("%d/%d relations hold" % (len(results) - failed, len(results)))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
