"""Command-line front end.

JSON goes to stdout (or --out); a one-line human summary goes to stderr.
Exit codes: 0 success (and "free" for verify), 1 witness found (verify),
2 usage error, 3 budget exceeded, 4 internal limit (dimension/enumeration cap).
All counts in JSON are decimal strings; densities are exact num/den pairs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from ._kernels import backend_name
from ._version import __version__
from .bounds import bound_sandwich_report, eval_bound
from .constructions import KINDS, ConstructionSpec
from .core import StarVector, load_subgraph, save_subgraph
from .counting import CycleWitness, ZTable, count_report, z_kl
from .errors import (
    BudgetExceeded,
    CubeError,
    DimensionTooLarge,
    EnumerationTooLarge,
)
from .patterns import CYCLE, EDGE, SUBCUBE, parse_pattern
from .search import exact_extremal
from .verification import FreenessVerdict, has_k_partite_representation, is_c2k_free, is_qk_free
from .zwords import count_z_words, iter_z_words, z_ll_via_words

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_LIMIT = 4

ZCACHE_ENV = "CUBETURAN_ZCACHE"


def _ztable(args) -> ZTable:
    return ZTable(args.z_cache) if args.z_cache else ZTable()


def _witness_json(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, StarVector):
        return {"type": "subcube", "cells": witness.cells}
    return {"type": "cycle", **witness.to_json_dict()}


def _witness_text(witness) -> str:
    if isinstance(witness, StarVector):
        return witness.cells
    return " ".join(str(v) for v in witness.vertices)


# ---------------------------------------------------------------------------
# verb handlers: each returns (exit_code, payload, summary)

def _cmd_count(args):
    pattern = parse_pattern(args.pattern)
    g = load_subgraph(args.input) if args.input else None
    rep = count_report(args.n, pattern, g=g, z=_ztable(args), threads=args.threads)
    return EXIT_OK, rep.to_json_dict(), f"{rep.count} {rep.pattern} in " + (
        f"{args.input}" if args.input else f"Q_{rep.n}") + f" ({rep.method})"


def _cmd_zl(args):
    ell = args.l
    k = args.k if args.k is not None else ell
    if args.method == "words":
        if k != ell:
            raise CubeError("--method words applies to the diagonal k = l only")
        value = z_ll_via_words(ell, allow_small=args.allow_small)
        method = "words"
    else:
        table = _ztable(args)
        value = table.get(k, ell)
        method = "enumeration"
    payload = {"k": k, "l": ell, "value": str(value), "method": method}
    return EXIT_OK, payload, f"z({k},{ell}) = {value} [{method}]"


def _cmd_zwords(args):
    ell = args.l
    count = count_z_words(ell)
    payload = {"l": ell, "count": str(count)}
    if not args.count_only:
        payload["words"] = [list(w) for w in iter_z_words(ell)]
    return EXIT_OK, payload, f"|Z({ell})| = {count}"


def _cmd_construct(args):
    params = {}
    for name in ("n", "k", "l", "m", "i", "j"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.with_cycles:
        params["with_cycles"] = True
    if args.complement:
        params["complement"] = True
    spec = ConstructionSpec(args.kind, params)
    g = spec.build()
    save_subgraph(g, args.out)
    sidecar = {
        "construction": spec.kind,
        "params": params,
        "edge_count": g.edge_count,
        "claimed_free_of": spec.claimed_free_of(),
    }
    with open(args.out + ".json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK, sidecar, f"{spec.kind}: {g.edge_count} edges -> {args.out}"


def _cmd_verify(args):
    pattern = parse_pattern(args.forbid)
    g = load_subgraph(args.path)
    if pattern.kind == SUBCUBE:
        verdict = is_qk_free(g, pattern.order)
    elif pattern.kind == CYCLE:
        verdict = is_c2k_free(g, pattern.order // 2)
    else:
        edges = g.sorted_edges()
        verdict = FreenessVerdict(not edges, StarVector(g.n, edges[0]) if edges else None, g.edge_count)
    payload = {
        "forbid": str(pattern),
        "free": verdict.free,
        "witness": _witness_json(verdict.witness),
        "checked_count": verdict.checked_count,
    }
    if verdict.free:
        return EXIT_OK, payload, f"{args.path} is {pattern}-free"
    return EXIT_WITNESS, payload, f"{pattern} found: {_witness_text(verdict.witness)}"


def _cmd_search(args):
    target = parse_pattern(args.target)
    forbid = parse_pattern(args.forbid)
    result = exact_extremal(args.n, target, forbid,
                            budget_nodes=args.budget_nodes,
                            budget_seconds=args.budget_seconds,
                            method=args.method)
    if args.witness_out:
        save_subgraph(result.witness, args.witness_out)
    payload = {"n": args.n, "target": str(target), "forbid": str(forbid)}
    payload.update(result.to_json_dict())
    return EXIT_OK, payload, (
        f"ex(Q_{args.n}, {target}, {forbid}) = {result.value} "
        f"({result.nodes_explored} nodes)")


def _cmd_density(args):
    target = parse_pattern(args.target)
    forbid = parse_pattern(args.forbid)
    result = exact_extremal(args.n, target, forbid,
                            budget_nodes=args.budget_nodes,
                            budget_seconds=args.budget_seconds)
    d = result.density
    payload = {
        "n": args.n, "target": str(target), "forbid": str(forbid),
        "value": str(result.value), "ambient_total": str(result.ambient_total),
        "density": {"num": str(d.numerator), "den": str(d.denominator)},
    }
    return EXIT_OK, payload, f"d(Q_{args.n}, {target}, {forbid}) = {d}"


def _parse_exact(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(text)


def _cmd_bounds(args):
    params = {name: getattr(args, name) for name in ("n", "k", "l")
              if getattr(args, name) is not None}
    z = _ztable(args)
    if args.exact is not None:
        payload = bound_sandwich_report(args.theorem, params, z=z,
                                        exact=_parse_exact(args.exact))
        return EXIT_OK, payload, f"{args.theorem.upper()} sandwich report"
    sides = ("lower", "upper") if args.side == "both" else (args.side,)
    values = [eval_bound(args.theorem, side, params, z=z) for side in sides]
    payload = values[0].to_json_dict() if len(values) == 1 else {
        "theorem": args.theorem.upper(),
        "bounds": [v.to_json_dict() for v in values],
    }
    return EXIT_OK, payload, f"{args.theorem.upper()} evaluated"


def _cmd_kpartite(args):
    g = load_subgraph(args.path)
    edges = [StarVector(g.n, key) for key in g.sorted_edges()]
    rep = has_k_partite_representation(edges, args.k)
    payload = {
        "k": args.k,
        "ell": g.n,
        "exists": rep is not None,
        "sigma": None if rep is None else list(rep.sigma),
    }
    note = "exists" if rep else "does not exist"
    return EXIT_OK, payload, f"{args.k}-partite representation {note}"


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeturan",
        description="Exact subcube/cycle counting, constructions, freeness "
                    "certification, small-n extremal search and bound evaluation "
                    "for subgraphs of the hypercube.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (kernel: {backend_name()})")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--threads", type=int,
                       default=max(1, os.cpu_count() or 1),
                       help="worker threads (results are thread-count independent)")
        p.add_argument("--z-cache", default=os.environ.get(ZCACHE_ENV),
                       help=f"z-table cache file (default ${ZCACHE_ENV})")

    p = sub.add_parser("count", help="count a pattern in Q_n or in a subgraph file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True, help="e, q<k> or c<m>")
    p.add_argument("--input", help="subgraph file; omit to count in Q_n itself")
    common(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("zl", help="z_{k,l}: cycles in Q_k using all k positions")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=("enum", "words"), default="enum")
    p.add_argument("--allow-small", action="store_true",
                   help="evaluate the word formula below l=4")
    common(p)
    p.set_defaults(handler=_cmd_zl)

    p = sub.add_parser("zwords", help="the word set Z(l) and its cardinality")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    common(p)
    p.set_defaults(handler=_cmd_zwords)

    p = sub.add_parser("construct", help="emit a known construction as a subgraph file")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--with-cycles", action="store_true")
    p.add_argument("--complement", action="store_true")
    p.add_argument("--out", required=True, help="subgraph file to write")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--threads", type=int, default=max(1, os.cpu_count() or 1))
    p.add_argument("--z-cache", default=os.environ.get(ZCACHE_ENV))
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="exhaustively check a subgraph file for a forbidden pattern")
    p.add_argument("--forbid", required=True, help="q<k> or c<m>")
    p.add_argument("path")
    common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("search", help="exact optimum of the constrained pattern count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--method", choices=("auto", "exhaustive"), default="auto")
    p.add_argument("--witness-out", help="write the extremal subgraph here")
    common(p)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("density", help="exact extremal density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--forbid", required=True)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    common(p)
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("bounds", help="evaluate a catalog bound (T1..T7, A6, A7)")
    p.add_argument("--theorem", required=True)
    p.add_argument("--side", choices=("lower", "upper", "both"), default="both")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--exact", help="measured density NUM/DEN for a sandwich report")
    common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("kpartite", help="search for a k-partite representation of an edge set")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("path")
    common(p)
    p.set_defaults(handler=_cmd_kpartite)

    return parser


def _flatten(prefix: str, value, rows: list) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
    elif isinstance(value, (list, tuple)):
        rows.append((prefix, ";".join(json.dumps(v) if isinstance(v, (dict, list)) else str(v)
                                      for v in value)))
    else:
        rows.append((prefix, "" if value is None else str(value)))


def _render(payload: dict, fmt: str) -> str:
    if fmt == "csv":
        rows: list = []
        _flatten("", payload, rows)
        return "\n".join(f"{k},{v}" for k, v in rows) + "\n"
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit_error(exc: Exception) -> None:
    blob = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, BudgetExceeded):
        blob["lower"] = str(exc.lower)
        blob["upper"] = str(exc.upper)
        blob["nodes_explored"] = exc.nodes_explored
    print(json.dumps(blob, indent=2, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, summary = args.handler(args)
    except BudgetExceeded as exc:
        _emit_error(exc)
        return EXIT_BUDGET
    except (DimensionTooLarge, EnumerationTooLarge) as exc:
        _emit_error(exc)
        return EXIT_LIMIT
    except CubeError as exc:
        _emit_error(exc)
        return EXIT_USAGE
    except OSError as exc:
        _emit_error(exc)
        return EXIT_USAGE
    text = _render(payload, getattr(args, "format", "json"))
    out_path = getattr(args, "out", None)
    if args.verb == "construct":
        out_path = None  # --out is the subgraph file; the report goes to stdout
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
