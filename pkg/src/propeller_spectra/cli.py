"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
ceiling refusal.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import sys
from typing import Any, Callable

from . import formulas
from .charpoly import MatrixKind, charpoly
from .config import ResourceCeilingError
from .degseq import candidate_degree_sequences, solver_tables
from .graph import (
    Graph,
    GraphError,
    PropellerParams,
    line_graph,
    make_complete,
    make_cycle,
    make_infinity,
    make_path,
    make_propeller,
    make_smith,
    make_star,
    propellers_of_order,
    spanning_tree_count,
    structure_summary,
    subdivision,
)
from .io import dumps, from_graph6, graph_from_json, graph_to_json, to_graph6
from .poly import eval_at
from .verifier import ds_verify, mate_search, propeller_pairwise_distinct, smith_census, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CEILING = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


_FAMILIES: dict[str, Callable[[str], Graph]] = {
    "path": lambda s: make_path(*_ints(s, 1)),
    "cycle": lambda s: make_cycle(*_ints(s, 1)),
    "star": lambda s: make_star(*_ints(s, 1)),
    "complete": lambda s: make_complete(*_ints(s, 1)),
    "infinity": lambda s: make_infinity(*_ints(s, 2)),
    "propeller": lambda s: make_propeller(tuple(_ints(s, 3))),
    "smith": lambda s: make_smith(s),
}


def _graph_from_args(args) -> Graph:
    given = [x for x in ("graph6", "edges", "propeller", "family") if getattr(args, x, None)]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --propeller, --family")
    if args.graph6:
        g = from_graph6(args.graph6)
    elif args.edges:
        g = graph_from_json(args.edges)
    elif args.propeller:
        g = make_propeller(tuple(_ints(args.propeller, 3)))
    else:
        name, _, params = args.family.partition(":")
        if name not in _FAMILIES:
            raise UsageError(f"unknown family {name!r}; choose from {', '.join(_FAMILIES)}")
        g = _FAMILIES[name](params)
    if getattr(args, "line", False):
        g = line_graph(g)
    if getattr(args, "subdivide", False):
        g = subdivision(g)
    return g


def _graph_payload(g: Graph) -> dict[str, Any]:
    return {"graph6": to_graph6(g), **graph_to_json(g)}


# ---------------------------------------------------------------------------
# Subcommands return (payload, rows, ok)


def cmd_gen(args):
    g = _graph_from_args(args)
    return _graph_payload(g), [{"graph6": to_graph6(g), "n": g.n, "m": g.m}], True


def cmd_charpoly(args):
    g = _graph_from_args(args)
    p = charpoly(g, args.kind)
    payload = {"kind": args.kind, "n": g.n, "coefficients": p.to_json(), "text": str(p)}
    rows = [{"power": i, "coefficient": c} for i, c in enumerate(p.to_json())]
    return payload, rows, True


def cmd_invariants(args):
    g = _graph_from_args(args)
    s = structure_summary(g)
    payload = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "structure": s.to_dict(),
        "spanning_trees": str(spanning_tree_count(g)),
        "spectral": {k.value: summarize(g, k).to_dict() for k in MatrixKind},
    }
    rows = [{"key": k, "value": v} for k, v in s.to_dict().items()]
    return payload, rows, True


def _identity_reports(args) -> list[formulas.IdentityReport | dict]:
    suite = args.suite
    out: list[Any] = []
    params = [
        (p, q, k)
        for p in range(3, args.pmax + 1)
        for q in range(3, p + 1)
        for k in range(1, args.kmax + 1)
    ]
    if suite in ("fL", "all"):
        out += [formulas.verify_fL_identity(*t) for t in params]
    if suite in ("fA", "all"):
        out += [formulas.verify_fA_identity(*t) for t in params]
    if suite in ("path", "all"):
        for n in range(0, args.nmax + 1):
            out += formulas.path_closed_form_reports(n)
    if suite in ("eval", "all"):
        for p, q, k in params:
            g = make_propeller((p, q, k))
            out.append(
                {
                    "identity": "L_at_4",
                    "params": {"p": p, "q": q, "k": k},
                    "equal": eval_at(charpoly(g, "L"), 4) == formulas.propeller_l_at4(p, q, k),
                }
            )
            out.append(
                {
                    "identity": "A_at_2",
                    "params": {"p": p, "q": q, "k": k},
                    "equal": eval_at(charpoly(g, "A"), 2) == formulas.propeller_a_at2(p, q, k),
                }
            )
    return out


def cmd_identities(args):
    reports = [r if isinstance(r, dict) else r.to_dict() for r in _identity_reports(args)]
    ok = all(r["equal"] for r in reports)
    rows = [
        {"identity": r["identity"], "params": json.dumps(r["params"]), "equal": r["equal"]}
        for r in reports
    ]
    return {"suite": args.suite, "all_equal": ok, "reports": reports}, rows, ok


def cmd_degseq(args):
    cands = sorted(candidate_degree_sequences(args.n, args.kind), reverse=True)
    payload: dict[str, Any] = {
        "n": args.n,
        "kind": args.kind,
        "candidates": [list(d) for d in cands],
        "formatted": [d.format() for d in cands],
    }
    rows = [{"degree_sequence": d.format()} for d in cands]
    if args.tables:
        payload["tables"] = [
            {
                "a": r.a,
                "t1": r.t1,
                "tn": r.tn,
                "feasible": r.feasible,
                "middle": [c.middle_format(args.n) for c in r.solutions],
                "degree_sequences": [c.degree_sequence.format() for c in r.solutions],
            }
            for r in solver_tables(args.n, args.kind)
        ]
        rows = [
            {"a": t["a"], "t1": t["t1"], "tn": t["tn"], "middle": " ".join(t["middle"]) or "Infeasible"}
            for t in payload["tables"]
        ]
    return payload, rows, True


def cmd_mates(args):
    g = _graph_from_args(args)
    mates = mate_search(g, args.kind, jobs=args.jobs)
    payload = {"graph6": to_graph6(g), "kind": args.kind, "mates": [to_graph6(h) for h in mates]}
    return payload, [{"mate": to_graph6(h)} for h in mates], True


def cmd_ds_verify(args):
    report = ds_verify(PropellerParams(args.p, args.q, args.k), args.kind, jobs=args.jobs)
    payload = report.to_dict()
    rows = [{"params": str(report.params), "kind": args.kind, "verdict": report.verdict}]
    return payload, rows, not report.mates


def cmd_smith_census(args):
    graphs = smith_census(args.nmax)
    payload = {"n_max": args.nmax, "count": len(graphs), "graphs": [_graph_payload(g) for g in graphs]}
    return payload, [{"graph6": to_graph6(g), "n": g.n, "m": g.m} for g in graphs], True


def cmd_pairwise_distinct(args):
    orders = [args.n] if args.n else list(range(6, args.nmax + 1))
    results = []
    for n in orders:
        results.append(
            {
                "n": n,
                "kind": args.kind,
                "propellers": len(propellers_of_order(n)),
                "distinct": propeller_pairwise_distinct(n, args.kind),
            }
        )
    ok = all(r["distinct"] for r in results)
    return {"results": results, "all_distinct": ok}, results, ok


# ---------------------------------------------------------------------------


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--edges", help='JSON object {"n": N, "edges": [[u, v], ...]}')
    p.add_argument("--propeller", metavar="P,Q,K", help="propeller graph shorthand")
    p.add_argument(
        "--family",
        metavar="NAME:PARAMS",
        help="family shorthand: path:N, cycle:N, star:N, complete:N, infinity:P,Q, "
        "propeller:P,Q,K, smith:W2|S1|C5",
    )
    p.add_argument("--line", action="store_true", help="take the line graph")
    p.add_argument("--subdivide", action="store_true", help="take the subdivision graph")


def _add_kind(p, default="L") -> None:
    p.add_argument("--kind", choices=["A", "L", "Q"], default=default, type=str.upper)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="propeller-spectra",
        description="Exact spectral verification tools for propeller graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="build a graph and print it")
    _add_graph_input(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial")
    _add_graph_input(p)
    _add_kind(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("invariants", parents=[common], help="structural and spectral invariants")
    _add_graph_input(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("identities", parents=[common], help="run a closed-form identity suite")
    p.add_argument("--suite", choices=["fL", "fA", "path", "eval", "all"], default="all")
    p.add_argument("--pmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=12, help="largest n for the path suite")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("degseq", parents=[common], help="candidate degree sequences of a mate")
    p.add_argument("--n", type=int, required=True)
    _add_kind(p)
    p.add_argument("--tables", action="store_true", help="include the per-case solution tables")
    p.set_defaults(func=cmd_degseq)

    p = sub.add_parser("mates", parents=[common], help="exhaustive cospectral-mate search")
    _add_graph_input(p)
    _add_kind(p)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_mates)

    p = sub.add_parser("ds-verify", parents=[common], help="DS verification report for a propeller")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=["L", "Q"], default="L", type=str.upper)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_ds_verify)

    p = sub.add_parser("smith-census", parents=[common], help="connected graphs with lambda_1 = 2")
    p.add_argument("--nmax", type=int, default=9)
    p.set_defaults(func=cmd_smith_census)

    p = sub.add_parser(
        "pairwise-distinct", parents=[common], help="propellers of one order have distinct spectra"
    )
    p.add_argument("--n", type=int)
    p.add_argument("--nmax", type=int, default=14)
    _add_kind(p)
    p.set_defaults(func=cmd_pairwise_distinct)
    return parser


def _render(fmt: str, payload: dict[str, Any], rows: list[dict[str, Any]]) -> str:
    if fmt == "json":
        return dumps(payload)
    if fmt == "csv":
        buf = _io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(" ".join(f"{k}={v}" for k, v in row.items()) for row in rows)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        payload, rows, ok = args.func(args)
    except ResourceCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_render(args.format, payload, rows))
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())
