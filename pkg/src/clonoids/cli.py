"""Command-line front end.

Exit codes are part of the contract so shell pipelines can branch on
mathematical verdicts: 0 ok/true, 1 false, 2 usage or parse error,
3 indeterminate, 4 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bf, clones, engine, families, hypergraphs, verify
from .bf import DomainError, ParseError
from .clones import INF, BudgetError
from .engine import FunctionSet

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3
EXIT_BUDGET = 4


def load_function_set(path: str, arity_cap: int) -> FunctionSet:
    """One truth-table literal per line; '#' starts a comment."""
    fns = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                fns.append(bf.parse(line, arity_cap))
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}", exc.position) from None
    return FunctionSet.from_functions(fns)


def _emit_set(fset: FunctionSet, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"exact": fset.provenance == engine.EXACT,
                          "functions": fset.literals()}, indent=2))
    else:
        for lit in fset.literals():
            print(lit)
        if fset.provenance != engine.EXACT:
            print("# left closure approximate: a subset of the true closure",
                  file=sys.stderr)


def _parse_rank(text: str):
    if text in ("inf", "infinity", "oo"):
        return INF
    try:
        k = int(text)
    except ValueError:
        raise DomainError(f"rank must be 2, 3, ... or 'inf', got {text!r}") from None
    return k


def _cmd_classify(args) -> int:
    f = bf.parse(args.function, args.arity_cap)
    record = clones.classify(f)
    if args.json:
        print(json.dumps({"function": bf.to_literal(f), **record}, indent=2))
    else:
        print(f"function       {bf.to_literal(f)}")
        for key in ("preserves_zero", "preserves_one", "monotone",
                    "self_dual", "affine"):
            print(f"{key:15s}{'yes' if record[key] else 'no'}")
        for fam in ("one_separating", "zero_separating"):
            flags = record[fam]
            print(f"{fam:15s}" + " ".join(
                f"rank {k}: {'yes' if v else 'no'}" for k, v in flags.items()))
        print(f"minimal clone  {record['minimal_clone']}")
    return EXIT_OK


def _cmd_list_clones(args) -> int:
    rows = []
    for c in clones.list_clones():
        gens = " ".join(c.generators) if c.generators else "-"
        rows.append((c.id, c.display, c.dual_id,
                     "generators" if c.generator_exact else "predicate", gens))
    if args.json:
        print(json.dumps([{"id": r[0], "display": r[1], "dual": r[2],
                           "membership": r[3], "generators": r[4]}
                          for r in rows], indent=2))
        return EXIT_OK
    print(f"{'id':10s} {'display':10s} {'dual':10s} {'membership':12s} generators")
    for r in rows:
        print(f"{r[0]:10s} {r[1]:10s} {r[2]:10s} {r[3]:12s} {r[4]}")
    return EXIT_OK


def _require_clone(name: str) -> str:
    if name not in clones.REGISTRY:
        raise DomainError(
            f"unknown clone {name!r}; run 'clonoids list-clones' for the table")
    return name


def _cmd_generate(args) -> int:
    gens = load_function_set(args.generators, args.arity_cap)
    req = engine.GenerationRequest(gens, _require_clone(args.src),
                                   _require_clone(args.tgt), args.output_arity,
                                   args.budget)
    result = engine.generate_clonoid(req)
    _emit_set(result, args.json)
    return EXIT_OK


def _cmd_member(args) -> int:
    f = bf.parse(args.function, args.arity_cap)
    gens = load_function_set(args.generators, args.arity_cap)
    verdict = engine.is_clonoid_member(f, gens, _require_clone(args.src),
                                       _require_clone(args.tgt), args.budget)
    if args.json:
        print(json.dumps({"function": bf.to_literal(f),
                          "verdict": {True: "true", False: "false",
                                      None: "indeterminate"}[verdict]}))
    else:
        print({True: "true", False: "false", None: "indeterminate"}[verdict])
    if verdict is True:
        return EXIT_OK
    if verdict is False:
        return EXIT_FALSE
    return EXIT_INDETERMINATE


def _cmd_family(args) -> int:
    kind = {"f": "pippengerF", "q": "pippengerQ"}[args.kind]
    fn = families.FamilySpec(kind, args.index).build(args.arity_cap)
    print(bf.to_literal(fn))
    return EXIT_OK


def _cmd_theta(args) -> int:
    kind = {"f": "pippengerF", "q": "pippengerQ"}[args.kind]
    fn = families.build_theta(kind, args.index, args.arity_cap)
    print(bf.to_literal(fn))
    return EXIT_OK


def _cmd_hypergraph(args) -> int:
    f = bf.parse(args.fn, args.arity_cap)
    h = hypergraphs.disjointness_hypergraph(f, _parse_rank(args.rank))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(hypergraphs.to_dot(h))
    if args.json:
        print(json.dumps({
            "vertices": ["".join(str(b) for b in t.bits)
                         for t in h.vertex_tuples()],
            "edges": [sorted(e) for e in h.edges]}, indent=2))
    else:
        print(f"vertices: {len(h.vertices)}  edges: {len(h.edges)}")
        for t in h.vertex_tuples():
            print("  v", "".join(str(b) for b in t.bits))
        for e in h.edges:
            print("  e", sorted(e))
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = verify.SuiteConfig(arity_cap=args.arity_cap, budget=args.budget,
                                seed=args.seed)
    ids = None if args.all or not args.checks else args.checks
    for cid in ids or ():
        if cid not in verify.CHECKS:
            raise DomainError(
                f"unknown check {cid!r}; known: {', '.join(verify.CHECK_IDS)}")
    report = verify.run_all(config, ids)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for c in report.checks:
            elapsed = c.statistics.get("elapsed_s", 0)
            print(f"{c.check_id:24s} {c.status:16s} {elapsed:8.2f}s")
            if c.counterexample:
                print(f"    counterexample: {dict(c.counterexample)}")
        print("result:", "ok" if report.ok else "FAIL")
    return EXIT_OK if report.ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clonoids",
        description="Clones and clonoid generation for Boolean functions "
                    "at bounded arity.")
    parser.add_argument("--arity-cap", type=int, default=bf.DEFAULT_ARITY_CAP)
    parser.add_argument("--budget", type=int, default=engine.DEFAULT_BUDGET)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="invariant vector and minimal clone")
    p.add_argument("function", help="truth-table literal, e.g. 2:0110")
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("list-clones", help="the clone registry")
    p.set_defaults(run=_cmd_list_clones)

    p = sub.add_parser("generate",
                       help="output-arity part of the generated class")
    p.add_argument("generators", help="file of truth-table literals")
    p.add_argument("--src", required=True, help="source clone id")
    p.add_argument("--tgt", required=True, help="target clone id")
    p.add_argument("-m", "--output-arity", type=int, required=True)
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("member", help="membership in the generated class")
    p.add_argument("function")
    p.add_argument("--gens", dest="generators", required=True)
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.set_defaults(run=_cmd_member)

    p = sub.add_parser("family", help="print a family member")
    p.add_argument("kind", choices=("f", "q"))
    p.add_argument("index", type=int)
    p.set_defaults(run=_cmd_family)

    p = sub.add_parser("theta", help="two-indices-up conjunction construction")
    p.add_argument("kind", choices=("f", "q"))
    p.add_argument("index", type=int)
    p.set_defaults(run=_cmd_theta)

    p = sub.add_parser("hypergraph", help="disjointness hypergraph")
    p.add_argument("--fn", required=True, help="truth-table literal")
    p.add_argument("--rank", default="2", help="2, 3, ... or inf")
    p.add_argument("--dot", help="write DOT to this path")
    p.set_defaults(run=_cmd_hypergraph)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("checks", nargs="*", help="check ids (default: all)")
    p.add_argument("--all", action="store_true")
    p.set_defaults(run=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.run(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        cost = f" (estimated cost {exc.estimated_cost})" if exc.estimated_cost else ""
        print(f"budget: {exc}{cost}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
