"""Command line interface.

One executable, one subcommand per question you can ask a discourse.
Decision commands exit 0 for yes and 1 for no; malformed input or usage
exits 2; a blown size cap exits 3.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .clauses import ClausalTheory, Clause, clausal_theory, clause_sort_key
from .errors import KernelogicError, ParseError, ResourceLimitError, ValidationError
from .graphs import Digraph, theory_to_graph
from .io_text import (
    CLAUSE_SET,
    EDGE_LIST,
    GNF_THEORY,
    parse_clause,
    parse_document,
    sorted_clause_strings,
    to_json,
)
from .kernels import (
    DEFAULT_MAX_ATOMS,
    enumerate_kernels,
    enumerate_semikernels,
    models,
)
from .oracle import (
    RandomGraphSpec,
    brute_kernels,
    brute_models,
    brute_semikernels,
    random_digraph,
    truth_table_models,
)
from .resolution import (
    DEFAULT_MAX_CLAUSES,
    consistent_subtheory,
    entails_para,
    paradoxical_atoms,
    proof_of,
    provable_weakened,
    saturate,
)
from .semantics import classical_entails, entails_semantic, is_relevant, min_clauses

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_FORMAT_KINDS = {"gnf": GNF_THEORY, "edges": EDGE_LIST, "clauses": CLAUSE_SET}


def _read_input(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read(), path


def _load(args) -> tuple[Optional[Digraph], ClausalTheory]:
    text, source = _read_input(args.input)
    kind = _FORMAT_KINDS[args.format] if args.format else None
    doc = parse_document(
        text, source, kind=kind, complete_loose=args.complete_loose
    )
    if doc.kind == GNF_THEORY:
        graph = theory_to_graph(doc.payload)
        return graph, clausal_theory(graph)
    if doc.kind == EDGE_LIST:
        return doc.payload, clausal_theory(doc.payload)
    return None, doc.payload


def _require_graph(graph: Optional[Digraph]) -> Digraph:
    if graph is None:
        raise ValidationError(
            "this command needs a GNF theory or edge-list input, not a bare clause set"
        )
    return graph


def _fmt_set(atoms) -> str:
    return "{" + ",".join(sorted(atoms)) + "}"


def _fmt_partition3(p) -> str:
    return (
        f"true={_fmt_set(p.true_set)} "
        f"false={_fmt_set(p.false_set)} "
        f"paradox={_fmt_set(p.paradox_set)}"
    )


def _emit(args, command: str, result, human_lines) -> None:
    if args.json:
        print(to_json(result, command))
    else:
        for line in human_lines:
            print(line)


def cmd_models(args) -> int:
    graph = _require_graph(_load(args)[0])
    found = brute_models(graph) if args.oracle else models(graph, args.max_atoms)
    _emit(args, "models", found, (_fmt_partition3(p) for p in found))
    return EXIT_YES


def cmd_kernels(args) -> int:
    graph = _require_graph(_load(args)[0])
    found = brute_kernels(graph) if args.oracle else enumerate_kernels(graph, args.max_atoms)
    _emit(args, "kernels", found, (_fmt_set(k) for k in found))
    return EXIT_YES


def cmd_semikernels(args) -> int:
    graph = _require_graph(_load(args)[0])
    found = (
        brute_semikernels(graph)
        if args.oracle
        else enumerate_semikernels(graph, args.max_atoms)
    )
    _emit(args, "semikernels", found, (_fmt_set(s) for s in found))
    return EXIT_YES


def cmd_paradox(args) -> int:
    _, theory = _load(args)
    bad = paradoxical_atoms(saturate(theory, args.max_clauses))
    _emit(args, "paradox", bad, [_fmt_set(bad)])
    return EXIT_YES


def cmd_subdiscourse(args) -> int:
    graph, theory = _load(args)
    report = consistent_subtheory(theory, graph, max_clauses=args.max_clauses)
    lines = [
        f"paradox: {_fmt_set(report.paradox_atoms)}",
        f"healthy: {_fmt_set(report.healthy_atoms)}",
        f"border: {_fmt_set(report.border)}",
        "theory:",
    ]
    lines += [f"  {c}" for c in sorted_clause_strings(report.theory.clauses)]
    _emit(args, "subdiscourse", report, lines)
    return EXIT_YES


def cmd_closure(args) -> int:
    _, theory = _load(args)
    closure = saturate(theory, args.max_clauses)
    _emit(args, "closure", closure, sorted_clause_strings(closure.derived))
    return EXIT_YES


def cmd_prove(args) -> int:
    _, theory = _load(args)
    goal = parse_clause(args.clause)
    closure = saturate(theory, args.max_clauses)
    yes = provable_weakened(theory, goal, args.weakening, closure=closure)
    lines = []
    if yes:
        if goal in closure:
            lines = proof_of(closure, goal).to_text().splitlines()
        else:
            witness = _weakening_witness(closure, goal, args.weakening)
            if witness is None:
                lines = [f"{goal} [weakening: all atoms provably paradoxical]"]
            else:
                lines = proof_of(closure, witness).to_text().splitlines()
                lines.append(f"{goal} [weakening from {witness}]")
    else:
        lines = [f"not provable under weakening mode {args.weakening!r}"]
    _emit(args, "prove", yes, lines)
    return EXIT_YES if yes else EXIT_NO


def _weakening_witness(closure, goal: Clause, mode: str) -> Optional[Clause]:
    from .resolution import _paradox_mask

    bad = _paradox_mask(closure)
    pos, neg = closure.clause_masks(goal)
    candidates = []
    for p, q in closure.iter_masks():
        if p & ~pos or q & ~neg:
            continue
        if mode == "awbw" and not (p or q):
            continue
        if mode == "awbw" and not ((p | q) & ~bad):
            continue
        candidates.append((p, q))
    if not candidates:
        return None
    best = min(
        candidates,
        key=lambda m: clause_sort_key(closure.clause_of(m)),
    )
    return closure.clause_of(best)


def cmd_entails(args) -> int:
    graph, theory = _load(args)
    goal = parse_clause(args.clause)
    if args.semantic:
        verdict = entails_semantic(_require_graph(graph), goal, args.max_atoms)
        lines = [("yes" if verdict.holds else "no") + f" ({verdict.kind})"]
        if verdict.witness is not None:
            lines.append(f"witness: {verdict.witness}")
        if verdict.countermodel is not None:
            lines.append(f"countermodel: {_fmt_partition3(verdict.countermodel)}")
        _emit(args, "entails", verdict, lines)
        return EXIT_YES if verdict.holds else EXIT_NO
    if args.classical:
        yes = classical_entails(theory, goal, args.max_atoms)
    else:
        yes = entails_para(theory, goal, max_clauses=args.max_clauses)
    _emit(args, "entails", yes, ["yes" if yes else "no"])
    return EXIT_YES if yes else EXIT_NO


def cmd_relevant(args) -> int:
    _, theory = _load(args)
    goal = parse_clause(args.clause)
    yes = is_relevant(theory, goal, max_clauses=args.max_clauses)
    _emit(args, "relevant", yes, ["yes" if yes else "no"])
    return EXIT_YES if yes else EXIT_NO


def cmd_min(args) -> int:
    _, theory = _load(args)
    found = min_clauses(theory, max_clauses=args.max_clauses)
    _emit(args, "min", found, sorted_clause_strings(found))
    return EXIT_YES


def cmd_check_random(args) -> int:
    mismatches = []
    rows = []
    for i in range(args.count):
        spec = RandomGraphSpec(n=args.n, edge_prob=args.p, seed=args.seed + i)
        graph = random_digraph(spec)
        kernels_engine = enumerate_kernels(graph, args.max_atoms)
        kernels_oracle = brute_kernels(graph)
        sk_engine = enumerate_semikernels(graph, args.max_atoms)
        sk_oracle = brute_semikernels(graph)
        models_engine = models(graph, args.max_atoms)
        models_oracle = brute_models(graph)
        classical_engine = sorted(tuple(sorted(k)) for k in kernels_engine)
        classical_oracle = sorted(
            tuple(sorted(a for a, v in row.items() if v))
            for row in truth_table_models(clausal_theory(graph))
        )
        bad = []
        if kernels_engine != kernels_oracle:
            bad.append("kernels")
        if sk_engine != sk_oracle:
            bad.append("semikernels")
        if models_engine != models_oracle:
            bad.append("models")
        if classical_engine != classical_oracle:
            bad.append("classical-models")
        status = "ok" if not bad else "MISMATCH " + ",".join(bad)
        rows.append(
            f"seed={spec.seed} n={spec.n} p={spec.edge_prob} "
            f"kernels={len(kernels_engine)} semikernels={len(sk_engine)} "
            f"models={len(models_engine)} {status}"
        )
        if bad:
            mismatches.append({"seed": spec.seed, "mismatched": bad})
    ok = not mismatches
    rows.append(f"{args.count} graphs checked, {len(mismatches)} mismatches")
    result = {"count": args.count, "mismatches": mismatches, "ok": ok}
    _emit(args, "check-random", result, rows)
    return EXIT_YES if ok else EXIT_NO


def _add_common(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument(
            "input",
            nargs="?",
            default="-",
            help="input file (GNF theory, edge list, or clause set); '-' is stdin",
        )
        parser.add_argument(
            "--format",
            choices=sorted(_FORMAT_KINDS),
            help="override input format sniffing",
        )
        parser.add_argument(
            "--complete-loose",
            action="store_true",
            help="close loose atoms with fresh twins instead of rejecting them",
        )
    parser.add_argument("--json", action="store_true", help="emit versioned JSON")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="use the brute-force reference paths where available",
    )
    parser.add_argument(
        "--max-atoms",
        type=int,
        default=DEFAULT_MAX_ATOMS,
        help="cap for enumeration and truth tables",
    )
    parser.add_argument(
        "--max-clauses",
        type=int,
        default=DEFAULT_MAX_CLAUSES,
        help="cap for the resolution closure",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelogic",
        description=(
            "Paradox-tolerant propositional reasoning over digraph discourses: "
            "models, paradoxical atoms, consistent subtheories, and direct "
            "resolution proofs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, clause_arg: bool = False, with_input: bool = True):
        p = sub.add_parser(name, help=help_text)
        if clause_arg:
            p.add_argument("clause", help="clause text, e.g. 'a ~b' or '[]'")
        _add_common(p, with_input=with_input)
        p.set_defaults(func=func)
        return p

    add("models", cmd_models, "all models of the discourse")
    add("kernels", cmd_kernels, "all kernels (classical models)")
    add("semikernels", cmd_semikernels, "all semikernels")
    add("paradox", cmd_paradox, "provably paradoxical atoms")
    add("subdiscourse", cmd_subdiscourse, "maximal consistent subtheory and border")
    add("closure", cmd_closure, "the full resolution closure")
    prove = add("prove", cmd_prove, "derivability, optionally with weakening", clause_arg=True)
    prove.add_argument(
        "--weakening",
        choices=["none", "awbw", "cw"],
        default="none",
        help="weakening discipline (default: none)",
    )
    entails = add("entails", cmd_entails, "entailment decision", clause_arg=True)
    mode = entails.add_mutually_exclusive_group()
    mode.add_argument(
        "--classical", action="store_true", help="two-valued entailment by truth tables"
    )
    mode.add_argument(
        "--semantic",
        action="store_true",
        help="enumerate models; reports a witness or countermodel",
    )
    add("relevant", cmd_relevant, "entailed with no entailed proper part", clause_arg=True)
    add("min", cmd_min, "minimal derivable clauses")
    rand = add(
        "check-random",
        cmd_check_random,
        "differential run of engine versus brute-force oracle",
        with_input=False,
    )
    rand.add_argument("--n", type=int, default=5, help="vertex count")
    rand.add_argument("--p", type=float, default=0.3, help="edge probability")
    rand.add_argument("--seed", type=int, default=1, help="first seed")
    rand.add_argument("--count", type=int, default=20, help="number of graphs")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KernelogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
