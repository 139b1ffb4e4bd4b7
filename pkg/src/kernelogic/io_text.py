"""Text formats: GNF theories, edge lists, clause sets, and JSON output.

Grammar summary. A GNF theory is one formula per line, ``x : y1 y2``,
meaning ``x`` holds exactly when every ``yi`` fails; ``x :`` defines a
sink. An edge list is ``a -> b`` per line plus ``vertex x`` for
isolated vertices. A clause set is one clause per line: whitespace
separated literals with ``~`` marking negation, and ``[]`` on its own
line for the empty clause. ``#`` starts a comment everywhere. Parsing
and serialization round-trip for all three kinds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .clauses import ClausalTheory, Clause, Literal, clause_sort_key
from .errors import ParseError
from .graphs import Digraph, GnfTheory, complete_loose_atoms, is_valid_atom
from .kernels import Partition2, Partition3
from .resolution import Closure, Proof, SubdiscourseReport
from .semantics import EntailmentVerdict

SCHEMA_VERSION = 1

GNF_THEORY = "gnf-theory"
EDGE_LIST = "edge-list"
CLAUSE_SET = "clause-set"


@dataclass(frozen=True)
class InputDocument:
    """A parsed input file: what kind it was and the value it denotes."""

    kind: str
    payload: Union[GnfTheory, Digraph, ClausalTheory]
    source: str


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def _column(line: str, token: str) -> int:
    pos = line.find(token)
    return pos + 1 if pos >= 0 else len(line) + 1


def _check_atom_token(token: str, lineno: int, line: str) -> str:
    if not is_valid_atom(token):
        raise ParseError(f"invalid atom {token!r}", lineno, _column(line, token))
    return token


def parse_theory(text: str, *, complete_loose: bool = False) -> GnfTheory:
    """Parse a GNF theory, rejecting duplicate definitions and loose atoms.

    With ``complete_loose`` every loose atom is closed off with a fresh
    twin instead of being rejected.
    """
    table: dict[str, list[str]] = {}
    for lineno, line in _content_lines(text):
        if ":" not in line:
            raise ParseError("expected 'atom : atoms...'", lineno, len(line.rstrip()) + 1)
        left, _, right = line.partition(":")
        head = left.split()
        if len(head) != 1:
            raise ParseError(
                "exactly one atom must stand left of ':'", lineno, _column(line, ":")
            )
        atom = _check_atom_token(head[0], lineno, line)
        if atom in table:
            raise ParseError(f"duplicate definition of {atom!r}", lineno, _column(line, atom))
        table[atom] = [_check_atom_token(tok, lineno, line) for tok in right.split()]
    if complete_loose:
        return complete_loose_atoms(table)
    defined = set(table)
    for atom, rhs in table.items():
        for other in rhs:
            if other not in defined:
                raise ParseError(
                    f"loose atom {other!r} (define it or pass the completion flag)",
                    _line_of(text, other),
                    0,
                ) from None
    return GnfTheory(table)


def _line_of(text: str, token: str) -> int:
    for lineno, line in _content_lines(text):
        if token in line.split() or token in line.replace(":", " ").split():
            return lineno
    return 0


def parse_edges(text: str) -> Digraph:
    """Parse an edge list: ``a -> b`` lines and ``vertex x`` declarations."""
    vertices: set[str] = set()
    edges: list[tuple[str, str]] = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "vertex":
            vertices.add(_check_atom_token(tokens[1], lineno, line))
        elif len(tokens) == 3 and tokens[1] == "->":
            src = _check_atom_token(tokens[0], lineno, line)
            dst = _check_atom_token(tokens[2], lineno, line)
            vertices.update((src, dst))
            edges.append((src, dst))
        else:
            raise ParseError(
                "expected 'a -> b' or 'vertex x'", lineno, _column(line, tokens[0])
            )
    return Digraph(vertices, edges)


def parse_clause(text: str) -> Clause:
    """Parse one clause: ``~``-prefixed literals, or ``[]`` for empty."""
    tokens = text.split()
    if tokens == ["[]"]:
        return Clause()
    literals = []
    for token in tokens:
        negated = token.startswith("~")
        name = token[1:] if negated else token
        if not is_valid_atom(name):
            raise ParseError(f"invalid literal {token!r}", 1, _column(text, token))
        literals.append(Literal(name, negated))
    return Clause(literals)


def parse_clause_set(text: str) -> ClausalTheory:
    """Parse a clause set, one clause per line."""
    clauses = []
    for lineno, line in _content_lines(text):
        try:
            clauses.append(parse_clause(line))
        except ParseError as exc:
            raise ParseError(exc.args[0], lineno, exc.column) from None
    return ClausalTheory(frozenset(clauses))


def detect_kind(text: str) -> str:
    """Sniff the input format; clause sets are the fallback."""
    for _, line in _content_lines(text):
        tokens = line.split()
        if "->" in tokens or (tokens and tokens[0] == "vertex"):
            return EDGE_LIST
        if ":" in line:
            return GNF_THEORY
    return CLAUSE_SET


def parse_document(
    text: str,
    source: str = "<input>",
    kind: Optional[str] = None,
    complete_loose: bool = False,
) -> InputDocument:
    kind = kind or detect_kind(text)
    if kind == GNF_THEORY:
        payload: Union[GnfTheory, Digraph, ClausalTheory] = parse_theory(
            text, complete_loose=complete_loose
        )
    elif kind == EDGE_LIST:
        payload = parse_edges(text)
    elif kind == CLAUSE_SET:
        payload = parse_clause_set(text)
    else:
        raise ParseError(f"unknown input kind {kind!r}")
    return InputDocument(kind=kind, payload=payload, source=source)


def format_clause(clause: Clause) -> str:
    return str(clause)


def format_theory(theory: GnfTheory) -> str:
    lines = []
    for atom in theory.atoms():
        rhs = " ".join(sorted(theory.negated(atom)))
        lines.append(f"{atom} : {rhs}".rstrip())
    return "\n".join(lines) + "\n"


def format_graph(graph: Digraph) -> str:
    lines = []
    touched = {v for edge in graph.edges for v in edge}
    for v in graph.vertices:
        if v not in touched:
            lines.append(f"vertex {v}")
    for src, dst in sorted(graph.edges):
        lines.append(f"{src} -> {dst}")
    return "\n".join(lines) + ("\n" if lines else "")


def format_clause_set(theory: ClausalTheory) -> str:
    return "\n".join(str(c) for c in sorted(theory.clauses, key=clause_sort_key)) + "\n"


def sorted_clause_strings(clauses) -> list[str]:
    return [str(c) for c in sorted(clauses, key=clause_sort_key)]


def to_jsonable(value):
    """Convert package values into JSON-ready structures.

    Atom sets become sorted arrays; partitions become objects with
    ``true``/``false`` (and ``paradox``) keys; clauses become their text
    form.
    """
    if isinstance(value, Partition3):
        return {
            "true": sorted(value.true_set),
            "false": sorted(value.false_set),
            "paradox": sorted(value.paradox_set),
        }
    if isinstance(value, Partition2):
        return {"true": sorted(value.true_set), "false": sorted(value.false_set)}
    if isinstance(value, Clause):
        return str(value)
    if isinstance(value, ClausalTheory):
        return {
            "clauses": sorted_clause_strings(value.clauses),
            "universe": list(value.universe),
        }
    if isinstance(value, Closure):
        return sorted_clause_strings(value.derived)
    if isinstance(value, SubdiscourseReport):
        return {
            "paradox": sorted(value.paradox_atoms),
            "healthy": sorted(value.healthy_atoms),
            "border": sorted(value.border),
            "theory": sorted_clause_strings(value.theory.clauses),
        }
    if isinstance(value, EntailmentVerdict):
        via: dict = {"kind": value.kind}
        if value.witness is not None:
            via["witness"] = str(value.witness)
        if value.countermodel is not None:
            via["countermodel"] = to_jsonable(value.countermodel)
        return {"holds": value.holds, "via": via}
    if isinstance(value, Proof):
        return {
            "conclusion": str(value.conclusion),
            "steps": [str(step) for step in value.steps],
        }
    if isinstance(value, (frozenset, set)):
        try:
            return sorted(value)
        except TypeError:
            return sorted((to_jsonable(v) for v in value), key=json.dumps)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    return value


def to_json(result, command: str = "result") -> str:
    """Serialize a command result in the stable, versioned envelope."""
    document = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "result": to_jsonable(result),
    }
    return json.dumps(document, indent=2, sort_keys=True)
