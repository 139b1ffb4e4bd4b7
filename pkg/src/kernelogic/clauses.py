"""Clause algebra: literals, clauses, clause sets, and the graph translation.

Clauses are finite sets of literals, so ``~x ~x`` collapses to ``~x``
and a clause may legitimately contain both ``x`` and ``~x`` (the
resolution axioms do). The empty clause is a first-class value and
prints as ``[]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import ValidationError
from .graphs import Digraph, _check_atom


class Literal(NamedTuple):
    """An atom or its negation. Orders by atom, positive before negative."""

    atom: str
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return "~" + self.atom if self.negated else self.atom


@dataclass(frozen=True)
class Clause:
    """A clause as a canonical, immutable set of literals."""

    literals: frozenset[Literal] = frozenset()

    def __post_init__(self):
        if not isinstance(self.literals, frozenset):
            object.__setattr__(self, "literals", frozenset(self.literals))
        for lit in self.literals:
            _check_atom(lit.atom)

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def atoms(self) -> frozenset[str]:
        return frozenset(lit.atom for lit in self.literals)

    def sorted_literals(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.literals))

    def issubset(self, other: "Clause") -> bool:
        return self.literals <= other.literals

    def difference(self, other: "Clause") -> "Clause":
        return Clause(self.literals - other.literals)

    def union(self, other: "Clause") -> "Clause":
        return Clause(self.literals | other.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.sorted_literals())

    def __contains__(self, lit: object) -> bool:
        return lit in self.literals

    def __str__(self) -> str:
        if not self.literals:
            return "[]"
        return " ".join(str(lit) for lit in self.sorted_literals())

    def __repr__(self) -> str:
        return f"Clause({str(self)!r})"


def clause_sort_key(clause: Clause) -> tuple:
    """Deterministic clause order: by size, then by sorted literals."""
    lits = clause.sorted_literals()
    return (len(lits), lits)


@dataclass(frozen=True)
class ClausalTheory:
    """A finite clause set over an explicitly fixed atom universe.

    The universe defaults to the atoms that occur in the clauses but may
    be wider; resolution axioms later quantify over all of it.
    """

    clauses: frozenset[Clause]
    universe: tuple[str, ...] = ()

    def __post_init__(self):
        clauses = self.clauses
        if not isinstance(clauses, frozenset):
            clauses = frozenset(clauses)
            object.__setattr__(self, "clauses", clauses)
        occurring = {atom for cl in clauses for atom in cl.atoms()}
        if self.universe:
            names = tuple(sorted(set(self.universe)))
            missing = occurring - set(names)
            if missing:
                raise ValidationError(
                    f"universe is missing occurring atoms: {sorted(missing)}"
                )
        else:
            names = tuple(sorted(occurring))
        for name in names:
            _check_atom(name)
        object.__setattr__(self, "universe", names)

    def atoms(self) -> tuple[str, ...]:
        return self.universe

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(sorted(self.clauses, key=clause_sort_key))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self)
        return f"ClausalTheory([{body}], universe={list(self.universe)!r})"


def clausal_theory(graph: Digraph) -> ClausalTheory:
    """The clause form of a graph.

    Every vertex ``x`` contributes one all-positive clause over ``x``
    and its successors, and one binary negative clause ``~x ~y`` per
    successor ``y``. Set semantics deduplicates: the positive clause of
    a loop vertex mentions it once and the negative clause of a loop is
    the unit ``~x``.
    """
    built: list[Clause] = []
    for x in graph.vertices:
        succ = graph.successors(x)
        built.append(Clause(Literal(y) for y in succ | {x}))
        for y in sorted(succ):
            built.append(Clause((Literal(x, True), Literal(y, True))))
    return ClausalTheory(frozenset(built), graph.vertices)


def complement_units(clause: Clause) -> frozenset[Clause]:
    """One unit clause per literal of ``clause``, with polarity flipped."""
    return frozenset(Clause((lit.complement(),)) for lit in clause.literals)


def remove_atoms(theory: ClausalTheory, atoms: Iterable[str]) -> ClausalTheory:
    """Delete every literal over ``atoms`` from every clause.

    Clauses that lose all their literals disappear entirely (including
    an input empty clause), and the universe shrinks accordingly.
    """
    drop = frozenset(atoms)
    kept = set()
    for clause in theory.clauses:
        reduced = frozenset(l for l in clause.literals if l.atom not in drop)
        if reduced:
            kept.add(Clause(reduced))
    universe = tuple(a for a in theory.universe if a not in drop)
    return ClausalTheory(frozenset(kept), universe)
