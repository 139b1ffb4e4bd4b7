"""Directed graphs and theories in graph normal form (GNF).

An atom is a plain string built from letters, digits, underscores and
apostrophes. A GNF theory assigns to every atom the set of atoms it
negates (an empty set means the atom asserts itself outright); a
digraph carries exactly the same information as edges from each atom to
the atoms it negates. ``theory_to_graph`` and ``graph_to_theory`` are
mutually inverse, so the two presentations are interchangeable.

Every value here is immutable after construction and every operation is
a pure function. Internally a graph interns its vertices into dense bit
positions (lexicographic order), because the enumeration and closure
algorithms built on top of this module live and die by fast set
operations; the public API only ever speaks atom names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError

_ATOM_RE = re.compile(r"[A-Za-z0-9_']+\Z")


def is_valid_atom(name: str) -> bool:
    """True if ``name`` is a legal atom (letters, digits, ``_``, ``'``)."""
    return isinstance(name, str) and bool(_ATOM_RE.match(name))


def _check_atom(name: str) -> str:
    if not is_valid_atom(name):
        raise ValidationError(f"invalid atom name {name!r}")
    return name


class Universe:
    """A fixed, lexicographically ordered set of atoms with bit positions.

    ``mask_of``/``atoms_of`` translate between name sets and integer
    bitmasks; bit ``i`` stands for ``names[i]``.
    """

    __slots__ = ("names", "full_mask", "_index")

    def __init__(self, names: Iterable[str]):
        self.names: tuple[str, ...] = tuple(sorted(set(names)))
        for name in self.names:
            _check_atom(name)
        self._index = {name: i for i, name in enumerate(self.names)}
        self.full_mask = (1 << len(self.names)) - 1

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Universe({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown atom {name!r}") from None

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def atoms_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.names[i] for i in bits(mask))

    def sorted_atoms_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in bits(mask))


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """A finite directed graph over named atoms.

    Loops are permitted; edges have set semantics (no parallel
    duplicates). Vertices are kept in lexicographic order and all
    derived iteration is deterministic.
    """

    __slots__ = ("universe", "vertices", "edges", "_succ", "_pred")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        self.universe = Universe(vertices)
        self.vertices: tuple[str, ...] = self.universe.names
        n = len(self.vertices)
        succ = [0] * n
        pred = [0] * n
        edge_set = set()
        for src, dst in edges:
            i = self.universe.index(src)
            j = self.universe.index(dst)
            succ[i] |= 1 << j
            pred[j] |= 1 << i
            edge_set.add((src, dst))
        self.edges: frozenset[tuple[str, str]] = frozenset(edge_set)
        self._succ = succ
        self._pred = pred

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        es = sorted(self.edges)
        return f"Digraph(vertices={list(self.vertices)!r}, edges={es!r})"

    def __len__(self) -> int:
        return len(self.vertices)

    def successors(self, atom: str) -> frozenset[str]:
        return self.universe.atoms_of(self._succ[self.universe.index(atom)])

    def predecessors(self, atom: str) -> frozenset[str]:
        return self.universe.atoms_of(self._pred[self.universe.index(atom)])

    # Mask-level helpers used throughout the package. ``mask`` arguments
    # are bitmasks over ``self.universe``.

    def out_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self._succ[i]
        return out

    def in_mask(self, mask: int) -> int:
        into = 0
        for i in bits(mask):
            into |= self._pred[i]
        return into

    def in_closed_mask(self, mask: int) -> int:
        return mask | self.in_mask(mask)


class GnfTheory:
    """A well-formed GNF theory: every mentioned atom is defined once.

    ``formulas`` maps each atom to the (frozen) set of atoms under its
    negated conjunction; an empty set is a sink formula asserting the
    atom. Construction rejects loose atoms, i.e. atoms that occur on a
    right-hand side without a definition of their own.
    """

    __slots__ = ("formulas",)

    def __init__(self, formulas: Mapping[str, Iterable[str]]):
        table: dict[str, frozenset[str]] = {}
        for atom in sorted(formulas):
            _check_atom(atom)
            rhs = frozenset(formulas[atom])
            for other in rhs:
                _check_atom(other)
            table[atom] = rhs
        for atom, rhs in table.items():
            for other in sorted(rhs):
                if other not in table:
                    raise ValidationError(
                        f"loose atom {other!r}: it occurs in the formula for "
                        f"{atom!r} but has no formula of its own"
                    )
        self.formulas: dict[str, frozenset[str]] = table

    def atoms(self) -> tuple[str, ...]:
        return tuple(self.formulas)

    def negated(self, atom: str) -> frozenset[str]:
        try:
            return self.formulas[atom]
        except KeyError:
            raise ValidationError(f"unknown atom {atom!r}") from None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GnfTheory) and self.formulas == other.formulas

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{atom}: {sorted(rhs)}" for atom, rhs in self.formulas.items()
        )
        return f"GnfTheory({{{parts}}})"


def theory_to_graph(theory: GnfTheory) -> Digraph:
    """The graph of a theory: an edge from each atom to each atom it negates."""
    edges = [
        (atom, other)
        for atom, rhs in theory.formulas.items()
        for other in sorted(rhs)
    ]
    return Digraph(theory.atoms(), edges)


def graph_to_theory(graph: Digraph) -> GnfTheory:
    """The theory of a graph; inverse of :func:`theory_to_graph`."""
    return GnfTheory({v: graph.successors(v) for v in graph.vertices})


@dataclass(frozen=True)
class Neighborhood:
    """One-step neighborhoods of a vertex set.

    ``out`` collects successors, ``in_`` predecessors, and ``in_closed``
    is the set itself together with its predecessors.
    """

    out: frozenset[str]
    in_: frozenset[str]
    in_closed: frozenset[str]


def neighborhoods(graph: Digraph, atoms: Iterable[str]) -> Neighborhood:
    mask = graph.universe.mask_of(atoms)
    u = graph.universe
    return Neighborhood(
        out=u.atoms_of(graph.out_mask(mask)),
        in_=u.atoms_of(graph.in_mask(mask)),
        in_closed=u.atoms_of(graph.in_closed_mask(mask)),
    )


def reachable(graph: Digraph, atoms: Iterable[str], direction: str = "forward") -> frozenset[str]:
    """Reflexive-transitive closure of the edge relation from ``atoms``.

    ``direction`` is ``"forward"`` (follow edges) or ``"backward"``
    (follow reversed edges). Always a superset of ``atoms`` and a
    fixpoint of one more neighborhood step.
    """
    if direction not in ("forward", "backward"):
        raise ValidationError(f"direction must be 'forward' or 'backward', got {direction!r}")
    step = graph.out_mask if direction == "forward" else graph.in_mask
    mask = graph.universe.mask_of(atoms)
    while True:
        grown = mask | step(mask)
        if grown == mask:
            return graph.universe.atoms_of(mask)
        mask = grown


def is_inverse_closed(graph: Digraph, atoms: Iterable[str]) -> bool:
    """True if the in-closure of ``atoms`` has no predecessors outside itself."""
    mask = graph.universe.mask_of(atoms)
    closed = graph.in_closed_mask(mask)
    return graph.in_mask(closed) & ~closed == 0


def induced_subgraph(graph: Digraph, atoms: Iterable[str]) -> Digraph:
    """The subgraph on ``atoms`` keeping exactly the edges inside it."""
    keep = frozenset(atoms)
    for atom in keep:
        graph.universe.index(atom)
    edges = [(s, d) for (s, d) in graph.edges if s in keep and d in keep]
    return Digraph(keep, edges)


def underlying_components(graph: Digraph) -> list[frozenset[str]]:
    """Connected components after forgetting edge directions.

    Returned in deterministic order, by smallest member atom.
    """
    n = len(graph.vertices)
    und = [graph._succ[i] | graph._pred[i] for i in range(n)]
    seen = 0
    components = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        while True:
            grown = comp
            for i in bits(comp):
                grown |= und[i]
            if grown == comp:
                break
            comp = grown
        seen |= comp
        components.append(graph.universe.atoms_of(comp))
    return components


def complete_loose_atoms(formulas: Mapping[str, Iterable[str]]) -> GnfTheory:
    """Close a raw theory by pairing every loose atom with a fresh twin.

    Each loose atom ``b`` gets a fresh atom ``b'`` (apostrophes are
    appended until the name is unused) and the two formulas ``b: b'``
    and ``b': b``, after which the result is well-formed. A theory that
    is already well-formed comes back unchanged.
    """
    table: dict[str, frozenset[str]] = {}
    for atom in sorted(formulas):
        _check_atom(atom)
        rhs = frozenset(_check_atom(a) for a in formulas[atom])
        table[atom] = rhs
    taken = set(table)
    for rhs in table.values():
        taken |= rhs
    loose = sorted(a for a in taken if a not in table)
    for atom in loose:
        twin = atom + "'"
        while twin in taken:
            twin += "'"
        taken.add(twin)
        table[atom] = frozenset({twin})
        table[twin] = frozenset({atom})
    return GnfTheory(table)
