"""Direct resolution: exact clause closures and what they decide.

The calculus has one axiom per universe atom, ``x ~x``, and the single
resolution rule. Saturation computes the least clause set containing
the inputs and axioms and closed under resolution. Crucially there is
no subsumption deletion and no tautology elimination: weakening is not
admissible in this logic, so exact membership in the closure IS the
derivability relation and pruning would change the meaning, not just
the performance.

Closures of paradoxical theories tend to fill large parts of the clause
lattice, which makes clause-pair scanning hopeless. Saturation therefore
runs as a fixpoint over the full lattice of clauses, encoded as bit
indices: one round performs, for every pivot atom, an exact union
convolution (zeta transform, pointwise product, Moebius inversion) of
the clauses containing the positive pivot against those containing the
negative pivot. Rounds repeat until nothing new appears; the round
number of each clause is kept so that proofs can later be rebuilt by
searching strictly earlier rounds for a parent pair. Universes too wide
for lattice arrays fall back to a classic worklist loop that records
parents eagerly.

On top of the closure this module derives the provably paradoxical
atoms (both the atom and its negation derivable), the consistent
subtheory obtained by deleting all literals over them, the classical
models of that subtheory, the paraconsistent entailment decision, and
three weakening variants of provability.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .clauses import (
    ClausalTheory,
    Clause,
    Literal,
    clausal_theory,
    clause_sort_key,
    complement_units,
    remove_atoms,
)
from .errors import ResourceLimitError, ValidationError
from .graphs import Digraph, Universe, bits, induced_subgraph, neighborhoods
from .kernels import DEFAULT_MAX_ATOMS, Partition2, enumerate_kernels

DEFAULT_MAX_CLAUSES = 1_000_000

# Widest universe for which 4**n lattice arrays are still cheap.
LATTICE_MAX_ATOMS = 11

_INPUT = "input"
_AXIOM = "axiom"
_RESOLVENT = "resolvent"


class Closure:
    """The full set of derivable clauses for one theory.

    ``derived``, ``origin`` and ``parents`` are name-level views built
    on demand; the mask-level internals stay available to the other
    operations in this module. Closures are immutable once returned.
    """

    def __init__(
        self,
        universe: Universe,
        entries: "dict[tuple[int, int], tuple[str, int]]",
        parents: "dict[tuple[int, int], Optional[tuple]]",
    ):
        self._u = universe
        self._entries = entries  # masks -> (origin, round number)
        self._parents_m = parents  # masks -> (pos parent, neg parent, atom index)
        self.universe: tuple[str, ...] = universe.names

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, clause: Clause) -> bool:
        return self.clause_masks(clause) in self._entries

    def clause_masks(self, clause: Clause) -> tuple[int, int]:
        """Intern a clause over this closure's universe."""
        pos = neg = 0
        for lit in clause.literals:
            bit = 1 << self._u.index(lit.atom)
            if lit.negated:
                neg |= bit
            else:
                pos |= bit
        return pos, neg

    def clause_of(self, masks: tuple[int, int]) -> Clause:
        pos, neg = masks
        lits = [Literal(a) for a in self._u.sorted_atoms_of(pos)]
        lits += [Literal(a, True) for a in self._u.sorted_atoms_of(neg)]
        return Clause(lits)

    def iter_masks(self):
        return iter(self._entries)

    @cached_property
    def derived(self) -> frozenset[Clause]:
        return frozenset(self.clause_of(m) for m in self._entries)

    @cached_property
    def origin(self) -> dict[Clause, str]:
        return {self.clause_of(m): kind for m, (kind, _) in self._entries.items()}

    @property
    def parents(self) -> dict[Clause, Optional[tuple[Clause, Clause, str]]]:
        """One recorded or reconstructed resolution step per clause.

        Building the whole map forces a parent search for every
        resolvent; intended for modest closures.
        """
        out = {}
        for m in self._entries:
            par = self.parents_of_masks(m)
            if par is None:
                out[self.clause_of(m)] = None
            else:
                p, q, i = par
                out[self.clause_of(m)] = (
                    self.clause_of(p),
                    self.clause_of(q),
                    self._u.names[i],
                )
        return out

    def parents_of_masks(self, m: tuple[int, int]) -> Optional[tuple]:
        if m in self._parents_m:
            return self._parents_m[m]
        kind, rnd = self._entries[m]
        if kind != _RESOLVENT:
            self._parents_m[m] = None
            return None
        found = self._search_parents(m, rnd)
        self._parents_m[m] = found
        return found

    def _search_parents(self, m: tuple[int, int], rnd: int) -> tuple:
        # A clause first seen in round r has a parent pair strictly
        # earlier, so restricting the scan keeps the links acyclic.
        pos, neg = m
        for i in range(len(self._u)):
            bit = 1 << i
            pos_side = []
            neg_side = []
            for (p, q), (_, lay) in self._entries.items():
                if lay >= rnd:
                    continue
                if p & bit and (p & ~bit) & ~pos == 0 and q & ~neg == 0:
                    pos_side.append((p, q))
                if q & bit and (q & ~bit) & ~neg == 0 and p & ~pos == 0:
                    neg_side.append((p, q))
            for pp, pn in pos_side:
                if neg & bit and not pn & bit:
                    # A negated pivot in the result can only survive
                    # through the positive-side parent.
                    continue
                need_pos = pos & ~(pp & ~bit)
                need_neg = (neg & ~pn) | bit
                direct = (need_pos, need_neg)
                hit = self._entries.get(direct)
                if hit is not None and hit[1] < rnd:
                    return ((pp, pn), direct, i)
            for pp, pn in pos_side:
                rp, rn = pp & ~bit, pn
                for qp, qn in neg_side:
                    if (rp | qp) == pos and (rn | (qn & ~bit)) == neg:
                        return ((pp, pn), (qp, qn), i)
        raise AssertionError("resolvent without a parent pair; layering is broken")


def _seed_entries(theory: ClausalTheory, u: Universe):
    entries: dict[tuple[int, int], tuple[str, int]] = {}

    def intern(clause: Clause) -> tuple[int, int]:
        pos = neg = 0
        for lit in clause.literals:
            bit = 1 << u.index(lit.atom)
            if lit.negated:
                neg |= bit
            else:
                pos |= bit
        return pos, neg

    for clause in sorted(theory.clauses, key=clause_sort_key):
        entries.setdefault(intern(clause), (_INPUT, 0))
    for i in range(len(u)):
        bit = 1 << i
        entries.setdefault((bit, bit), (_AXIOM, 0))
    return entries


def _zeta(values: np.ndarray, nbits: int) -> np.ndarray:
    size = values.shape[0]
    for b in range(nbits):
        block = 1 << b
        values = values.reshape(size >> (b + 1), 2, block)
        values[:, 1, :] += values[:, 0, :]
        values = values.reshape(size)
    return values


def _moebius(values: np.ndarray, nbits: int) -> np.ndarray:
    size = values.shape[0]
    for b in range(nbits):
        block = 1 << b
        values = values.reshape(size >> (b + 1), 2, block)
        values[:, 1, :] -= values[:, 0, :]
        values = values.reshape(size)
    return values


def _saturate_lattice(theory: ClausalTheory, u: Universe, max_clauses: int) -> Closure:
    n = len(u)
    size = 1 << (2 * n)
    entries = _seed_entries(theory, u)
    derived = np.zeros(size, dtype=bool)
    for (pos, neg) in entries:
        derived[pos | (neg << n)] = True

    rnd = 0
    while True:
        rnd += 1
        idxs = np.nonzero(derived)[0]
        fresh = np.zeros(size, dtype=bool)
        for i in range(n):
            pos_bit = 1 << i
            neg_bit = 1 << (n + i)
            with_pos = idxs[(idxs & pos_bit) != 0]
            with_neg = idxs[(idxs & neg_bit) != 0]
            if with_pos.size == 0 or with_neg.size == 0:
                continue
            f = np.zeros(size, dtype=np.int64)
            g = np.zeros(size, dtype=np.int64)
            f[with_pos ^ pos_bit] = 1
            g[with_neg ^ neg_bit] = 1
            pairs = _zeta(f, 2 * n) * _zeta(g, 2 * n)
            exact = _moebius(pairs, 2 * n)
            fresh |= exact > 0
        fresh &= ~derived
        if not fresh.any():
            break
        if int(derived.sum()) + int(fresh.sum()) > max_clauses:
            raise ResourceLimitError(f"closure exceeded {max_clauses} clauses")
        derived |= fresh
        low = (1 << n) - 1
        for idx in np.nonzero(fresh)[0]:
            idx = int(idx)
            entries[(idx & low, idx >> n)] = (_RESOLVENT, rnd)

    return Closure(u, entries, {})


def _saturate_pairwise(theory: ClausalTheory, u: Universe, max_clauses: int) -> Closure:
    n = len(u)
    entries = _seed_entries(theory, u)
    parents: dict[tuple[int, int], Optional[tuple]] = {m: None for m in entries}
    rounds = {m: 0 for m in entries}
    queue = deque(entries)
    pos_occ: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    neg_occ: list[list[tuple[int, int]]] = [[] for _ in range(n)]

    while queue:
        c = queue.popleft()
        cpos, cneg = c
        for i in bits(cpos):
            bit = 1 << i
            for d in neg_occ[i]:
                r = ((cpos & ~bit) | d[0], cneg | (d[1] & ~bit))
                if r not in entries:
                    if len(entries) >= max_clauses:
                        raise ResourceLimitError(
                            f"closure exceeded {max_clauses} clauses"
                        )
                    entries[r] = (_RESOLVENT, max(rounds[c], rounds[d]) + 1)
                    rounds[r] = entries[r][1]
                    parents[r] = (c, d, i)
                    queue.append(r)
        for i in bits(cneg):
            bit = 1 << i
            for d in pos_occ[i]:
                r = ((d[0] & ~bit) | cpos, d[1] | (cneg & ~bit))
                if r not in entries:
                    if len(entries) >= max_clauses:
                        raise ResourceLimitError(
                            f"closure exceeded {max_clauses} clauses"
                        )
                    entries[r] = (_RESOLVENT, max(rounds[c], rounds[d]) + 1)
                    rounds[r] = entries[r][1]
                    parents[r] = (d, c, i)
                    queue.append(r)
        for i in bits(cpos):
            pos_occ[i].append(c)
        for i in bits(cneg):
            neg_occ[i].append(c)

    return Closure(u, entries, parents)


def saturate(theory: ClausalTheory, max_clauses: int = DEFAULT_MAX_CLAUSES) -> Closure:
    """Close a theory under resolution, with axioms for every universe atom.

    Raises :class:`ResourceLimitError` once the closure would exceed
    ``max_clauses`` clauses.
    """
    u = Universe(theory.universe)
    if len(u) <= LATTICE_MAX_ATOMS:
        return _saturate_lattice(theory, u, max_clauses)
    return _saturate_pairwise(theory, u, max_clauses)


def derives(closure: Closure, clause: Clause) -> bool:
    """Exact membership of the canonical clause in the closure."""
    return clause in closure


def witness_subclause(closure: Closure, clause: Clause) -> Optional[Clause]:
    """A derivable subclause of ``clause``, or None.

    Prefers the smallest nonempty derivable subclause (ties broken by
    literal order); falls back to the empty clause when that is the only
    derivable subclause.
    """
    pos, neg = closure.clause_masks(clause)
    best: Optional[tuple[int, tuple]] = None
    best_masks: Optional[tuple[int, int]] = None
    empty_derivable = False
    for (p, q) in closure.iter_masks():
        if p & ~pos or q & ~neg:
            continue
        if p == 0 and q == 0:
            empty_derivable = True
            continue
        size = p.bit_count() + q.bit_count()
        if best is not None and size > best[0]:
            continue
        lits = closure.clause_of((p, q)).sorted_literals()
        if best is None or (size, lits) < best:
            best = (size, lits)
            best_masks = (p, q)
    if best_masks is not None:
        return closure.clause_of(best_masks)
    if empty_derivable:
        return Clause()
    return None


def _paradox_mask(closure: Closure) -> int:
    mask = 0
    for i in range(len(closure.universe)):
        bit = 1 << i
        if (bit, 0) in closure._entries and (0, bit) in closure._entries:
            mask |= bit
    return mask


def paradoxical_atoms(closure: Closure) -> frozenset[str]:
    """Atoms whose positive and negative units are both derivable."""
    mask = _paradox_mask(closure)
    empty = closure._entries.get((0, 0))
    # Two complementary units resolve to the empty clause, and an empty
    # clause that was RESOLVED (not handed in as input) came from such a
    # pair; an input empty clause carries no atom information.
    assert not mask or empty is not None, (
        "paradoxical atoms without a derivable empty clause"
    )
    assert empty is None or empty[0] == _INPUT or mask, (
        "derived empty clause without a paradoxical atom"
    )
    return closure._u.atoms_of(mask)


@dataclass(frozen=True)
class SubdiscourseReport:
    """The consistent part of a theory, and where it touches the rest.

    ``theory`` is the input with every literal over a paradoxical atom
    deleted. ``border`` is only populated for graph-derived theories:
    the healthy vertices with an edge into the paradoxical region.
    """

    paradox_atoms: frozenset[str]
    healthy_atoms: frozenset[str]
    theory: ClausalTheory
    border: frozenset[str]


def _closure_for(
    theory: ClausalTheory, closure: Optional[Closure], max_clauses: int
) -> Closure:
    if closure is None:
        return saturate(theory, max_clauses)
    if closure.universe != theory.universe:
        raise ValidationError("closure universe does not match the theory")
    return closure


def consistent_subtheory(
    theory: ClausalTheory,
    graph: Optional[Digraph] = None,
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> SubdiscourseReport:
    """Split a theory into its paradoxical atoms and consistent remainder."""
    if graph is not None and clausal_theory(graph) != theory:
        raise ValidationError("graph does not induce the given theory")
    closure = _closure_for(theory, closure, max_clauses)
    bad = paradoxical_atoms(closure)
    healthy = frozenset(theory.universe) - bad
    border: frozenset[str] = frozenset()
    if graph is not None:
        border = frozenset(
            x for x in healthy if graph.successors(x) - healthy
        )
    return SubdiscourseReport(
        paradox_atoms=bad,
        healthy_atoms=healthy,
        theory=remove_atoms(theory, bad),
        border=border,
    )


def core_models(
    report: SubdiscourseReport, graph: Digraph, max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[Partition2]:
    """Two-valued models of the consistent subtheory.

    These are the kernels of the healthy induced subgraph whose false
    part covers every border vertex, each paired with that false part.
    """
    healthy = induced_subgraph(graph, report.healthy_atoms)
    out = []
    for kernel in enumerate_kernels(healthy, max_atoms):
        false_part = neighborhoods(healthy, kernel).in_
        if report.border <= false_part:
            out.append(Partition2(kernel, false_part))
    return out


def entails_para(
    theory: ClausalTheory,
    clause: Clause,
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> bool:
    """Paraconsistent entailment, decided directly from the closure.

    Holds when either every atom of the clause is provably paradoxical
    (and at least one paradoxical atom exists; the empty clause passes
    exactly then), or some nonempty derivable subclause lives entirely
    on healthy atoms.
    """
    closure = _closure_for(theory, closure, max_clauses)
    pos, neg = closure.clause_masks(clause)
    bad_mask = _paradox_mask(closure)
    if bad_mask and (pos | neg) & ~bad_mask == 0:
        return True
    hpos = pos & ~bad_mask
    hneg = neg & ~bad_mask
    for (p, q) in closure.iter_masks():
        if (p or q) and p & ~hpos == 0 and q & ~hneg == 0:
            return True
    return False


WEAKENING_MODES = ("none", "awbw", "cw")


def provable_weakened(
    theory: ClausalTheory,
    clause: Clause,
    mode: str = "none",
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> bool:
    """Provability under a choice of weakening discipline.

    ``none`` is bare derivability. ``cw`` allows classical weakening, so
    any derivable subclause (the empty clause included) suffices; this
    recovers classical consequence together with its explosion. ``awbw``
    restricts weakening so that either the derivable premise keeps a
    healthy literal or the whole clause is a nonempty disjunction over
    paradoxical atoms; that blocks deriving arbitrary clauses from a
    contradiction and coincides with paraconsistent entailment.
    """
    if mode not in WEAKENING_MODES:
        raise ValidationError(f"unknown weakening mode {mode!r}")
    closure = _closure_for(theory, closure, max_clauses)
    pos, neg = closure.clause_masks(clause)
    if mode == "none":
        return (pos, neg) in closure._entries
    if mode == "cw":
        for (p, q) in closure.iter_masks():
            if p & ~pos == 0 and q & ~neg == 0:
                return True
        return False
    # awbw
    if (pos, neg) in closure._entries:
        return True
    bad_mask = _paradox_mask(closure)
    if (pos | neg) and (pos | neg) & ~bad_mask == 0:
        return True
    for (p, q) in closure.iter_masks():
        if (p or q) and p & ~pos == 0 and q & ~neg == 0 and (p | q) & ~bad_mask:
            return True
    return False


def closure_with_assumptions(
    theory: ClausalTheory, clause: Clause, max_clauses: int = DEFAULT_MAX_CLAUSES
) -> Closure:
    """Saturate the theory extended with the complement units of ``clause``.

    Denying a clause this way never changes the universe, and with the
    empty clause it degenerates to plain saturation.
    """
    missing = clause.atoms() - set(theory.universe)
    if missing:
        raise ValidationError(f"clause atoms outside the universe: {sorted(missing)}")
    extended = ClausalTheory(theory.clauses | complement_units(clause), theory.universe)
    return saturate(extended, max_clauses)


@dataclass(frozen=True)
class ProofStep:
    """One line of a proof: a clause and how it was obtained."""

    index: int
    clause: Clause
    rule: str  # "input", "axiom" or "res"
    premises: Optional[tuple[int, int]] = None
    atom: Optional[str] = None

    def __str__(self) -> str:
        if self.rule == "res":
            i, j = self.premises
            return f"{self.index}. {self.clause} [res {i} {j} on {self.atom}]"
        return f"{self.index}. {self.clause} [{self.rule}]"


@dataclass(frozen=True)
class Proof:
    """A replayable derivation ending at ``conclusion``.

    Premises of every resolution step appear earlier in ``steps``.
    """

    conclusion: Clause
    steps: tuple[ProofStep, ...]

    def to_text(self) -> str:
        return "\n".join(str(step) for step in self.steps)

    def __str__(self) -> str:
        return self.to_text()


def proof_of(closure: Closure, clause: Clause) -> Proof:
    """Reconstruct one derivation of ``clause`` from the parent links."""
    target = closure.clause_masks(clause)
    if target not in closure._entries:
        raise ValidationError(f"clause {clause} is not derivable")

    # Iterative post-order walk; proofs can be deep enough to overflow
    # the interpreter stack if done recursively.
    position: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    parentage: dict[tuple[int, int], Optional[tuple]] = {}
    stack: list[tuple[tuple[int, int], bool]] = [(target, False)]
    while stack:
        m, expanded = stack.pop()
        if m in position:
            continue
        if m not in parentage:
            parentage[m] = closure.parents_of_masks(m)
        par = parentage[m]
        if expanded or par is None:
            position[m] = len(order) + 1
            order.append(m)
            continue
        stack.append((m, True))
        stack.append((par[1], False))
        stack.append((par[0], False))

    steps = []
    for idx, m in enumerate(order, start=1):
        kind, _ = closure._entries[m]
        par = parentage[m]
        if par is None:
            steps.append(ProofStep(idx, closure.clause_of(m), kind))
        else:
            p, q, i = par
            steps.append(
                ProofStep(
                    idx,
                    closure.clause_of(m),
                    "res",
                    premises=(position[p], position[q]),
                    atom=closure.universe[i],
                )
            )
    return Proof(conclusion=closure.clause_of(target), steps=tuple(steps))
