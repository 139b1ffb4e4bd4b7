"""Model-side consequence: satisfaction, entailment, relevance.

Satisfaction of a clause by a three-way partition has three routes: a
positive literal lands in the true part, a negative literal lands in
the false part, or the whole clause lives inside a nonempty unsettled
part. With an empty unsettled part this is exactly classical clause
satisfaction.

Paraconsistent entailment has two implementations on purpose. The
decision procedure in :mod:`kernelogic.resolution` works straight off
the saturated closure and is the source of truth for relevance and
minimal clauses here; :func:`entails_semantic` enumerates models and
reports witnesses or countermodels, and exists to cross-validate the
other route.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .clauses import ClausalTheory, Clause, clausal_theory
from .errors import ResourceLimitError, ValidationError
from .graphs import Digraph, Universe, bits, underlying_components
from .kernels import DEFAULT_MAX_ATOMS, Partition3, models
from .resolution import Closure, DEFAULT_MAX_CLAUSES, _closure_for, entails_para


def satisfies(partition: Partition3, clause: Clause) -> bool:
    """Clause satisfaction by a three-way partition.

    The empty clause is satisfied exactly when the unsettled part is
    nonempty.
    """
    atoms = partition.atoms()
    foreign = clause.atoms() - atoms
    if foreign:
        raise ValidationError(f"clause atoms outside the partition: {sorted(foreign)}")
    for lit in clause.literals:
        if lit.negated:
            if lit.atom in partition.false_set:
                return True
        elif lit.atom in partition.true_set:
            return True
    return bool(partition.paradox_set) and clause.atoms() <= partition.paradox_set


@dataclass(frozen=True)
class EntailmentVerdict:
    """Outcome of a semantic entailment check, with its reason.

    ``kind`` is ``"healthy-witness"`` (some subclause over settled atoms
    holds in every model, carried in ``witness``), ``"all-paradox"``
    (every atom of the clause is unsettled in every model), or
    ``"countermodel"`` (a model falsifying the clause, carried in
    ``countermodel``).
    """

    holds: bool
    kind: str
    witness: Optional[Clause] = None
    countermodel: Optional[Partition3] = None


def entails_semantic(
    graph: Digraph,
    clause: Clause,
    max_atoms: int = DEFAULT_MAX_ATOMS,
    *,
    model_list: Optional[list[Partition3]] = None,
) -> EntailmentVerdict:
    """Entailment by enumeration over the models of the graph.

    ``model_list`` may pass in precomputed ``models(graph)`` output when
    the caller checks many clauses against the same graph.
    """
    mods = models(graph, max_atoms) if model_list is None else model_list
    for m in mods:
        if not satisfies(m, clause):
            return EntailmentVerdict(False, "countermodel", countermodel=m)
    unsettled = mods[0].paradox_set
    if unsettled and clause.atoms() <= unsettled:
        return EntailmentVerdict(True, "all-paradox")
    healthy_lits = [l for l in clause.sorted_literals() if l.atom not in unsettled]
    for size in range(1, len(healthy_lits) + 1):
        for combo in combinations(healthy_lits, size):
            candidate = Clause(combo)
            if all(satisfies(m, candidate) for m in mods):
                return EntailmentVerdict(True, "healthy-witness", witness=candidate)
    raise AssertionError(
        "entailed clause with no healthy witness; completeness is broken"
    )


def classical_entails(
    theory: ClausalTheory, clause: Clause, max_atoms: int = DEFAULT_MAX_ATOMS
) -> bool:
    """Two-valued entailment by truth tables over the whole universe."""
    u = Universe(theory.universe)
    foreign = clause.atoms() - set(u.names)
    if foreign:
        raise ValidationError(f"clause atoms outside the universe: {sorted(foreign)}")
    n = len(u)
    if n > max_atoms:
        raise ResourceLimitError(f"universe has {n} atoms, truth-table cap is {max_atoms}")

    def intern(cl: Clause) -> tuple[int, int]:
        pos = neg = 0
        for lit in cl.literals:
            bit = 1 << u.index(lit.atom)
            if lit.negated:
                neg |= bit
            else:
                pos |= bit
        return pos, neg

    theory_masks = [intern(cl) for cl in theory.clauses]
    goal_pos, goal_neg = intern(clause)
    for assignment in range(1 << n):
        if all(p & assignment or q & ~assignment for p, q in theory_masks):
            if not (goal_pos & assignment or goal_neg & ~assignment):
                return False
    return True


def is_relevant(
    theory: ClausalTheory,
    clause: Clause,
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> bool:
    """Entailed, with no entailed nonempty proper subclause.

    A relevant clause says nothing that one of its proper parts already
    says; the empty clause is outside the definition.
    """
    if clause.is_empty:
        raise ValidationError("relevance is undefined for the empty clause")
    closure = _closure_for(theory, closure, max_clauses)
    if not entails_para(theory, clause, closure=closure):
        return False
    lits = clause.sorted_literals()
    for size in range(1, len(lits)):
        for combo in combinations(lits, size):
            if entails_para(theory, Clause(combo), closure=closure):
                return False
    return True


def min_clauses(
    theory: ClausalTheory,
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> frozenset[Clause]:
    """Derivable clauses with no nonempty derivable proper subclause.

    The empty clause is excluded; these are exactly the relevant
    clauses of the theory.
    """
    closure = _closure_for(theory, closure, max_clauses)
    sized = sorted(
        ((p.bit_count() + q.bit_count(), (p, q)) for p, q in closure.iter_masks()),
        key=lambda item: item[0],
    )
    minimal: list[tuple[int, int]] = []
    for size, (p, q) in sized:
        if size == 0:
            continue
        # Any derivable proper subclause contains a minimal one of
        # strictly smaller size, so checking the antichain so far is enough.
        if not any(mp & ~p == 0 and mq & ~q == 0 for mp, mq in minimal):
            minimal.append((p, q))
    return frozenset(closure.clause_of(m) for m in minimal)


def component_claim_check(
    graph: Digraph,
    *,
    closure: Optional[Closure] = None,
    max_clauses: int = DEFAULT_MAX_CLAUSES,
) -> bool:
    """Check that resolution couples exactly the atoms that hang together.

    True when every derivable clause of the graph's clause form stays
    inside one component of the underlying undirected graph, and every
    two atoms sharing a component co-occur in some derivable clause.
    """
    theory = clausal_theory(graph)
    closure = _closure_for(theory, closure, max_clauses)
    u = graph.universe
    comp_masks = [u.mask_of(c) for c in underlying_components(graph)]
    comp_of = {}
    for cm in comp_masks:
        for i in bits(cm):
            comp_of[i] = cm
    n = len(u)
    cooccur = [0] * n
    for p, q in closure.iter_masks():
        atoms_mask = p | q
        if not atoms_mask:
            continue
        first = (atoms_mask & -atoms_mask).bit_length() - 1
        if atoms_mask & ~comp_of[first]:
            return False
        for i in bits(atoms_mask):
            cooccur[i] |= atoms_mask
    for cm in comp_masks:
        for i in bits(cm):
            if cm & ~cooccur[i]:
                return False
    return True
