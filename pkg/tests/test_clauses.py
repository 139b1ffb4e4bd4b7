"""Clause values, the graph translation, and the literal-removal operator."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import kernelogic as kl
from kernelogic import Clause, Literal

from conftest import clause, clauses

literals = st.builds(
    Literal, st.sampled_from(["a", "a'", "b", "c", "d"]), st.booleans()
)
clause_values = st.builds(Clause, st.frozensets(literals, max_size=6))


def test_literal_order():
    assert Literal("a") < Literal("a", True) < Literal("a'") < Literal("b")
    assert str(Literal("b", True)) == "~b"


def test_clause_canonical_form():
    c = clause("~b ~b a")
    assert c == clause("a ~b")
    assert len(c) == 2
    assert str(c) == "a ~b"
    assert str(Clause()) == "[]"
    assert Clause().is_empty
    both = clause("x ~x")
    assert both.atoms() == {"x"}
    assert len(both) == 2


@given(st.lists(literals, max_size=8))
def test_clause_order_independent(lits):
    assert Clause(lits) == Clause(reversed(lits)) == Clause(frozenset(lits))


def test_theory_universe_handling():
    t = kl.ClausalTheory(clauses("a ~b"))
    assert t.universe == ("a", "b")
    wide = kl.ClausalTheory(clauses("a"), ("a", "z"))
    assert wide.universe == ("a", "z")
    with pytest.raises(kl.ValidationError, match="missing occurring atoms"):
        kl.ClausalTheory(clauses("a b"), ("a",))


def test_clausal_theory_of_our_graph(our_graph, our_cth):
    assert our_cth.clauses == clauses(
        "a a'",
        "~a ~a'",
        "a b c",
        "~a ~b",
        "~b ~c",
        "c d",
        "~c ~d",
        "d e",
        "~d ~e",
        "c e",
        "~c ~e",
    )
    assert our_cth.universe == our_graph.vertices


def test_clausal_theory_sink_and_loop(f2_graph):
    sink = kl.clausal_theory(kl.Digraph(["s"]))
    assert sink.clauses == clauses("s")

    # Loop vertex: its positive clause mentions it once, its negative
    # self-pair collapses to a unit.
    f2 = kl.clausal_theory(f2_graph)
    assert f2.clauses == clauses("f y", "~f", "~f ~y", "y s", "~y ~s", "s")


@given(st.data())
def test_clausal_theory_shape(data):
    verts = data.draw(st.sets(st.sampled_from(["a", "b", "c", "d"]), min_size=1))
    edges = data.draw(
        st.sets(st.tuples(st.sampled_from(sorted(verts)), st.sampled_from(sorted(verts))))
    )
    g = kl.Digraph(verts, edges)
    t = kl.clausal_theory(g)
    # One positive clause per vertex and one negative pair per edge,
    # before set semantics collapses duplicates.
    positives = [Clause([Literal(y) for y in g.successors(x) | {x}]) for x in g.vertices]
    negatives = [
        Clause([Literal(x, True), Literal(y, True)]) for (x, y) in g.edges
    ]
    assert len(positives) == len(g.vertices)
    assert len(negatives) == len(g.edges)
    assert t.clauses == frozenset(positives) | frozenset(negatives)


def test_complement_units():
    assert kl.complement_units(clause("a ~b")) == clauses("~a", "b")
    assert kl.complement_units(Clause()) == frozenset()
    assert kl.complement_units(clause("x")) == clauses("~x")


def test_remove_atoms_table(our_cth):
    pruned = kl.remove_atoms(our_cth, {"c", "d", "e"})
    assert pruned.clauses == clauses("a a'", "~a ~a'", "a b", "~a ~b", "~b")
    assert pruned.universe == ("a", "a'", "b")


def test_remove_atoms_edges():
    t = kl.ClausalTheory(clauses("c d"))
    assert kl.remove_atoms(t, set()) == t
    gone = kl.remove_atoms(t, {"c", "d"})
    assert gone.clauses == frozenset()
    assert gone.universe == ()
    # An input empty clause is dropped too.
    with_empty = kl.ClausalTheory(clauses("[]", "a"))
    assert kl.remove_atoms(with_empty, set()).clauses == clauses("a")


@given(
    st.frozensets(clause_values, max_size=8),
    st.sets(st.sampled_from(["a", "a'", "b", "c", "d"])),
    st.sets(st.sampled_from(["a", "a'", "b", "c", "d"])),
)
def test_remove_atoms_composes(cs, x, y):
    t = kl.ClausalTheory(cs)
    once = kl.remove_atoms(kl.remove_atoms(t, x), y)
    both = kl.remove_atoms(t, x | y)
    assert once == both
