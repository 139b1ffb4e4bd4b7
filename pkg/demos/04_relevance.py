"""What dropping all weakening buys: relevance.

Without weakening, provable clauses never dilute: if a alone is
provable, a or b is not, unless b genuinely contributes. The minimal
provable clauses coincide with the relevant ones, and resolution can
only ever couple atoms that are connected once edge directions are
forgotten.

Run:  python demos/04_relevance.py
"""

from pathlib import Path

import kernelogic as kl
from kernelogic.io_text import parse_clause, parse_edges

data = Path(__file__).parent / "data"

graph = parse_edges((data / "loop_chain.edges").read_text())
cth = kl.clausal_theory(graph)
closure = kl.saturate(cth)

print("Graph:", sorted(graph.edges))
print("Models:", kl.models(graph))

print("\nMinimal provable clauses (exactly the relevant ones):")
for c in sorted(kl.min_clauses(cth, closure=closure), key=kl.clause_sort_key):
    print("  ", c)

# The loop at a forces b true; remove it and a second model appears, so
# relevance is a property of the context, not of the clause alone.
free = kl.Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "b")])
print("\nwithout the loop, kernels:", [sorted(k) for k in kl.enumerate_kernels(free)])

# A diluted clause is entailed but not relevant: one of its parts
# already does all the work.
print("\n~a entailed:", kl.entails_para(cth, parse_clause("~a"), closure=closure))
print("~a b entailed:", kl.entails_para(cth, parse_clause("~a b"), closure=closure))
print("~a b relevant:", kl.is_relevant(cth, parse_clause("~a b"), closure=closure))

# Two separate conversations never mix: no provable clause spans
# components of the underlying undirected graph, while inside one
# component every pair of atoms shows up together somewhere.
split = parse_edges("a -> c\nc -> c2\nc2 -> c\nd -> b\nb -> b2\nb2 -> b\n")
print("\ncomponent discipline holds:", kl.component_claim_check(split))
for comp in kl.underlying_components(split):
    print("  component:", sorted(comp))
