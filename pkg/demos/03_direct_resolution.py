"""Direct resolution: prove things, never explode.

Classical refutation asks "does denying C lead to the empty clause?",
which makes every clause provable the moment the theory is
inconsistent. Here we saturate the theory itself and ask for exact
membership, then allow only weakening steps that keep a healthy reason
around. A contradiction about a then proves nothing about b.

Run:  python demos/03_direct_resolution.py
"""

from pathlib import Path

import kernelogic as kl
from kernelogic.io_text import parse_clause, parse_clause_set, parse_theory

data = Path(__file__).parent / "data"

theory = parse_theory((data / "delta.gnf").read_text())
graph = kl.theory_to_graph(theory)
cth = kl.clausal_theory(graph)
closure = kl.saturate(cth)

print("Unit clauses the discourse proves:")
for c in sorted(closure.derived, key=kl.clause_sort_key):
    if len(c) == 1:
        print("  ", c)

print("\nA proof that b is false:")
print(kl.proof_of(closure, parse_clause("~b")).to_text())

# The empty clause is derivable (the discourse is paradoxical), but it
# does not leak: b stays unprovable.
print("\nempty clause derivable:", kl.derives(closure, kl.Clause()))
print("b derivable:", kl.derives(closure, parse_clause("b")))

# Lewis's shortcut from a contradiction to an arbitrary b needs one
# unrestricted weakening step; restricted weakening refuses it.
lewis = parse_clause_set((data / "lewis.clauses").read_text())
print("\ncontradiction about a, innocent b:")
for mode in ("cw", "awbw"):
    verdict = kl.provable_weakened(lewis, parse_clause("b"), mode)
    print(f"  prove b with {mode!r} weakening:", verdict)

# Assumptions enter as denial units, which gives a deduction theorem
# with a relevance twist: the implication is provable exactly when the
# assumption was actually needed.
base = kl.ClausalTheory(frozenset({parse_clause("~x y")}), ("x", "y"))
with_x = kl.closure_with_assumptions(base, parse_clause("~x"))
print("\nfrom ~x y alone, y provable:", kl.derives(kl.saturate(base), parse_clause("y")))
print("assuming x, y provable:", kl.derives(with_x, parse_clause("y")))
print("therefore ~x y provable:", kl.derives(kl.saturate(base), parse_clause("~x y")))
