"""Walk the six-statement liar discourse from text to models.

The discourse: (a) "this statement is not false", (b) "the previous and
the next statement are false", then a three-cycle of statements (c),
(d), (e) each calling the next false. No way of assigning plain true
and false works for the whole thing, yet most of it is perfectly
meaningful. This script shows how the toolkit isolates the damage.

Run:  python demos/01_liar_discourse.py
"""

from pathlib import Path

import kernelogic as kl
from kernelogic.io_text import parse_theory

text = (Path(__file__).parent / "data" / "delta.gnf").read_text()
theory = parse_theory(text)
graph = kl.theory_to_graph(theory)

print("Atoms:", ", ".join(graph.vertices))
print("Edges (who negates whom):")
for src, dst in sorted(graph.edges):
    print(f"  {src} -> {dst}")

# No kernel: the discourse has no classical model.
print("\nKernels:", kl.enumerate_kernels(graph) or "none, the discourse is paradoxical")

# Semikernels still exist, and one of them survives the closure test.
for s in kl.enumerate_semikernels(graph):
    report = kl.classify_subset(graph, s)
    print(f"semikernel {sorted(s)}: inverse closed = {report.inverse_closed}")

# The models: inverse-closed semikernels with a maximal settled domain.
for m in kl.models(graph):
    print(
        "\nmodel:",
        f"true={sorted(m.true_set)} false={sorted(m.false_set)}"
        f" paradox={sorted(m.paradox_set)}",
    )

# The proof side reaches the same split without looking at models.
cth = kl.clausal_theory(graph)
closure = kl.saturate(cth)
print("\nClause form has", len(cth.clauses), "clauses; closure has", len(closure), "clauses")
print("Provably paradoxical atoms:", sorted(kl.paradoxical_atoms(closure)))

report = kl.consistent_subtheory(cth, graph, closure=closure)
print("Healthy atoms:", sorted(report.healthy_atoms))
print("Border (healthy atoms leaning on the paradox):", sorted(report.border))
print("Consistent subtheory:")
for c in report.theory:
    print("  ", c)

print("\nKernel models of the consistent core (border must stay false):")
for true_set, false_set in kl.core_models(report, graph):
    print(f"  true={sorted(true_set)} false={sorted(false_set)}")
