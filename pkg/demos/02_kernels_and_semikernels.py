"""Why an arbitrary semikernel is not yet a model.

Two almost identical discourses separate the ideas. F1 is "this
statement is false and the sun is not a star": consistent, the
statement is just false. F2 is "this statement is false and the sun is
a star": paradoxical, and the paradox swallows the innocent-looking
truth it depends on.

Run:  python demos/02_kernels_and_semikernels.py
"""

from pathlib import Path

import kernelogic as kl
from kernelogic.io_text import parse_theory

data = Path(__file__).parent / "data"

f1 = kl.theory_to_graph(parse_theory((data / "f1.gnf").read_text()))
f2 = kl.theory_to_graph(parse_theory((data / "f2.gnf").read_text()))

print("F1 kernels:", [sorted(k) for k in kl.enumerate_kernels(f1)])
print("F1 models:", kl.models(f1))

print("\nF2 kernels:", kl.enumerate_kernels(f2))
print("F2 semikernels:", [sorted(s) for s in kl.enumerate_semikernels(f2)])

# The semikernel {s} looks tempting: the sun IS a star. But accepting
# it pins y false and leaves the loop at f unresolvable, so the choice
# of {s} is itself part of the inconsistency. The inverse-closure test
# rejects it.
print("\n{s} inverse closed in F2?", kl.is_inverse_closed(f2, {"s"}))
print("F2 models:", kl.models(f2))

# Every model of every graph settles the same atoms (here: none of
# them), so the paradoxical region is a fact about the discourse, not
# about a lucky pick of model.
for m in kl.models(f2):
    print("settled atoms:", sorted(m.boolean_domain()), "| paradox:", sorted(m.paradox_set))

# Combining partial views: two inverse-closed semikernel partitions
# that disagree on unsettled ground merge into a strictly larger one.
g = kl.Digraph(
    ["f", "s", "x", "y", "z"],
    [("f", "f"), ("f", "s"), ("x", "y"), ("y", "z"), ("z", "x")],
)
alpha = kl.partition_of(g, set())
beta = kl.partition_of(g, {"s"})
gamma = kl.extend_partition(g, alpha, beta)
print("\nextended empty partition by {s}:", gamma)
