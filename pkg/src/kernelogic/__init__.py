"""kernelogic: paradox-tolerant propositional logic on digraphs.

Theories in graph normal form are digraphs; kernels of the digraph are
the classical models. When no kernel exists the theory is paradoxical,
and the inverse-closed semikernels with maximal settled domain step in
as models that keep the consistent part of the discourse meaningful.
Direct resolution (no refutation, no weakening) decides entailment for
this semantics, and brute-force oracles double-check every engine path
at desk scale.
"""

from .clauses import (
    ClausalTheory,
    Clause,
    Literal,
    clausal_theory,
    clause_sort_key,
    complement_units,
    remove_atoms,
)
from .errors import (
    KernelogicError,
    ParseError,
    ResourceLimitError,
    ValidationError,
)
from .graphs import (
    Digraph,
    GnfTheory,
    Neighborhood,
    Universe,
    complete_loose_atoms,
    graph_to_theory,
    induced_subgraph,
    is_inverse_closed,
    is_valid_atom,
    neighborhoods,
    reachable,
    theory_to_graph,
    underlying_components,
)
from .kernels import (
    Partition2,
    Partition3,
    SubsetReport,
    classify_subset,
    enumerate_kernels,
    enumerate_semikernels,
    extend_partition,
    models,
    partition_of,
    sk_intersect_reach,
    sk_union,
)
from .oracle import (
    RandomGraphSpec,
    brute_kernels,
    brute_models,
    brute_semikernels,
    random_digraph,
    splitmix64,
    truth_table_models,
)
from .resolution import (
    Closure,
    Proof,
    ProofStep,
    SubdiscourseReport,
    closure_with_assumptions,
    consistent_subtheory,
    core_models,
    derives,
    entails_para,
    paradoxical_atoms,
    proof_of,
    provable_weakened,
    saturate,
    witness_subclause,
)
from .semantics import (
    EntailmentVerdict,
    classical_entails,
    component_claim_check,
    entails_semantic,
    is_relevant,
    min_clauses,
    satisfies,
)

__version__ = "0.1.0"

__all__ = [
    "ClausalTheory",
    "Clause",
    "Closure",
    "Digraph",
    "EntailmentVerdict",
    "GnfTheory",
    "KernelogicError",
    "Literal",
    "Neighborhood",
    "ParseError",
    "Partition2",
    "Partition3",
    "Proof",
    "ProofStep",
    "RandomGraphSpec",
    "ResourceLimitError",
    "SubdiscourseReport",
    "SubsetReport",
    "Universe",
    "ValidationError",
    "brute_kernels",
    "brute_models",
    "brute_semikernels",
    "classical_entails",
    "classify_subset",
    "clausal_theory",
    "clause_sort_key",
    "closure_with_assumptions",
    "complement_units",
    "complete_loose_atoms",
    "component_claim_check",
    "consistent_subtheory",
    "core_models",
    "derives",
    "entails_para",
    "entails_semantic",
    "enumerate_kernels",
    "enumerate_semikernels",
    "extend_partition",
    "graph_to_theory",
    "induced_subgraph",
    "is_inverse_closed",
    "is_relevant",
    "is_valid_atom",
    "min_clauses",
    "models",
    "neighborhoods",
    "paradoxical_atoms",
    "partition_of",
    "proof_of",
    "provable_weakened",
    "random_digraph",
    "reachable",
    "remove_atoms",
    "satisfies",
    "saturate",
    "sk_intersect_reach",
    "sk_union",
    "splitmix64",
    "theory_to_graph",
    "truth_table_models",
    "underlying_components",
    "witness_subclause",
]
