"""Kernel and semikernel classification, enumeration, and combination."""

import pytest

import kernelogic as kl


def rand_graphs(count, sizes=(3, 4, 5, 6), probs=(0.15, 0.3, 0.5), base=4242):
    for i in range(count):
        spec = kl.RandomGraphSpec(
            n=sizes[i % len(sizes)], edge_prob=probs[i % len(probs)], seed=base + i
        )
        yield kl.random_digraph(spec)


def test_classify_subset_examples(our_graph, f1_graph):
    report = kl.classify_subset(our_graph, {"a"})
    assert report == kl.SubsetReport(
        independent=True, kernel=False, semikernel=True, inverse_closed=True, psk=True
    )
    other = kl.classify_subset(our_graph, {"a'"})
    assert other.semikernel and not other.inverse_closed and not other.psk
    assert kl.classify_subset(f1_graph, {"s"}).kernel
    with pytest.raises(kl.ValidationError):
        kl.classify_subset(our_graph, {"nope"})


def test_classify_agrees_with_oracle():
    for g in rand_graphs(30):
        sk = set(kl.brute_semikernels(g))
        kernels = set(kl.brute_kernels(g))
        for rank in range(1 << len(g.vertices)):
            s = frozenset(v for i, v in enumerate(g.vertices) if rank >> i & 1)
            report = kl.classify_subset(g, s)
            assert report.semikernel == (s in sk)
            assert report.kernel == (s in kernels)
            assert report.inverse_closed == kl.is_inverse_closed(g, s)
            assert report.psk == (report.semikernel and report.inverse_closed)
            if report.kernel:
                assert report.semikernel


def test_partition_of(our_graph, f1_graph):
    assert kl.partition_of(our_graph, {"a"}) == kl.Partition3(
        frozenset({"a"}), frozenset({"a'", "b"}), frozenset({"c", "d", "e"})
    )
    assert kl.partition_of(our_graph, set()) == kl.Partition3(
        frozenset(), frozenset(), frozenset(our_graph.vertices)
    )
    assert kl.partition_of(f1_graph, {"s"}) == kl.Partition3(
        frozenset({"s"}), frozenset({"f"}), frozenset()
    )
    with pytest.raises(kl.ValidationError, match="not independent"):
        kl.partition_of(our_graph, {"a", "a'"})


def test_enumerate_kernels(our_graph, loop_chain_graph):
    assert kl.enumerate_kernels(our_graph) == []
    assert kl.enumerate_kernels(loop_chain_graph) == [frozenset({"b"})]
    no_loop = kl.Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "b")])
    assert kl.enumerate_kernels(no_loop) == [frozenset({"b"}), frozenset({"a", "c"})]


def test_enumerate_semikernels(our_graph, f2_graph):
    assert kl.enumerate_semikernels(our_graph) == [
        frozenset(),
        frozenset({"a"}),
        frozenset({"a'"}),
    ]
    assert kl.enumerate_semikernels(f2_graph) == [frozenset(), frozenset({"s"})]
    assert kl.enumerate_semikernels(kl.Digraph([])) == [frozenset()]


def test_enumeration_cap():
    big = kl.Digraph([f"v{i:02d}" for i in range(21)])
    with pytest.raises(kl.ResourceLimitError):
        kl.enumerate_kernels(big)
    assert len(kl.enumerate_kernels(big, max_atoms=21)) == 1


def test_models_examples(our_graph, f1_graph, f2_graph):
    assert kl.models(our_graph) == [
        kl.Partition3(
            frozenset({"a"}), frozenset({"a'", "b"}), frozenset({"c", "d", "e"})
        )
    ]
    assert kl.models(f2_graph) == [
        kl.Partition3(frozenset(), frozenset(), frozenset({"f", "y", "s"}))
    ]
    assert kl.models(f1_graph) == [
        kl.Partition3(frozenset({"s"}), frozenset({"f"}), frozenset())
    ]


def test_models_never_empty():
    for g in rand_graphs(40):
        mods = kl.models(g)
        assert mods
        for m in mods:
            assert kl.classify_subset(g, m.true_set).psk


def test_models_share_boolean_domain():
    # Any two models settle exactly the same atoms.
    for g in rand_graphs(40, base=5050):
        domains = {m.boolean_domain() for m in kl.models(g)}
        assert len(domains) == 1


def test_semikernel_is_kernel_of_its_domain():
    for g in rand_graphs(30, base=6060):
        for s in kl.enumerate_semikernels(g):
            domain = kl.neighborhoods(g, s).in_closed
            sub = kl.induced_subgraph(g, domain)
            assert kl.classify_subset(sub, s).kernel


def test_partition_view_matches_set_view():
    # The two-condition pointwise reading of a semikernel partition.
    for g in rand_graphs(25, base=7070):
        for rank in range(1 << len(g.vertices)):
            s = frozenset(v for i, v in enumerate(g.vertices) if rank >> i & 1)
            if not kl.classify_subset(g, s).independent:
                continue
            p = kl.partition_of(g, s)
            ok_a = all(
                kl.neighborhoods(g, {x}).out <= p.false_set for x in p.true_set
            )
            ok_b = all(
                (x in p.false_set)
                == bool(kl.neighborhoods(g, {x}).out & p.true_set)
                for v in [None]
                for x in g.vertices
            )
            assert (ok_a and ok_b) == kl.classify_subset(g, s).semikernel


def test_sk_intersect_reach():
    path = kl.Digraph(["w", "x", "y", "z"], [("w", "x"), ("x", "y"), ("y", "z")])
    assert kl.sk_intersect_reach(path, {"x", "z"}, {"z"}) == {"z"}
    assert kl.sk_intersect_reach(path, {"x", "z"}, {"x", "z"}) == {"x", "z"}
    assert kl.sk_intersect_reach(path, {"x", "z"}, set()) == frozenset()
    with pytest.raises(kl.ValidationError, match="subset"):
        kl.sk_intersect_reach(path, {"z"}, {"x"})
    with pytest.raises(kl.ValidationError, match="not a semikernel"):
        kl.sk_intersect_reach(path, {"w", "x"}, {"x"})


def test_sk_union():
    two = kl.Digraph(["u", "v", "p", "q"], [("u", "v"), ("p", "q")])
    assert kl.sk_union(two, {"v"}, {"q"}) == {"v", "q"}
    path = kl.Digraph(["w", "x", "y", "z"], [("w", "x"), ("x", "y"), ("y", "z")])
    assert kl.sk_union(path, {"z"}, {"x", "z"}) == {"x", "z"}
    assert kl.sk_union(path, {"z"}, set()) == {"z"}
    cycle = kl.Digraph(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(kl.ValidationError, match="overlap"):
        kl.sk_union(cycle, {"a"}, {"b"})
    with pytest.raises(kl.ValidationError, match="not a semikernel"):
        kl.sk_union(path, {"x", "z"}, {"y"})


def test_combinators_random():
    from kernelogic.oracle import splitmix64

    stream = splitmix64(31337)
    produced = 0
    for g in rand_graphs(60, base=8080):
        sks = kl.enumerate_semikernels(g)
        for s in sks:
            members = sorted(s)
            t = frozenset(m for m in members if next(stream) % 2)
            assert kl.classify_subset(g, kl.sk_intersect_reach(g, s, t)).semikernel
            produced += 1
        for s in sks:
            for t in sks:
                if kl.neighborhoods(g, s).in_ & t:
                    continue
                assert kl.classify_subset(g, kl.sk_union(g, s, t)).semikernel
                produced += 1
    assert produced > 200


def test_extend_partition_examples(our_graph, f1_graph):
    alpha = kl.partition_of(our_graph, set())
    beta = kl.partition_of(our_graph, {"a"})
    assert kl.extend_partition(our_graph, alpha, beta) == beta

    # Overlap is checked before the partition shapes, so the rejected
    # pair reports the settled-domain problem.
    bad_beta = kl.partition_of(our_graph, {"a'"})
    with pytest.raises(kl.ValidationError, match="no overlap"):
        kl.extend_partition(our_graph, beta, bad_beta)
    with pytest.raises(kl.ValidationError, match="not an inverse-closed"):
        kl.extend_partition(our_graph, alpha, bad_beta)

    # Disjoint union of the F1 shape and a 3-cycle.
    g = kl.Digraph(
        ["f", "s", "x", "y", "z"],
        [("f", "f"), ("f", "s"), ("x", "y"), ("y", "z"), ("z", "x")],
    )
    alpha = kl.partition_of(g, set())
    beta = kl.partition_of(g, {"s"})
    assert kl.extend_partition(g, alpha, beta) == beta


def test_extend_partition_random():
    for g in rand_graphs(40, base=9090):
        psks = [
            kl.partition_of(g, s)
            for s in kl.enumerate_semikernels(g)
            if kl.classify_subset(g, s).psk
        ]
        for alpha in psks:
            for beta in psks:
                if not (beta.boolean_domain() - alpha.boolean_domain()):
                    continue
                gamma = kl.extend_partition(g, alpha, beta)
                assert kl.classify_subset(g, gamma.true_set).psk
                assert alpha.boolean_domain() < gamma.boolean_domain()
