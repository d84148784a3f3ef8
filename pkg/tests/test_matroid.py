"""Trimming matroid: independence, rank, packing, covering."""

import itertools

import pytest

import helpers
from hedgegraphs import (
    HedgeMatroid,
    InfeasibleError,
    cover_acyclic_trimmable,
    exact_pc,
    exact_rank,
    is_independent,
    min_cover_number,
    pack_bases,
    rank,
    spanning_tree_trimming,
)
from hedgegraphs.matroid import (
    trimming_is_forest,
    trimming_is_spanning_tree,
    validate_trimming,
)
from hedgegraphs.model import internal_hedges, partition_boundary
from hedgegraphs.oracle import set_partitions


def test_fig3_independence_with_witness():
    G = helpers.load("fig3")
    ok, witness = is_independent(G, {0, 1, 2, 3})
    assert ok
    assert set(witness) == {0, 1, 2, 3}
    validate_trimming(G, witness)
    assert trimming_is_forest(G, witness)


def test_fig3_dependent_set_with_certificate():
    G = helpers.load("fig3")
    ok, cert = is_independent(G, {0, 1, 2, 4})
    assert not ok
    assert cert <= {0, 1, 2, 4}
    assert len(cert) > G.f(cert)


def test_empty_set_is_independent():
    G = helpers.load("fig3")
    ok, witness = is_independent(G, frozenset())
    assert ok and witness == {}


def test_rank_matches_exhaustive_formula():
    for seed in range(30):
        G = helpers.random_hedgegraph(seed, n_max=6, m_max=6)
        mat = HedgeMatroid(G)
        for r in range(G.m + 1):
            for A in itertools.combinations(range(G.m), r):
                A = frozenset(A)
                assert mat.rank(A) == exact_rank(G, A)[0]


def test_rank_full_iff_one_partition_connected():
    for seed in range(40):
        G = helpers.random_hedgegraph(seed, connected=True)
        pc = exact_pc(G)[0]
        assert (rank(G, range(G.m)) == G.n - 1) == (pc >= 1)


def test_spanning_tree_trimming_fixtures():
    G = helpers.load("fig4")
    t, cert = spanning_tree_trimming(G)
    assert cert is None
    assert trimming_is_spanning_tree(G, t)
    validate_trimming(G, t)
    # path graphs trim to themselves
    P = helpers.path_graph(5)
    t, cert = spanning_tree_trimming(P)
    assert cert is None and len(t) == 4
    for e, te in t.items():
        assert te.pair == (e, e + 1)


def test_spanning_tree_certificate_for_single_hedge():
    G = helpers.one_spanning_hedge(5)
    t, cert = spanning_tree_trimming(G)
    assert t is None
    assert len(partition_boundary(G, cert)) < len(cert) - 1


def test_pack_bases_g2_and_c3():
    G2 = helpers.parallel_spanning_hedges(4, 3)
    res = pack_bases(G2, 1)
    assert res.feasible and len(res.classes) == 1
    assert trimming_is_spanning_tree(G2, res.trimmings[0])
    res2 = pack_bases(G2, 2)
    assert not res2.feasible
    P = res2.certificate
    assert len(partition_boundary(G2, P)) < 2 * (len(P) - 1)

    C3 = helpers.load("c3")
    res = pack_bases(C3, 1)
    assert res.feasible and len(res.classes[0]) == 2
    assert not pack_bases(C3, 2).feasible


def test_pack_bases_disjointness_and_leftover():
    G = helpers.cycle_graph(4, copies=2)  # PC = 2
    res = pack_bases(G, 2)
    assert res.feasible
    a, b = res.classes
    assert not a & b
    assert a | b | res.leftover == G.all_hedges
    for c, t in zip(res.classes, res.trimmings):
        assert set(t) == set(c)
        assert trimming_is_spanning_tree(G, t)


def test_pack_bases_input_validation():
    G = helpers.load("c3")
    with pytest.raises(ValueError):
        pack_bases(G, 0)


def test_cover_fig3_minus_e5():
    import hedgegraphs as hg

    G3 = helpers.load("fig3")
    G = hg.Hedgegraph(G3.vertex_names, G3.hedges[:4])
    res = cover_acyclic_trimmable(G, 1)
    assert res.feasible and len(res.classes) == 1
    assert trimming_is_forest(G, res.trimmings[0])


def test_cover_violation_certificate():
    G = helpers.load("fig3")  # rank 4 < m = 5, so one class cannot cover
    res = cover_acyclic_trimmable(G, 1)
    assert not res.feasible
    P = res.violation
    assert len(internal_hedges(G, P)) > 1 * (G.n - len(P))


def test_min_cover_number_examples():
    G2 = helpers.parallel_spanning_hedges(6, 5)
    k, cover, violation = min_cover_number(G2)
    assert k == 1 and violation is None
    assert len(cover.classes) == 1

    import hedgegraphs as hg

    m = 4
    Gpar = hg.Hedgegraph(
        ["u", "v"], [hg.Hedge(f"e{i}", ((0, 1),)) for i in range(m)]
    )
    k, cover, violation = min_cover_number(Gpar)
    assert k == m
    assert all(len(c) == 1 for c in cover.classes)
    assert violation is not None


def test_min_cover_matches_partition_bound():
    import math

    for seed in range(40):
        G = helpers.random_hedgegraph(seed, n_max=6, m_max=6)
        k, cover, violation = min_cover_number(G)
        best = 1
        for P in set_partitions(G.n):
            inner = len(internal_hedges(G, P))
            room = G.n - len(P)
            if room == 0:
                assert inner == 0  # generator never emits singleton-only hedges
                continue
            best = max(best, math.ceil(inner / room))
        assert k == best
        union = set()
        for c in cover.classes:
            assert not union & c
            union |= c
        assert union == set(range(G.m))


def test_min_cover_infeasible_for_singleton_hedge():
    import hedgegraphs as hg

    with pytest.warns(UserWarning):
        G = hg.parse_hedgegraph("vertices A B\nhedge h : A ; B\nhedge g : A B\n")
    with pytest.raises(InfeasibleError) as exc:
        min_cover_number(G)
    assert exc.value.certificate == frozenset({0})


def test_matroid_axioms_exhaustive_small():
    for seed in range(25):
        G = helpers.random_hedgegraph(seed, n_max=5, m_max=6)
        mat = HedgeMatroid(G)
        independent = [
            frozenset(A)
            for r in range(G.m + 1)
            for A in itertools.combinations(range(G.m), r)
            if mat.is_independent(frozenset(A))
        ]
        ind = set(independent)
        for A in independent:
            for x in A:
                assert A - {x} in ind  # hereditary
        for A in independent:
            for B in independent:
                if len(A) < len(B):
                    assert any(A | {x} in ind for x in B - A)  # augmentation
