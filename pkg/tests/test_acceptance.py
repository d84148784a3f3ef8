"""Acceptance gate: twelve criteria, one test (= one pass/fail line) each.

Run with `pytest -v tests/test_acceptance.py` to see the per-criterion
verdict lines.
"""

import itertools
import math
from fractions import Fraction

import pytest

import helpers
from hedgegraphs import (
    HedgeMatroid,
    approx_connectivity,
    base_sampling_experiment,
    connectivity_sampling_experiment,
    cut_value,
    enumerate_quotients,
    exact_connectivity,
    exact_kstar,
    exact_pc,
    exact_wpc,
    hedgegraph_min_ratio,
    min_cover_number,
    minimize_submodular,
    orient,
    pack_bases,
    partition_connectivity,
    sparsify_partitions,
    span,
    verify_orientation,
    verify_sparsifier,
    SubmodularOracle,
)
from hedgegraphs.matroid import trimming_is_spanning_tree
from hedgegraphs.model import internal_hedges, partition_boundary, partition_capacity
from hedgegraphs.oracle import set_partitions


def _done(n, name):
    print(f"ACCEPTANCE {n:02d} {name}: PASS")


def test_criterion_01_fig2_cut_function_not_submodular():
    G = helpers.load("fig2")
    d = lambda S: cut_value(G, [G.vertex_index(v) for v in S])
    assert d({"A", "B"}) == 1
    assert d({"A", "C"}) == 1
    assert d({"A"}) == 2
    assert d({"A", "B", "C"}) == 2
    assert d({"A", "B"}) + d({"A", "C"}) < d({"A"}) + d({"A", "B", "C"})
    _done(1, "cut function submodularity failure fixture")


def test_criterion_02_intro_trio_values():
    G1 = helpers.one_spanning_hedge(5)
    assert (
        exact_pc(G1)[0],
        exact_wpc(G1)[0],
        exact_connectivity(G1)[0],
    ) == (0, 1, 1)
    for n in range(4, 9):
        G2 = helpers.parallel_spanning_hedges(n, n - 1)
        assert (
            exact_pc(G2)[0],
            exact_wpc(G2)[0],
            exact_connectivity(G2)[0],
        ) == (1, n - 1, n - 1)
    C3 = helpers.load("c3")
    assert (
        exact_pc(C3)[0],
        exact_wpc(C3)[0],
        exact_connectivity(C3)[0],
    ) == (1, 1, 2)
    _done(2, "intro trio (PC, WPC, lambda)")


def test_criterion_03_appendix_b_separation():
    G = helpers.load("appendixB")
    wpc = exact_wpc(G)[0]
    ks = exact_kstar(G)[0]
    assert wpc == 2 and ks == 3 and wpc < ks
    _done(3, "WPC < k* separation fixture")


def test_criterion_04_pc_three_way_agreement(connected_corpus):
    assert len(connected_corpus) >= 300
    for G in connected_corpus:
        res = hedgegraph_min_ratio(G, weights=[1] * G.m)
        newton = math.floor(res.value)
        oracle_pc = exact_pc(G)[0]
        packing = 0
        while pack_bases(G, packing + 1).feasible:
            packing += 1
        assert newton == packing == oracle_pc
    _done(4, "PC three-way agreement on 300 instances")


def test_criterion_05_packing_covering_constructive(connected_corpus):
    for G in connected_corpus:
        pc = exact_pc(G)[0]
        if pc >= 1:
            res = pack_bases(G, pc)
            assert res.feasible
            union = set()
            for c, t in zip(res.classes, res.trimmings):
                assert not union & c
                union |= c
                assert set(t) == set(c)
                assert trimming_is_spanning_tree(G, t)
        bad = pack_bases(G, pc + 1)
        assert not bad.feasible
        P = bad.certificate
        assert len(partition_boundary(G, P)) < (pc + 1) * (len(P) - 1)

        k, cover, violation = min_cover_number(G)
        best = 1
        for P in set_partitions(G.n):
            room = G.n - len(P)
            inner = len(internal_hedges(G, P))
            if room == 0:
                assert inner == 0
                continue
            best = max(best, math.ceil(inner / room))
        assert k == best
        if k > 1:
            assert violation is not None
            assert len(internal_hedges(G, violation)) > (k - 1) * (
                G.n - len(violation)
            )
    _done(5, "base packing / acyclic covering constructive checks")


def test_criterion_06_orientations(connected_corpus):
    G4 = helpers.load("fig4")
    O, cert = orient(G4, 1, 0)
    assert cert is None
    ok, _ = verify_orientation(G4, O, 1, 0)
    assert ok
    ok, U = verify_orientation(G4, O, 2, 0)
    names = tuple(sorted(G4.vertex_names[v] for v in U))
    assert not ok and names in {("A", "B", "D"), ("A", "C", "D")}

    for G in connected_corpus[:120]:
        pc = exact_pc(G)[0]
        for k in range(1, min(pc, 2) + 1):
            for root in range(G.n):
                O, cert = orient(G, k, root)
                assert cert is None
                ok, _ = verify_orientation(G, O, k, root)
                assert ok
    _done(6, "rooted k-out orientations valid for every root")


def test_criterion_07_sandwich_inequalities(connected_corpus):
    for G in connected_corpus:
        lam = exact_connectivity(G)[0]
        wpc = exact_wpc(G)[0]
        ks = exact_kstar(G)[0]
        pc = exact_pc(G)[0]
        assert lam // 2 <= wpc <= ks <= lam
        assert pc <= wpc
        lo, hi = approx_connectivity(G).value
        assert lo <= lam <= hi
    _done(7, "sandwich inequalities and approximation band")


def test_criterion_08_sfm_min_norm_matches_exhaustive():
    checked = 0
    seed = 0
    while checked < 200:
        G = helpers.random_hedgegraph(seed, n_max=8, m_max=14)
        seed += 1
        for k in (1, 2):
            obj = lambda S, k=k: k * G.f(frozenset(S)) - len(S)
            a = minimize_submodular(SubmodularOracle(G.m, obj), method="exhaustive")
            b = minimize_submodular(SubmodularOracle(G.m, obj), method="min-norm")
            assert a.value == b.value == obj(b.minimizer)
            checked += 1
    assert checked >= 200
    _done(8, "min-norm SFM equals exhaustive on 200 objectives")


def test_criterion_09_sampling_experiments():
    G = helpers.cycle_graph(8, copies=75)
    rep = connectivity_sampling_experiment(G, 2000, seed=0)
    assert rep.parameters["lambda"] >= 150
    assert rep.parameters["p"] < 1
    threshold = 1 - 2 / 8 - 3 * math.sqrt(0.25 / 2000)
    assert rep.empirical_probability >= threshold

    H = helpers.parallel_spanning_hedges(3, 10)
    rep2 = base_sampling_experiment(H, 2000, seed=0)
    fE = rep2.parameters["f_E"]
    assert rep2.parameters["p"] < 1
    assert rep2.empirical_probability >= 1 - 1 / fE - 3 * math.sqrt(0.25 / 2000)
    _done(9, "hedge sampling keeps connectivity / spanning")


def test_criterion_10_sparsifier_quality():
    eps = 0.5
    seeds = 50
    for name in ["fig1", "appendixB", "c3"]:
        G = helpers.load(name)
        w = [h.weight for h in G.hedges]
        cap = math.ceil(50 * G.n * math.log(G.n) / eps**2)
        passes = 0
        P = G.components(frozenset())  # singleton partition: full boundary
        total = Fraction(0)
        var = 0.0
        for seed in range(seeds):
            res = sparsify_partitions(G, epsilon=eps, seed=seed)
            assert len(res.support) <= cap
            ok, _, _ = verify_sparsifier(G, w, res.weights, eps)
            passes += ok
            total += partition_capacity(G, P, res.weights)
            var += sum(
                float(w[e]) ** 2 * (1 - float(p)) / float(p)
                for e, p in enumerate(res.probabilities)
                if p > 0
            )
        assert passes >= 0.9 * seeds
        true_cap = partition_capacity(G, P, w)
        sigma = math.sqrt(var) / seeds
        assert abs(float(total) / seeds - float(true_cap)) <= 3 * sigma + 1e-9
    _done(10, "partition sparsifier accuracy, support, unbiasedness")


def test_criterion_11_quotients_equal_span_complements(connected_corpus, mixed_corpus):
    fixtures = [helpers.load(n) for n in ["fig1", "fig2", "fig3", "fig4", "c3"]]
    for G in fixtures + mixed_corpus + connected_corpus[:60]:
        assert G.m <= 10
        by_def = set()
        for r in range(G.m + 1):
            for S in itertools.combinations(range(G.m), r):
                by_def.add(G.all_hedges - span(G, frozenset(S)))
        assert enumerate_quotients(G) == frozenset(by_def)
    _done(11, "quotient family equals span complements")


def test_criterion_12_matroid_axioms_exhaustive():
    family = [
        helpers.random_hedgegraph(seed, n_max=5, m_max=6) for seed in range(40)
    ] + [helpers.load("fig3"), helpers.load("fig4"), helpers.load("c3")]
    for G in family:
        assert G.n <= 5 and G.m <= 6
        mat = HedgeMatroid(G)
        ind = {
            frozenset(A)
            for r in range(G.m + 1)
            for A in itertools.combinations(range(G.m), r)
            if mat.is_independent(frozenset(A))
        }
        for A in ind:
            for x in A:
                assert A - {x} in ind
        for A in ind:
            for B in ind:
                if len(A) < len(B):
                    assert any(A | {x} in ind for x in B - A)
    _done(12, "matroid axioms hold exhaustively")
