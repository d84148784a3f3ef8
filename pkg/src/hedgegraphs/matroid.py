"""The trimming matroid of a hedgegraph: independence, rank, packing, covering.

A hedge set is independent when each of its hedges can be replaced by a
single vertex pair (drawn from one of its hyperedges) so that the chosen
pairs form a forest. Independence and rank run matroid intersection between
the graphic matroid on candidate pairs and the one-pair-per-hedge partition
matroid; packing and covering run the matroid partitioning algorithm on top
of that oracle. Certificates come from submodular minimization.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import InfeasibleError
from .model import Hedgegraph, Partition
from .sfm import SubmodularOracle, minimize_submodular

Trimming = dict  # hedge index -> TrimElement


@dataclass(frozen=True)
class TrimElement:
    hedge: int
    hyperedge: int
    pair: tuple[int, int]


@dataclass(frozen=True)
class PackingResult:
    classes: Optional[tuple[frozenset, ...]]
    trimmings: Optional[tuple[Trimming, ...]]
    leftover: frozenset
    certificate: Optional[Partition] = None

    @property
    def feasible(self) -> bool:
        return self.certificate is None


@dataclass(frozen=True)
class CoverResult:
    classes: Optional[tuple[frozenset, ...]]
    trimmings: Optional[tuple[Trimming, ...]]
    violation: Optional[Partition] = None

    @property
    def feasible(self) -> bool:
        return self.violation is None


def _is_forest(n: int, pairs) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def trimming_is_forest(G: Hedgegraph, t: Trimming) -> bool:
    return _is_forest(G.n, [te.pair for te in t.values()])


def trimming_is_spanning_tree(G: Hedgegraph, t: Trimming) -> bool:
    return len(t) == G.n - 1 and trimming_is_forest(G, t)


def validate_trimming(G: Hedgegraph, t: Trimming) -> None:
    """Structural check: each pair comes from one hyperedge of its hedge."""
    for e, te in t.items():
        if te.hedge != e:
            raise ValueError("trimming keyed by a different hedge")
        hy = G.hedges[e].hyperedges[te.hyperedge]
        u, v = te.pair
        if u == v or u not in hy or v not in hy:
            raise ValueError(f"trim pair {te.pair} not inside hyperedge {hy}")


class HedgeMatroid:
    """Independence oracle with memoized verdicts and witness trimmings."""

    def __init__(self, G: Hedgegraph):
        self.G = G
        self._trims: dict[int, list[TrimElement]] = {}
        self._indep_memo: dict[frozenset, bool] = {}

    def trims(self, e: int) -> list[TrimElement]:
        if e not in self._trims:
            out = []
            for hi, hy in enumerate(self.G.hedges[e].hyperedges):
                for a in range(len(hy)):
                    for b in range(a + 1, len(hy)):
                        out.append(TrimElement(e, hi, (hy[a], hy[b])))
            self._trims[e] = out
        return self._trims[e]

    # -- matroid intersection ------------------------------------------

    def _augmenting_path(self, U: list[TrimElement], K: set[int]):
        n = self.G.n
        used_hedges = {U[i].hedge for i in K}
        k_pairs = [U[i].pair for i in K]
        x1 = [y for y in range(len(U)) if y not in K and _is_forest(n, k_pairs + [U[y].pair])]
        frontier = deque(x1)
        parent: dict[int, Optional[int]] = {y: None for y in x1}
        while frontier:
            node = frontier.popleft()
            if node not in K:
                if U[node].hedge not in used_hedges:
                    path = [node]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path
                for x in sorted(K):
                    if U[x].hedge == U[node].hedge and x not in parent:
                        parent[x] = node
                        frontier.append(x)
            else:
                swapped = [U[i].pair for i in K if i != node]
                for y in range(len(U)):
                    if y in K or y in parent:
                        continue
                    if _is_forest(n, swapped + [U[y].pair]):
                        parent[y] = node
                        frontier.append(y)
        return None

    def rank_with_witness(self, A) -> tuple[int, list[TrimElement]]:
        """Maximum common independent set of the graphic and partition matroids
        over all candidate trims of A, found by augmenting paths."""
        A = self.G.check_hedge_set(A)
        U = [te for e in sorted(A) for te in self.trims(e)]
        K: set[int] = set()
        while True:
            path = self._augmenting_path(U, K)
            if path is None:
                break
            K ^= set(path)
        witness = [U[i] for i in sorted(K)]
        assert _is_forest(self.G.n, [te.pair for te in witness])
        assert len({te.hedge for te in witness}) == len(witness)
        return len(K), witness

    def rank(self, A) -> int:
        return self.rank_with_witness(A)[0]

    def is_independent(self, A) -> bool:
        """Fast verdict via the rank identity: A is independent iff
        f(B) >= |B| for every B inside A. Witnesses still come from the
        augmenting-path route in rank_with_witness."""
        A = frozenset(A)
        if A not in self._indep_memo:
            if len(A) <= 16:
                elems = sorted(A)
                verdict = True
                for mask in range(1, 1 << len(elems)):
                    B = frozenset(
                        elems[i] for i in range(len(elems)) if mask >> i & 1
                    )
                    if self.G.f(B) < len(B):
                        verdict = False
                        break
            else:
                verdict = self.rank(A) == len(A)
            self._indep_memo[A] = verdict
        return self._indep_memo[A]

    def independence(self, A):
        """(True, witness Trimming) or (False, certificate B with |B| > f(B))."""
        A = self.G.check_hedge_set(A)
        r, witness = self.rank_with_witness(A)
        if r == len(A):
            return True, {te.hedge: te for te in witness}
        return False, self._dependence_certificate(A)

    def _dependence_certificate(self, A: frozenset) -> frozenset:
        ground = sorted(A)

        def obj(S):
            hedges = frozenset(ground[i] for i in S)
            return self.G.f(hedges) - len(hedges)

        res = minimize_submodular(SubmodularOracle(len(ground), obj))
        assert res.value < 0
        return frozenset(ground[i] for i in res.minimizer)


def is_independent(G: Hedgegraph, A):
    return HedgeMatroid(G).independence(A)


def rank(G: Hedgegraph, A) -> int:
    return HedgeMatroid(G).rank(A)


# ---------------------------------------------------------------------------
# matroid partitioning (union of k copies of the trimming matroid)


def _try_insert(mat: HedgeMatroid, classes: list[set[int]], e: int) -> bool:
    """Place hedge e into some class, shifting elements along a shortest
    exchange path (BFS) if needed. Returns False when e is spanned by the
    union of the classes.

    parent[y] = (x, j) records that y sits in class j and swapping y out for
    x keeps class j independent. Rehoming y frees the slot for x.
    """
    parent: dict[int, tuple[Optional[int], int]] = {e: (None, -1)}
    frontier = deque([e])
    while frontier:
        x = frontier.popleft()
        for j, Ij in enumerate(classes):
            if x in Ij:
                continue
            if mat.is_independent(frozenset(Ij) | {x}):
                classes[j].add(x)
                node = x
                while True:
                    prev, pcls = parent[node]
                    if prev is None:
                        break
                    classes[pcls].discard(node)
                    classes[pcls].add(prev)
                    node = prev
                for Ic in classes:
                    assert mat.is_independent(frozenset(Ic))
                return True
            for y in sorted(Ij):
                if y in parent:
                    continue
                if mat.is_independent((frozenset(Ij) - {y}) | {x}):
                    parent[y] = (x, j)
                    frontier.append(y)
    return False


def _min_k_deficit(G: Hedgegraph, k: int):
    """Minimize k*f(B) - |B| over hedge sets B; drives both feasibility tests."""

    def obj(B):
        return k * G.f(frozenset(B)) - len(B)

    res = minimize_submodular(SubmodularOracle(G.m, obj))
    return res.value, res.minimizer


def _build_classes(G: Hedgegraph, k: int, stop_total: Optional[int] = None):
    """Greedy matroid partitioning over k classes; returns (classes, leftover)."""
    mat = HedgeMatroid(G)
    classes: list[set[int]] = [set() for _ in range(k)]
    leftover: set[int] = set()
    placed = 0
    for e in range(G.m):
        if stop_total is not None and placed == stop_total:
            leftover.add(e)
            continue
        if _try_insert(mat, classes, e):
            placed += 1
        else:
            leftover.add(e)
    witnesses = []
    for Ij in classes:
        ok, t = mat.independence(frozenset(Ij))
        assert ok
        witnesses.append(t)
    return classes, witnesses, leftover


def pack_bases(G: Hedgegraph, k: int) -> PackingResult:
    """k disjoint hedge sets each trimming to a spanning tree, or a partition
    P with |boundary(P)| < k(|P|-1) proving none exist."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if G.n < 2:
        raise ValueError("base packing needs at least two vertices")
    deficit, B = _min_k_deficit(G, k)
    # max total packable into k classes = m + min_B (k*f(B) - |B|)
    if G.m + deficit < k * (G.n - 1):
        cert = G.components(B)
        assert len(cert) >= 2
        return PackingResult(None, None, frozenset(), cert)
    classes, witnesses, leftover = _build_classes(G, k, stop_total=k * (G.n - 1))
    for Ij, t in zip(classes, witnesses):
        assert len(Ij) == G.n - 1 and trimming_is_spanning_tree(G, t)
    return PackingResult(
        tuple(frozenset(Ij) for Ij in classes), tuple(witnesses), frozenset(leftover)
    )


def spanning_tree_trimming(G: Hedgegraph):
    """A spanning-tree trimming, or a certificate partition when PC = 0.

    Returns (Trimming, None) on success and (None, Partition) otherwise.
    """
    res = pack_bases(G, 1)
    if res.feasible:
        return res.trimmings[0], None
    return None, res.certificate


def cover_acyclic_trimmable(G: Hedgegraph, k: int) -> CoverResult:
    """Partition E into at most k independent sets, or return a partition P
    with more internal hedges than k(|V| - |P|)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    deficit, B = _min_k_deficit(G, k)
    if deficit < 0:
        violation = G.components(B)
        return CoverResult(None, None, violation)
    classes, witnesses, leftover = _build_classes(G, k)
    assert not leftover
    kept = [(frozenset(Ij), t) for Ij, t in zip(classes, witnesses) if Ij]
    return CoverResult(
        tuple(c for c, _ in kept), tuple(t for _, t in kept), None
    )


def min_cover_number(G: Hedgegraph) -> tuple[int, CoverResult, Optional[Partition]]:
    """Least k admitting a cover, with the cover and a violating partition
    for k-1 (None when k = 1). Raises InfeasibleError when no k works."""
    if G.m == 0:
        return 0, CoverResult((), (), None), None
    for e in range(G.m):
        if G.f(frozenset([e])) == 0:
            raise InfeasibleError(
                "a hedge with only singleton hyperedges is never acyclic-trimmable",
                certificate=frozenset([e]),
            )
    lo, hi = 1, G.m
    while lo < hi:
        mid = (lo + hi) // 2
        deficit, _ = _min_k_deficit(G, mid)
        if deficit >= 0:
            hi = mid
        else:
            lo = mid + 1
    cover = cover_acyclic_trimmable(G, lo)
    assert cover.feasible
    violation = None
    if lo > 1:
        prev = cover_acyclic_trimmable(G, lo - 1)
        assert not prev.feasible
        violation = prev.violation
    return lo, cover, violation
