"""Connectivity measures: partition connectivity, weak partition
connectivity, strength approximation, approximate min cut, and rooted
k-out orientations with verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import oracle as _oracle
from .errors import LimitExceededError
from .model import Hedgegraph, Partition, partition_boundary
from .sfm import hedgegraph_min_ratio
from .matroid import PackingResult, pack_bases


@dataclass(frozen=True)
class Orientation:
    """Per hedge: (hyperedge index, head vertex), plus the root."""

    root: int
    choices: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MeasureReport:
    value: object  # int, or (lo, hi) band
    witness: object
    method: str
    details: dict = field(default_factory=dict)


def partition_connectivity(G: Hedgegraph) -> MeasureReport:
    """PC via discrete Newton on the polymatroid ratio, cross-checked by
    base packing. Witness: a partition achieving the reported floor."""
    if G.n < 2:
        raise ValueError("partition connectivity needs at least two vertices")
    if not G.is_connected():
        return MeasureReport(0, G.components(G.all_hedges), "components")
    res = hedgegraph_min_ratio(G, weights=[1] * G.m)
    assert res.value is not None
    pc = math.floor(res.value)
    witness = G.components(res.argmin)
    if len(witness) >= 2:
        ratio = len(partition_boundary(G, witness)) // (len(witness) - 1)
        assert ratio == pc
    # independent route: PC >= k iff k disjoint spanning-tree trimmings exist
    if pc >= 1:
        assert pack_bases(G, pc).feasible
    assert not pack_bases(G, pc + 1).feasible
    return MeasureReport(pc, witness, "newton+packing", {"ratio": res.value})


def weak_partition_connectivity(G: Hedgegraph, mode: str = "exact") -> MeasureReport:
    """WPC by partition enumeration. No polynomial algorithm is known, so
    only exact mode exists and it is limited to oracle-sized inputs."""
    if mode != "exact":
        raise ValueError("only mode='exact' is available for this measure")
    val, witness = _oracle.exact_wpc(G)
    return MeasureReport(val, witness, "exhaustive")


def _greedy_base(G: Hedgegraph, remaining: set) -> Optional[frozenset]:
    """Grow a spanning hedge set from remaining hedges; None if they don't span."""
    target = G.f(G.all_hedges)
    cur: set = set()
    fcur = 0
    for e in sorted(remaining):
        fe = G.f(frozenset(cur | {e}))
        if fe > fcur:
            cur.add(e)
            fcur = fe
            if fcur == target:
                return frozenset(cur)
    return None


def kstar_approx(G: Hedgegraph) -> MeasureReport:
    """Band [B, B*ceil(10 ln f(E))] around the polymatroid strength k*.

    B counts disjoint spanning hedge sets extracted greedily, so B <= k*;
    the multiplicative log factor bounds k* from above. The exact value is
    attached when the input is small enough to enumerate.
    """
    if G.n < 2 or not G.is_connected():
        raise ValueError("strength approximation needs a connected input")
    remaining = set(range(G.m))
    bases = []
    while True:
        base = _greedy_base(G, remaining)
        if base is None:
            break
        bases.append(base)
        remaining -= base
    B = len(bases)
    fE = G.f(G.all_hedges)
    upper = B * max(1, math.ceil(10 * math.log(fE)))
    details: dict = {"bases": tuple(bases)}
    try:
        exact, _ = _oracle.exact_kstar(G)
        details["exact"] = exact
    except Exception:
        pass
    return MeasureReport((B, upper), tuple(bases), "greedy-base-extraction", details)


def approx_connectivity(G: Hedgegraph) -> MeasureReport:
    """Band [lo, hi] with lo <= lambda <= hi.

    lo = greedy base count B (B <= k* <= lambda); hi from lambda <= 2*WPC+1
    <= 2*k*+1, clamped by the trivial bound lambda <= |E|.
    """
    if G.n < 2:
        raise ValueError("connectivity needs at least two vertices")
    if not G.is_connected():
        return MeasureReport(0, G.components(G.all_hedges), "components")
    ks = kstar_approx(G)
    lo, upper = ks.value
    hi = min(2 * upper + 1, G.m)
    return MeasureReport((lo, hi), ks.witness, "sandwich", {"kstar_band": ks.value})


def orient(G: Hedgegraph, k: int, root: int):
    """Rooted k-out orientation from k disjoint spanning-tree trimmings.

    Each tree edge is oriented away from the root and lifted to its hedge:
    chosen hyperedge = the trimmed one, head = the endpoint nearer the root.
    Hedges outside every tree get head = smallest vertex of their first
    hyperedge. Returns (Orientation, None) or (None, certificate Partition).
    """
    if G.n < 2:
        raise ValueError("orientation needs at least two vertices")
    if k < 1:
        raise ValueError("k must be at least 1")
    if not 0 <= root < G.n:
        raise ValueError("root is not a vertex")
    res: PackingResult = pack_bases(G, k)
    if not res.feasible:
        return None, res.certificate
    choices: dict[int, tuple[int, int]] = {}
    for t in res.trimmings:
        # BFS from the root over the trimmed tree to find parent sides
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.n)}
        for e, te in t.items():
            u, v = te.pair
            adj[u].append((v, e))
            adj[v].append((u, e))
        seen = {root}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v, e in adj[u]:
                if v in seen:
                    continue
                seen.add(v)
                queue.append(v)
                choices[e] = (t[e].hyperedge, u)  # head = parent endpoint
    for e in range(G.m):
        if e not in choices:
            choices[e] = (0, G.hedges[e].hyperedges[0][0])
    return Orientation(root, tuple(choices[e] for e in range(G.m))), None


def verify_orientation(G: Hedgegraph, O: Orientation, k: int, root: int):
    """Check d_out(U) >= k for every U with root in U, U != V, where a hedge
    leaves U when its head lies in U and its chosen hyperedge is not fully
    inside U. Returns (True, None) or (False, violating U)."""
    if len(O.choices) != G.m:
        raise ValueError("orientation does not match the hedge count")
    for e, (hi, head) in enumerate(O.choices):
        hys = G.hedges[e].hyperedges
        if not 0 <= hi < len(hys) or head not in hys[hi]:
            raise ValueError(f"invalid choice for hedge {e}")
    limits = _oracle.default_limits()
    if G.n > limits.max_vertices:
        raise LimitExceededError(
            f"{G.n} vertices exceeds the oracle limit of {limits.max_vertices}"
        )
    others = [v for v in range(G.n) if v != root]
    for mask in range(2 ** len(others)):
        if mask == (1 << len(others)) - 1:
            continue  # U = V is excluded
        U = {root} | {others[i] for i in range(len(others)) if mask >> i & 1}
        dout = 0
        for e, (hi, head) in enumerate(O.choices):
            if head in U and not set(G.hedges[e].hyperedges[hi]) <= U:
                dout += 1
        if dout < k:
            return False, frozenset(U)
    return True, None
