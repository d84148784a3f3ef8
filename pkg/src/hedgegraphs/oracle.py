"""Brute-force reference implementations of every quantity in the package.

Everything here enumerates: vertex subsets for cuts, restricted growth
strings for partitions, bitmask subsets for hedge sets. Exceeding the
configured limits is an error, never a silent approximation.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import LimitExceededError
from .model import Hedgegraph, Partition, cut_hedges, partition_boundary, wpc_term
from .sfm import RatioResult


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 12
    max_hedges: int = 20


def default_limits() -> OracleLimits:
    """Limits, overridable via HEDGEGRAPHS_MAX_VERTICES / _MAX_HEDGES."""
    return OracleLimits(
        max_vertices=int(os.environ.get("HEDGEGRAPHS_MAX_VERTICES", 12)),
        max_hedges=int(os.environ.get("HEDGEGRAPHS_MAX_HEDGES", 20)),
    )


def _check_vertices(G: Hedgegraph, limits: Optional[OracleLimits]) -> OracleLimits:
    limits = limits or default_limits()
    if G.n > limits.max_vertices:
        raise LimitExceededError(
            f"{G.n} vertices exceeds the oracle limit of {limits.max_vertices}"
        )
    return limits


def _check_hedges(count: int, limits: Optional[OracleLimits]) -> OracleLimits:
    limits = limits or default_limits()
    if count > limits.max_hedges:
        raise LimitExceededError(
            f"{count} hedges exceeds the oracle limit of {limits.max_hedges}"
        )
    return limits


def set_partitions(n: int, min_blocks: int = 1) -> Iterator[Partition]:
    """All partitions of {0..n-1} via restricted growth strings."""
    a = [0] * n
    while True:
        k = max(a) + 1
        if k >= min_blocks:
            blocks: list[list[int]] = [[] for _ in range(k)]
            for v, lab in enumerate(a):
                blocks[lab].append(v)
            yield Partition(blocks, n)
        # next restricted growth string
        i = n - 1
        while i > 0:
            if a[i] <= max(a[:i]):
                a[i] += 1
                for j in range(i + 1, n):
                    a[j] = 0
                break
            i -= 1
        else:
            return


def _hedge_subsets(G: Hedgegraph) -> Iterator[frozenset]:
    ground = range(G.m)
    for r in range(G.m + 1):
        for combo in itertools.combinations(ground, r):
            yield frozenset(combo)


def exact_connectivity(
    G: Hedgegraph, limits: Optional[OracleLimits] = None
) -> tuple[int, frozenset]:
    """Minimum cut over all proper nonempty vertex subsets (vertex 0 fixed in S)."""
    if G.n < 2:
        raise ValueError("connectivity needs at least two vertices")
    _check_vertices(G, limits)
    rest = list(range(1, G.n))
    best = None
    best_set: frozenset = frozenset()
    for r in range(0, G.n - 1):
        for combo in itertools.combinations(rest, r):
            S = frozenset((0,) + combo)
            d = len(cut_hedges(G, S))
            if best is None or d < best:
                best, best_set = d, S
    return best, best_set


def exact_pc(
    G: Hedgegraph, limits: Optional[OracleLimits] = None
) -> tuple[int, Partition]:
    """Partition connectivity by full partition enumeration."""
    if G.n < 2:
        raise ValueError("partition connectivity needs at least two vertices")
    _check_vertices(G, limits)
    best = None
    best_p = None
    for P in set_partitions(G.n, min_blocks=2):
        val = len(partition_boundary(G, P)) // (len(P) - 1)
        if best is None or val < best:
            best, best_p = val, P
            if best == 0:
                break
    return best, best_p


def exact_wpc(
    G: Hedgegraph, limits: Optional[OracleLimits] = None
) -> tuple[int, Partition]:
    """Weak partition connectivity by full partition enumeration."""
    if G.n < 2:
        raise ValueError("weak partition connectivity needs at least two vertices")
    _check_vertices(G, limits)
    best = None
    best_p = None
    for P in set_partitions(G.n, min_blocks=2):
        total = sum(wpc_term(G, P, e) for e in range(G.m))
        val = total // (len(P) - 1)
        if best is None or val < best:
            best, best_p = val, P
            if best == 0:
                break
    return best, best_p


def exact_kstar(
    G: Hedgegraph, limits: Optional[OracleLimits] = None
) -> tuple[Optional[int], Optional[frozenset]]:
    """Functional strength of the hedgegraph polymatroid by subset sweep.

    Returns (None, None) when no subset qualifies (f(E) = 0, so every ratio
    is 0/0 = +infinity).
    """
    _check_hedges(G.m, limits)
    fE = G.f(G.all_hedges)
    best = None
    best_set = None
    for A in _hedge_subsets(G):
        fA = G.f(A)
        if fA == fE:
            continue
        marg = sum(G.f(A | {e}) - fA for e in range(G.m))
        val = marg // (fE - fA)
        if best is None or val < best:
            best, best_set = val, A
    return best, best_set


def exact_kappa(
    G: Hedgegraph, weights=None, limits: Optional[OracleLimits] = None
) -> RatioResult:
    """Exact w-strength by subset sweep; value None encodes +infinity."""
    _check_hedges(G.m, limits)
    if weights is None:
        weights = [h.weight for h in G.hedges]
    weights = [Fraction(w) for w in weights]
    fE = G.f(G.all_hedges)
    wE = sum(weights, Fraction(0))
    best: Optional[Fraction] = None
    best_set: frozenset = frozenset()
    count = 0
    for A in _hedge_subsets(G):
        fA = G.f(A)
        if fA == fE:
            continue
        count += 1
        val = Fraction(wE - sum((weights[e] for e in A), Fraction(0)), fE - fA)
        if best is None or val < best:
            best, best_set = val, A
    if best is None:
        return RatioResult(None, G.all_hedges, count)
    return RatioResult(best, best_set, count)


def exact_rank(
    G: Hedgegraph, A, limits: Optional[OracleLimits] = None
) -> tuple[int, frozenset]:
    """min over B of f(B) + |A \\ B|, with the minimizing B."""
    A = G.check_hedge_set(A)
    _check_hedges(len(A), limits)
    elems = sorted(A)
    best = None
    best_set: frozenset = frozenset()
    for r in range(len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            B = frozenset(combo)
            val = G.f(B) + len(A) - len(B)
            if best is None or val < best:
                best, best_set = val, B
    return best, best_set


def enumerate_quotients(
    G: Hedgegraph, limits: Optional[OracleLimits] = None
) -> frozenset:
    """Deduplicated set of partition boundaries = quotient family of f."""
    _check_vertices(G, limits)
    out = set()
    for P in set_partitions(G.n):
        out.add(partition_boundary(G, P))
    return frozenset(out)
