"""Hedgegraph data model, `.hg` parsing, and the basic cut machinery.

A hedgegraph is a vertex set plus a list of hedges; a hedge is a set of
pairwise vertex-disjoint hyperedges that fail/count together as one unit.
All set functions here are over hedge index sets (frozensets of ints);
vertices are dense indices into ``vertex_names``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels
from .errors import ParseError

HedgeSet = frozenset  # of hedge indices


@dataclass(frozen=True)
class Hedge:
    """One hedge: a name, disjoint hyperedges (vertex-index tuples), a weight."""

    name: str
    hyperedges: tuple[tuple[int, ...], ...]
    weight: Fraction = Fraction(1)


class Partition:
    """A partition of {0..n-1} into nonempty blocks, canonically ordered.

    Blocks are sorted by their minimum element, so partitions compare and
    hash by value.
    """

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int):
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise ValueError("partition blocks must be nonempty")
        seen = set()
        for b in bs:
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        if seen != set(range(n)):
            raise ValueError("partition blocks must cover all vertices")
        self.blocks = tuple(sorted(bs, key=min))
        self.n = n

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(groups.values(), len(labels))

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return f"Partition[{inner}]"

    def block_of(self) -> list[int]:
        """Map vertex -> block index."""
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out

    def refines(self, other: "Partition") -> bool:
        of = other.block_of()
        return all(len({of[v] for v in b}) == 1 for b in self.blocks)


class Hedgegraph:
    """Immutable hedgegraph over dense vertex indices.

    Component counts per hedge subset are memoized; they back every
    polymatroid evaluation in the package.
    """

    def __init__(self, vertex_names: Sequence[str], hedges: Sequence[Hedge]):
        if len(set(vertex_names)) != len(vertex_names):
            raise ValueError("vertex names must be unique")
        names = [h.name for h in hedges]
        if len(set(names)) != len(names):
            raise ValueError("hedge names must be unique")
        self.vertex_names = tuple(vertex_names)
        self.hedges = tuple(
            Hedge(h.name, _normalize_hyperedges(h.hyperedges), h.weight) for h in hedges
        )
        n = len(self.vertex_names)
        for h in self.hedges:
            if not h.hyperedges:
                raise ValueError(f"hedge {h.name!r} has no hyperedges")
            if h.weight < 0:
                raise ValueError(f"hedge {h.name!r} has negative weight")
            for hy in h.hyperedges:
                if any(v < 0 or v >= n for v in hy):
                    raise ValueError(f"hedge {h.name!r} references invalid vertex")
        self._vertex_index = {t: i for i, t in enumerate(self.vertex_names)}
        # Flattened union pairs: chain the vertices of each hyperedge.
        ptr, pu, pv = [0], [], []
        for h in self.hedges:
            for hy in h.hyperedges:
                for a, b in zip(hy, hy[1:]):
                    pu.append(a)
                    pv.append(b)
            ptr.append(len(pu))
        self._backend = _kernels.make_backend(ptr, pu, pv)
        self._ncomp_cache: dict[int, int] = {}

    # -- basic facts ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertex_names)

    @property
    def m(self) -> int:
        return len(self.hedges)

    @property
    def p(self) -> int:
        """Representation size: total vertex slots over all hyperedges."""
        return sum(len(hy) for h in self.hedges for hy in h.hyperedges)

    @property
    def all_hedges(self) -> HedgeSet:
        return frozenset(range(self.m))

    def vertex_index(self, token: str) -> int:
        return self._vertex_index[token]

    def hedge_index(self, name: str) -> int:
        for i, h in enumerate(self.hedges):
            if h.name == name:
                return i
        raise KeyError(name)

    def weight(self, A: Iterable[int]) -> Fraction:
        return sum((self.hedges[e].weight for e in A), Fraction(0))

    def total_weight(self) -> Fraction:
        return self.weight(range(self.m))

    def check_hedge_set(self, A: Iterable[int]) -> HedgeSet:
        A = frozenset(A)
        for e in A:
            if not (0 <= e < self.m):
                raise KeyError(f"unknown hedge index {e}")
        return A

    def partition(self, blocks: Iterable[Iterable[int]]) -> Partition:
        return Partition(blocks, self.n)

    # -- component counting / polymatroid ------------------------------

    def comp_count(self, A: Iterable[int]) -> int:
        A = self.check_hedge_set(A)
        mask = 0
        for e in A:
            mask |= 1 << e
        cached = self._ncomp_cache.get(mask)
        if cached is None:
            cached = self._backend.component_count(self.n, sorted(A))
            self._ncomp_cache[mask] = cached
        return cached

    def f(self, A: Iterable[int]) -> int:
        """Hedgegraph polymatroid: n minus component count of (V, A)."""
        return self.n - self.comp_count(A)

    def components(self, A: Iterable[int]) -> Partition:
        A = self.check_hedge_set(A)
        labels = self._backend.component_labels(self.n, sorted(A))
        return Partition.from_labels(labels)

    def is_connected(self) -> bool:
        return self.comp_count(self.all_hedges) == 1

    def __repr__(self):
        return f"Hedgegraph(n={self.n}, m={self.m}, p={self.p})"


# ---------------------------------------------------------------------------
# normalization


def _normalize_hyperedges(hyperedges) -> tuple[tuple[int, ...], ...]:
    """Merge intersecting hyperedges until pairwise disjoint.

    Union-find over shared vertices; the vertex union is preserved and the
    operation is idempotent. Hyperedges come out sorted by minimum vertex.
    """
    sets = [set(hy) for hy in hyperedges]
    owner: dict[int, int] = {}  # vertex -> index of the merged set holding it
    merged: list[set[int] | None] = []
    for s in sets:
        hit = sorted({owner[v] for v in s if v in owner})
        if not hit:
            idx = len(merged)
            merged.append(set(s))
        else:
            idx = hit[0]
            for j in hit[1:]:
                merged[idx] |= merged[j]  # type: ignore[operator]
                merged[j] = None
            merged[idx] |= s  # type: ignore[operator]
        for v in merged[idx]:  # type: ignore[union-attr]
            owner[v] = idx
    out = [tuple(sorted(s)) for s in merged if s is not None]
    return tuple(sorted(out, key=lambda t: t[0]))


def normalize_hedge(h: Hedge) -> Hedge:
    return Hedge(h.name, _normalize_hyperedges(h.hyperedges), h.weight)


# ---------------------------------------------------------------------------
# .hg text format


def parse_hedgegraph(text: str) -> Hedgegraph:
    """Parse the `.hg` text format.

    Lines: ``# comment``, ``vertices <tok>+``, then
    ``hedge <name> [weight <decimal>] : <tok>+ ( ; <tok>+ )*``.
    """
    vertex_names: list[str] = []
    vertex_index: dict[str, int] = {}
    hedges: list[Hedge] = []
    hedge_names: set[str] = set()
    saw_vertices = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if not saw_vertices:
            if toks[0] != "vertices":
                raise ParseError("first line must be a 'vertices' declaration", lineno)
            if len(toks) < 2:
                raise ParseError("empty vertex declaration", lineno)
            for t in toks[1:]:
                if t in vertex_index:
                    raise ParseError(f"duplicate vertex name {t!r}", lineno)
                vertex_index[t] = len(vertex_names)
                vertex_names.append(t)
            saw_vertices = True
            continue
        if toks[0] == "vertices":
            raise ParseError("multiple 'vertices' declarations", lineno)
        if toks[0] != "hedge":
            raise ParseError(f"unknown directive {toks[0]!r}", lineno)
        if len(toks) < 2:
            raise ParseError("hedge line missing name", lineno)
        name = toks[1]
        if name in hedge_names:
            raise ParseError(f"duplicate hedge name {name!r}", lineno)
        rest = toks[2:]
        weight = Fraction(1)
        if rest and rest[0] == "weight":
            if len(rest) < 2:
                raise ParseError("'weight' without a value", lineno)
            try:
                weight = Fraction(rest[1])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad weight {rest[1]!r}", lineno)
            if weight < 0:
                raise ParseError(f"negative weight {rest[1]!r}", lineno)
            rest = rest[2:]
        if not rest or rest[0] != ":":
            raise ParseError("hedge line missing ':' separator", lineno)
        rest = rest[1:]
        hyperedges: list[tuple[int, ...]] = []
        current: list[int] = []
        for t in rest + [";"]:
            if t == ";":
                if current:
                    hyperedges.append(tuple(current))
                    current = []
                continue
            if t not in vertex_index:
                raise ParseError(f"unknown vertex token {t!r}", lineno)
            current.append(vertex_index[t])
        if not hyperedges:
            raise ParseError(f"hedge {name!r} has no hyperedges", lineno)
        norm = _normalize_hyperedges(hyperedges)
        if any(len(hy) == 1 for hy in norm):
            warnings.warn(
                f"hedge {name!r} contains a singleton hyperedge (never crosses a cut)",
                stacklevel=2,
            )
        hedge_names.add(name)
        hedges.append(Hedge(name, norm, weight))

    if not saw_vertices:
        raise ParseError("missing 'vertices' declaration", 1)
    return Hedgegraph(vertex_names, hedges)


def serialize_hedgegraph(G: Hedgegraph) -> str:
    """Canonical `.hg` serialization; reparses to an identical hedgegraph."""
    lines = ["vertices " + " ".join(G.vertex_names)]
    for h in G.hedges:
        parts = ["hedge", h.name]
        if h.weight != 1:
            parts += ["weight", str(h.weight)]
        parts.append(":")
        hy_strs = [" ".join(G.vertex_names[v] for v in hy) for hy in h.hyperedges]
        parts.append(" ; ".join(hy_strs))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cut and partition boundary functions


def components(G: Hedgegraph, A: Iterable[int]) -> Partition:
    return G.components(A)


def polymatroid_f(G: Hedgegraph, A: Iterable[int]) -> int:
    return G.f(A)


def cut_hedges(G: Hedgegraph, S: Iterable[int]) -> HedgeSet:
    """Hedges with a hyperedge meeting both S and its complement."""
    S = frozenset(S)
    if not S or len(S) >= G.n:
        raise ValueError("S must be a proper nonempty vertex subset")
    out = set()
    for i, h in enumerate(G.hedges):
        for hy in h.hyperedges:
            inside = sum(1 for v in hy if v in S)
            if 0 < inside < len(hy):
                out.add(i)
                break
    return frozenset(out)


def cut_value(G: Hedgegraph, S: Iterable[int], weighted: bool = False):
    d = cut_hedges(G, S)
    return G.weight(d) if weighted else len(d)


def partition_boundary(G: Hedgegraph, P: Partition) -> HedgeSet:
    """Hedges with a hyperedge meeting at least two blocks of P."""
    if P.n != G.n:
        raise ValueError("partition is over a different vertex set")
    of = P.block_of()
    out = set()
    for i, h in enumerate(G.hedges):
        for hy in h.hyperedges:
            if len({of[v] for v in hy}) >= 2:
                out.add(i)
                break
    return frozenset(out)


def internal_hedges(G: Hedgegraph, P: Partition) -> HedgeSet:
    return G.all_hedges - partition_boundary(G, P)


def partition_capacity(G: Hedgegraph, P: Partition, weights=None):
    """Total weight of the boundary of P (unit weights when None)."""
    b = partition_boundary(G, P)
    if weights is None:
        return G.weight(b)
    return sum((weights[e] for e in b), Fraction(0))


def wpc_term(G: Hedgegraph, P: Partition, e: int) -> int:
    """|P| minus the component count of (V,{e}) with each block contracted."""
    if not (0 <= e < G.m):
        raise KeyError(f"unknown hedge index {e}")
    of = P.block_of()
    parent = list(range(len(P)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(P)
    for hy in G.hedges[e].hyperedges:
        bs = [of[v] for v in hy]
        for a, b in zip(bs, bs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
    return len(P) - comps


def span(G: Hedgegraph, A: Iterable[int]) -> HedgeSet:
    """Hedges whose marginal over A is zero (polymatroid span)."""
    A = G.check_hedge_set(A)
    fA = G.f(A)
    return frozenset(
        e for e in range(G.m) if e in A or G.f(A | {e}) == fA
    )


def is_closed(G: Hedgegraph, A: Iterable[int]) -> bool:
    A = frozenset(A)
    return span(G, A) == A
