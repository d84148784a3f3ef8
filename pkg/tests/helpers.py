"""Shared builders for the test suite: fixtures, random instances, oracles."""

from __future__ import annotations

import os

import numpy as np

from hedgegraphs import Hedge, Hedgegraph, parse_hedgegraph

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def load(name: str) -> Hedgegraph:
    with open(os.path.join(FIXTURES, name + ".hg")) as fh:
        return parse_hedgegraph(fh.read())


def one_spanning_hedge(n: int) -> Hedgegraph:
    """Single hedge whose only hyperedge is all of V."""
    return Hedgegraph(
        [f"v{i}" for i in range(n)], [Hedge("e0", (tuple(range(n)),))]
    )


def parallel_spanning_hedges(n: int, count: int) -> Hedgegraph:
    """count parallel copies of the hedge {V}."""
    return Hedgegraph(
        [f"v{i}" for i in range(n)],
        [Hedge(f"e{i}", (tuple(range(n)),)) for i in range(count)],
    )


def path_graph(n: int) -> Hedgegraph:
    return Hedgegraph(
        [f"v{i}" for i in range(n)],
        [Hedge(f"e{i}", ((i, i + 1),)) for i in range(n - 1)],
    )


def cycle_graph(n: int, copies: int = 1) -> Hedgegraph:
    """Cycle on n vertices; each edge duplicated `copies` times."""
    hedges = []
    for i in range(n):
        for c in range(copies):
            hedges.append(Hedge(f"e{i}_{c}", ((i, (i + 1) % n),)))
    return Hedgegraph([f"v{i}" for i in range(n)], hedges)


def random_hedgegraph(
    seed: int,
    n_max: int = 7,
    m_max: int = 8,
    max_hyperedges: int = 3,
    max_size: int = 4,
    connected: bool = False,
) -> Hedgegraph:
    """Seeded random instance; hyperedge sizes in [2, max_size].

    With connected=True, regenerates a few times and finally appends a path
    hedge chain so every returned instance is connected.
    """
    rng = np.random.default_rng(seed)
    for attempt in range(30):
        n = int(rng.integers(2, n_max + 1))
        m = int(rng.integers(1, m_max + 1))
        hedges = []
        for i in range(m):
            hys = []
            for _ in range(int(rng.integers(1, max_hyperedges + 1))):
                size = int(rng.integers(2, min(max_size, n) + 1))
                hys.append(tuple(sorted(rng.choice(n, size=size, replace=False))))
            hedges.append(Hedge(f"e{i}", tuple(hys)))
        G = Hedgegraph([f"v{i}" for i in range(n)], hedges)
        if not connected or G.is_connected():
            return G
    # last resort: stitch the components together with one path hedge
    hedges = list(G.hedges) + [
        Hedge("chain", (tuple(range(G.n)),))
    ]
    return Hedgegraph(G.vertex_names, hedges)


def corpus(count: int = 300, **kwargs) -> list:
    return [random_hedgegraph(seed, **kwargs) for seed in range(count)]
