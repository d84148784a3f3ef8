"""Randomized components: hedge sampling experiments, the partition
sparsifier built from strength decomposition, and quotient counting.

All randomness flows through numpy's SeedSequence-spawned generators keyed
by (seed, stream index), so every result replays bit-for-bit regardless of
execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import oracle as _oracle
from .errors import LimitExceededError
from .model import Hedgegraph, Partition, cut_value, partition_boundary
from .sfm import min_ratio


def substream(seed: int, stream: int) -> np.random.Generator:
    """Independent generator for (seed, stream); order of creation is irrelevant."""
    return np.random.default_rng(np.random.SeedSequence([seed, stream]))


@dataclass(frozen=True)
class ExperimentReport:
    trials: int
    successes: int
    empirical_probability: float
    parameters: dict

    def __post_init__(self):
        assert self.successes <= self.trials


@dataclass(frozen=True)
class SparsifierResult:
    weights: tuple  # hedge -> Fraction, 0 outside the support
    strengths: tuple  # hedge -> Fraction or None (None = infinite strength)
    probabilities: tuple  # hedge -> Fraction in [0, 1]

    @property
    def support(self) -> frozenset:
        return frozenset(e for e, w in enumerate(self.weights) if w != 0)


def sample_subhedgegraph(G: Hedgegraph, p: float, rng: np.random.Generator) -> frozenset:
    """Each hedge kept independently with probability p."""
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    draws = rng.random(G.m)
    return frozenset(e for e in range(G.m) if draws[e] < p)


def connectivity_sampling_experiment(
    G: Hedgegraph, trials: int, seed: int
) -> ExperimentReport:
    """Sample hedges at p = min(1, 20 ln n / lambda) and count how often the
    sampled sub-hedgegraph stays connected."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if G.n < 2 or not G.is_connected():
        raise ValueError("the experiment needs a connected input")
    lam, _ = _oracle.exact_connectivity(G)
    p = min(1.0, 20 * math.log(G.n) / lam)
    successes = 0
    for t in range(trials):
        S = sample_subhedgegraph(G, p, substream(seed, t))
        if G.comp_count(S) == 1:
            successes += 1
    return ExperimentReport(
        trials, successes, successes / trials, {"p": p, "n": G.n, "lambda": lam}
    )


def base_sampling_experiment(G: Hedgegraph, trials: int, seed: int) -> ExperimentReport:
    """Sample hedges at p = min(1, 10 ln f(E) / k*) and count how often the
    sample still spans, i.e. f(S) = f(E)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if G.n < 2 or not G.is_connected():
        raise ValueError("the experiment needs a connected input")
    kstar, _ = _oracle.exact_kstar(G)
    if kstar is None or kstar == 0:
        raise ValueError("the polymatroid strength must be positive")
    fE = G.f(G.all_hedges)
    p = min(1.0, 10 * math.log(fE) / kstar) if fE > 1 else 1.0
    successes = 0
    for t in range(trials):
        S = sample_subhedgegraph(G, p, substream(seed, t))
        if G.f(S) == fE:
            successes += 1
    return ExperimentReport(
        trials, successes, successes / trials, {"p": p, "f_E": fE, "kstar": kstar}
    )


def hedge_strengths(G: Hedgegraph, weights=None) -> list:
    """Strength decomposition: peel off min-ratio witnesses, assigning each
    removed hedge the ratio at which it left. None encodes infinite strength
    (hedges that never help connect anything)."""
    if weights is None:
        weights = [h.weight for h in G.hedges]
    weights = [Fraction(w) for w in weights]
    strengths: list = [None] * G.m
    alive = sorted(range(G.m))
    while alive:
        sub_w = [weights[e] for e in alive]
        index = {e: i for i, e in enumerate(alive)}

        def f(S, _alive=tuple(alive)):
            return G.f(frozenset(_alive[i] for i in S))

        res = min_ratio(f, len(alive), sub_w)
        if res.value is None:
            break  # remaining hedges connect nothing: infinite strength
        keep = sorted(alive[i] for i in res.argmin)
        for e in alive:
            if e not in set(keep):
                strengths[e] = res.value
        if len(keep) == len(alive):
            break
        alive = keep
    return strengths


def sparsify_partitions(
    G: Hedgegraph, weights=None, epsilon: float = 0.5, seed: int = 0, c0: float = 50.0
) -> SparsifierResult:
    """Importance-sample hedges at p_e = min(1, rho * w(e)/strength(e)) with
    rho = c0 ln(n)/epsilon^2 and reweight kept hedges by 1/p_e."""
    if G.n < 2 or not G.is_connected():
        raise ValueError("sparsification needs a connected input")
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must be in (0, 1)")
    if weights is None:
        weights = [h.weight for h in G.hedges]
    weights = [Fraction(w) for w in weights]
    strengths = hedge_strengths(G, weights)
    rho = Fraction(c0 * math.log(G.n) / epsilon**2).limit_denominator(10**9)
    probs = []
    for e in range(G.m):
        if strengths[e] is None or strengths[e] == 0:
            probs.append(Fraction(0) if strengths[e] is None else Fraction(1))
        else:
            probs.append(min(Fraction(1), rho * weights[e] / strengths[e]))
    rng = substream(seed, 0)
    draws = rng.random(G.m)
    out = []
    for e in range(G.m):
        if probs[e] > 0 and draws[e] < float(probs[e]):
            out.append(weights[e] / probs[e])
        else:
            out.append(Fraction(0))
    return SparsifierResult(tuple(out), tuple(strengths), tuple(probs))


def verify_sparsifier(
    G: Hedgegraph, weights, new_weights, epsilon: float
) -> tuple[bool, Fraction, Optional[Partition]]:
    """Enumerate all partitions and compare weighted boundary capacities.

    Returns (ok, max relative error, worst partition). Partitions with zero
    capacity under w must have zero capacity under w' as well.
    """
    limits = _oracle.default_limits()
    if G.n > limits.max_vertices:
        raise LimitExceededError(
            f"{G.n} vertices exceeds the oracle limit of {limits.max_vertices}"
        )
    weights = [Fraction(w) for w in weights]
    new_weights = [Fraction(w) for w in new_weights]
    eps = Fraction(epsilon).limit_denominator(10**9)
    ok = True
    worst = Fraction(0)
    worst_p: Optional[Partition] = None
    for P in _oracle.set_partitions(G.n, min_blocks=2):
        boundary = partition_boundary(G, P)
        d_old = sum((weights[e] for e in boundary), Fraction(0))
        d_new = sum((new_weights[e] for e in boundary), Fraction(0))
        if d_old == 0:
            if d_new != 0:
                return False, Fraction(1), P
            continue
        err = abs(d_new - d_old) / d_old
        if err > worst:
            worst, worst_p = err, P
        if err > eps:
            ok = False
    return ok, worst, worst_p


def count_small_quotients(G: Hedgegraph, weights=None, t: int = 1) -> int:
    """Number of quotients Q with w(Q) <= t * kappa_w(f)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if weights is None:
        weights = [h.weight for h in G.hedges]
    weights = [Fraction(w) for w in weights]
    kappa = _oracle.exact_kappa(G, weights)
    quotients = _oracle.enumerate_quotients(G)
    if kappa.value is None:
        # infinite threshold: every quotient counts
        return len(quotients)
    bound = t * kappa.value
    return sum(
        1
        for Q in quotients
        if sum((weights[e] for e in Q), Fraction(0)) <= bound
    )
