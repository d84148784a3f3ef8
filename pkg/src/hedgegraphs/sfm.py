"""Submodular minimization and exact ratio minimization (discrete Newton).

The minimizer is the engine behind polynomial-time partition connectivity
and the matroid independence cross-check. Two routes are provided: a
Fujishige-Wolfe minimum-norm point with round-and-verify extraction (exact
for integer-valued functions), and an exhaustive sweep for small ground
sets. Results are exact rationals throughout.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .model import Hedgegraph

EXHAUSTIVE_MAX = 16

# squared-norm improvement tolerance for the min-norm inner loop; correctness
# does not rest on it because of round-and-verify
_Z1 = 1e-12
_Z2 = 1e-10


@dataclass
class SubmodularOracle:
    """Evaluation oracle for a set function on ground set {0..ground_size-1}.

    ``evaluate`` takes a frozenset of indices. The caller asserts
    submodularity; with ``validate=True`` it is spot-checked on sampled pairs.
    """

    ground_size: int
    evaluate: Callable[[frozenset], object]
    declared_bound: Optional[int] = None
    validate: bool = False
    _memo: dict = field(default_factory=dict, repr=False)
    evaluations: int = field(default=0, repr=False)

    def __call__(self, S) -> object:
        key = frozenset(S)
        if key not in self._memo:
            self._memo[key] = self.evaluate(key)
            self.evaluations += 1
        return self._memo[key]

    def spot_check(self, trials: int = 20, seed: int = 0) -> None:
        rng = random.Random(seed)
        ground = list(range(self.ground_size))
        for _ in range(trials):
            A = frozenset(v for v in ground if rng.random() < 0.5)
            B = frozenset(v for v in ground if rng.random() < 0.5)
            if self(A) + self(B) < self(A | B) + self(A & B):
                raise ValueError("oracle violates submodularity")


@dataclass(frozen=True)
class SfmResult:
    minimizer: frozenset
    value: object
    evaluations: int
    method: str


@dataclass(frozen=True)
class RatioResult:
    """Exact ratio minimum; ``value is None`` encodes +infinity."""

    value: Optional[Fraction]
    argmin: frozenset
    iterations: int

    @property
    def is_infinite(self) -> bool:
        return self.value is None


def _exhaustive(oracle: SubmodularOracle) -> SfmResult:
    ground = range(oracle.ground_size)
    best_set: frozenset = frozenset()
    best = oracle(best_set)
    for r in range(1, oracle.ground_size + 1):
        for combo in itertools.combinations(ground, r):
            v = oracle(frozenset(combo))
            if v < best:
                best, best_set = v, frozenset(combo)
    return SfmResult(best_set, best, oracle.evaluations, "exhaustive")


def _greedy_base_vertex(w: np.ndarray, oracle: SubmodularOracle) -> np.ndarray:
    """Linear minimization over the base polytope via the greedy rule."""
    order = np.argsort(w, kind="stable")
    x = np.empty(len(w))
    prev = float(oracle(frozenset()))
    chosen: set[int] = set()
    for i in order:
        chosen.add(int(i))
        cur = float(oracle(frozenset(chosen)))
        x[i] = cur - prev
        prev = cur
    return x


def _affine_minimizer(S: np.ndarray):
    m = S.shape[0]
    M = np.empty((m + 1, m + 1))
    M[0, 0] = 0.0
    M[0, 1:] = 1.0
    M[1:, 0] = 1.0
    M[1:, 1:] = S @ S.T
    rhs = np.zeros(m + 1)
    rhs[0] = 1.0
    sol = np.linalg.lstsq(M, rhs, rcond=None)[0]
    b = sol[1:]
    return b, S.T @ b


def _min_norm_point(oracle: SubmodularOracle, max_iter: int = 500) -> np.ndarray:
    n = oracle.ground_size
    x = _greedy_base_vertex(np.zeros(n), oracle)
    S = x.reshape(1, n)
    a = np.array([1.0])
    for _ in range(max_iter):
        q = _greedy_base_vertex(x, oracle)
        scale = max(1.0, float(np.max(np.abs(S))) ** 2, float(q @ q))
        if x @ q >= x @ x - _Z1 * scale:
            break
        S = np.vstack([S, q])
        a = np.append(a, 0.0)
        while True:
            b, y = _affine_minimizer(S)
            if np.all(b >= -_Z2):
                a, x = np.clip(b, 0.0, None), y
                break
            idx = np.nonzero(a - b > _Z2)[0]
            theta = float(np.min(a[idx] / (a - b)[idx]))
            a = theta * b + (1 - theta) * a
            x = theta * y + (1 - theta) * x
            keep = a > _Z2
            if keep.all():
                keep[int(np.argmin(a))] = False
            S, a = S[keep], a[keep]
            x = S.T @ a
    return x


def _min_norm_extract(oracle: SubmodularOracle) -> Optional[SfmResult]:
    """Round-and-verify: exact for integer-valued oracles when the duality
    gap of the numerical norm point is below 1/2."""
    x = _min_norm_point(oracle)
    order = np.argsort(x, kind="stable")
    best_set: frozenset = frozenset()
    best = oracle(best_set)
    prefix: set[int] = set()
    for i in order:
        prefix.add(int(i))
        v = oracle(frozenset(prefix))
        if v < best:
            best, best_set = v, frozenset(prefix)
    lower = float(np.minimum(x, 0.0).sum())
    if float(best) - lower < 0.5:
        return SfmResult(best_set, best, oracle.evaluations, "min-norm")
    return None


def minimize_submodular(oracle: SubmodularOracle, method: str = "auto") -> SfmResult:
    """Global minimizer of an integer-valued submodular function.

    ``method``: 'auto' (min-norm with exhaustive fallback), 'exhaustive',
    or 'min-norm'.
    """
    if oracle.validate:
        oracle.spot_check()
    if oracle.ground_size == 0:
        return SfmResult(frozenset(), oracle(frozenset()), oracle.evaluations, "trivial")
    if method == "exhaustive" or (
        method == "auto" and oracle.ground_size <= EXHAUSTIVE_MAX
    ):
        return _exhaustive(oracle)
    res = _min_norm_extract(oracle)
    if res is not None:
        return res
    if method == "min-norm":
        raise ArithmeticError("min-norm duality gap too large to certify exactness")
    if oracle.ground_size <= 20:
        return _exhaustive(oracle)
    raise ArithmeticError("cannot certify an exact minimizer for this ground size")


def min_ratio(
    f: Callable[[frozenset], int],
    ground_size: int,
    weights,
    method: str = "auto",
) -> RatioResult:
    """Exact w-strength min_A (w(N)-w(A)) / (f(N)-f(A)) by discrete Newton.

    ``f`` must be monotone submodular with f(empty)=0; weights nonnegative.
    Sets with f(A)=f(N) are skipped per the 0/0 = +inf convention.
    """
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    N = frozenset(range(ground_size))
    fN = f(N)
    if fN == 0:
        return RatioResult(None, N, 0)
    wN = sum(weights, Fraction(0))

    alpha = Fraction(wN, fN)  # ratio at A = empty
    best = frozenset()
    iterations = 0
    while True:
        iterations += 1
        # minimize alpha*f(A) - w(A); scale to integers for round-and-verify
        scale = alpha.denominator
        for w in weights:
            scale = scale * w.denominator // math.gcd(scale, w.denominator)

        def obj(S, _a=alpha, _s=scale):
            val = _a * f(S) - sum((weights[e] for e in S), Fraction(0))
            return int(val * _s)

        oracle = SubmodularOracle(ground_size, obj)
        res = minimize_submodular(oracle, method=method)
        threshold = int((alpha * fN - wN) * scale)
        if res.value < threshold:
            A = res.minimizer
            new_alpha = Fraction(wN - sum((weights[e] for e in A), Fraction(0)), fN - f(A))
            assert new_alpha < alpha
            alpha, best = new_alpha, A
        else:
            return RatioResult(alpha, best, iterations)


def hedgegraph_min_ratio(G: Hedgegraph, weights=None, method: str = "auto") -> RatioResult:
    """kappa_w of the hedgegraph polymatroid (unit weights by default)."""
    if weights is None:
        weights = [h.weight for h in G.hedges]
    return min_ratio(G.f, G.m, weights, method=method)


def matroid_independence_via_sfm(G: Hedgegraph, A) -> tuple[bool, Optional[frozenset]]:
    """Independence in the trimming matroid via SFM on f(B) - |B| over B in A.

    Returns (True, None) or (False, certificate B) with |B| > f(B).
    """
    ground = sorted(G.check_hedge_set(A))

    def obj(S):
        hedges = frozenset(ground[i] for i in S)
        return G.f(hedges) - len(hedges)

    res = minimize_submodular(SubmodularOracle(len(ground), obj))
    if res.value >= 0:
        return True, None
    return False, frozenset(ground[i] for i in res.minimizer)
