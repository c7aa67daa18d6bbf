"""Multi-Bell extraction planning.

Two ways to draw several Bell pairs out of n copies: catalyze disjoint
pairs independently (binomial outcome), or split the copies into groups
and concentrate each group into one Bell pair (best integer partition).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .catalysis_closed_form import ConcentrationInstance, optimal_catalyst
from .errors import BadArity, DomainError, OddCopies


@dataclass(frozen=True)
class PairwiseOutcome:
    """Binomial Bell-count distribution from catalyzing n/2 pairs."""

    n_pairs: int
    p_single: float
    distribution: tuple[tuple[int, float], ...]
    expected_bells: float


@dataclass(frozen=True)
class PartitionPlan:
    """A split of the copies into groups, one Bell pair per group.

    ``catalysts`` holds the per-group optimal c, or None where no
    catalyst applies (single copies and deterministic groups).
    """

    sizes: tuple[int, ...]
    per_group: tuple[float, ...]
    joint_probability: float
    catalysts: tuple[float | None, ...]


@dataclass(frozen=True)
class StrategyReport:
    """Both strategies evaluated at the same Bell-pair target m_star."""

    instance: tuple[float, int, int]
    strategy1_exact_m: float
    strategy1_exact_m_no_coefficient: float
    strategy2_best: PartitionPlan
    recommended: str


def _check_alpha(alpha: float) -> None:
    if not 0.5 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0.5, 1], got {alpha}")


def pairwise_distribution(alpha: float, n: int) -> PairwiseOutcome:
    """Outcome of converting n/2 disjoint pairs, each optimally catalyzed.

    The Bell count is binomial in the per-pair probability.  When pairs
    convert deterministically (alpha^2 <= 1/2) the distribution collapses
    onto m = n/2 with p_single = 1.
    """
    if n < 2 or n % 2:
        raise OddCopies(f"pairwise planning needs an even n >= 2, got {n}")
    pairs = n // 2
    p = optimal_catalyst(ConcentrationInstance(alpha, 2)).p_catalyzed
    dist = tuple(
        (m, math.comb(pairs, m) * p ** m * (1.0 - p) ** (pairs - m)) for m in range(pairs + 1)
    )
    return PairwiseOutcome(pairs, p, dist, pairs * p)


def _partitions(n: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Non-increasing partitions of n into exactly `parts` parts, each <= cap,
    # emitted in descending lexicographic order.
    if parts == 1:
        if 1 <= n <= cap:
            yield (n,)
        return
    for first in range(min(n - parts + 1, cap), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def best_partition(alpha: float, n: int, m_star: int) -> PartitionPlan:
    """Best split of n copies into exactly m_star groups.

    A single copy converts with 2 (1 - alpha) and admits no catalyst;
    larger groups use their optimal rank-2 catalyst.  Ties prefer the
    lexicographically largest size sequence.
    """
    _check_alpha(alpha)
    if n < 1 or not 1 <= m_star <= n:
        raise BadArity(f"cannot split {n} copies into {m_star} groups")
    cache: dict[int, tuple[float, float | None]] = {}

    def group(size: int) -> tuple[float, float | None]:
        if size not in cache:
            if size == 1:
                cache[size] = (min(1.0, 2.0 * (1.0 - alpha)), None)
            else:
                res = optimal_catalyst(ConcentrationInstance(alpha, size))
                cache[size] = (min(1.0, res.p_catalyzed), res.c_opt)
        return cache[size]

    best: PartitionPlan | None = None
    for sizes in _partitions(n, m_star, n):
        probs, cats = zip(*(group(s) for s in sizes))
        joint = math.prod(probs)
        if best is None or joint > best.joint_probability:
            best = PartitionPlan(sizes, probs, joint, cats)
    assert best is not None
    return best


def compare_strategies(alpha: float, n: int, m_star: int) -> StrategyReport:
    """Probability of ending with exactly m_star Bell pairs, both ways.

    Strategy-1 quotes the binomial mass at m_star and, alongside it, the
    bare product p^m (1-p)^(pairs-m) without the coefficient; the
    recommendation is decided on the binomial value.
    """
    outcome = pairwise_distribution(alpha, n)
    plan = best_partition(alpha, n, m_star)
    pairs, p = outcome.n_pairs, outcome.p_single
    if m_star <= pairs:
        with_coef = outcome.distribution[m_star][1]
        no_coef = p ** m_star * (1.0 - p) ** (pairs - m_star)
    else:
        with_coef = no_coef = 0.0
    recommended = "strategy-1" if with_coef >= plan.joint_probability else "strategy-2"
    return StrategyReport((alpha, n, m_star), with_coef, no_coef, plan, recommended)
