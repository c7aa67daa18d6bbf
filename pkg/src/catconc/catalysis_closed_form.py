"""Closed-form catalysis for n-copy concentration with a rank-2 catalyst.

Piecewise monotones of the joint state, the four-ratio system whose
minimum is the success probability, the uncatalyzed baseline, and the
analytically optimal catalyst parameter.  Everything here is an O(1)
expression in (alpha, N, c) that mirrors what ``schmidt_core`` computes
on explicit spectra; the verification suites and the test battery hold
the two routes against each other to 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class ConcentrationInstance:
    """N copies of a two-qubit state with larger squared coefficient alpha."""

    alpha: float
    n_copies: int

    def __post_init__(self) -> None:
        if not 0.5 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0.5, 1], got {self.alpha}")
        if self.n_copies < 1:
            raise DomainError(f"n_copies must be >= 1, got {self.n_copies}")


class Branch(str, Enum):
    """Which side of c = alpha the piecewise monotones are evaluated on."""

    LOW_C = "low_c"
    HIGH_C = "high_c"


@dataclass(frozen=True)
class RatioProfile:
    """The four monotone ratios at catalyst parameter c, r1 = 1 included."""

    c: float
    branch: Branch
    r1: float
    r2: float
    r3: float
    r4: float
    minimum: float
    argmin_index: int


@dataclass(frozen=True)
class CatalystResult:
    """Optimal rank-2 catalyst: parameter, probability, baseline, boost.

    ``c_opt`` is None when no optimizer exists: in the deterministic
    regime there is nothing to improve, and for a single copy every c
    performs identically.
    """

    c_opt: float | None
    p_catalyzed: float
    p_baseline: float
    boost: float
    deterministic: bool


def lqcc_probability(inst: ConcentrationInstance) -> float:
    """Uncatalyzed success probability min(1, 2 (1 - alpha^N))."""
    return min(1.0, 2.0 * (1.0 - inst.alpha ** inst.n_copies))


def _check_c(c: float) -> None:
    if not 0.5 <= c <= 1.0:
        raise DomainError(f"catalyst parameter c must lie in [0.5, 1], got {c}")


def final_monotones(c: float) -> tuple[float, float, float, float]:
    """Monotones of (Bell state) x (rank-2 catalyst): (1, 1-c/2, 1-c, (1-c)/2)."""
    _check_c(c)
    return 1.0, 1.0 - c / 2.0, 1.0 - c, (1.0 - c) / 2.0


def initial_monotones(inst: ConcentrationInstance, c: float) -> tuple[float, float, float, float]:
    """First four monotones of (n copies) x (rank-2 catalyst).

    Piecewise in c.  The largest joint coefficient is always c alpha^N;
    below c = alpha the next two are (1-c) alpha^N and c alpha^(N-1)(1-a),
    above it the runner-up is the N-fold block c alpha^(N-1)(1-a).  For
    N = 1 that block is a single coefficient, so the fourth monotone on
    the high branch continues with (1-c) alpha instead of a second copy.
    Agrees with monotone_E on the explicit joint spectrum to 1e-12.
    """
    _check_c(c)
    a = inst.alpha
    n = inst.n_copies
    x = a ** n
    beta = 1.0 - a
    e2 = 1.0 - c * x
    if c <= a:
        e3 = 1.0 - x
        e4 = 1.0 - x - c * a ** (n - 1) * beta
    else:
        y = a ** (n - 1)
        e3 = 1.0 - c * y
        e4 = (1.0 - c) * beta if n == 1 else 1.0 - c * y - c * y * beta
    return 1.0, e2, e3, e4


def ratio_profile(inst: ConcentrationInstance, c: float) -> RatioProfile:
    """Component-wise quotient of initial by final monotones.

    At c = 1 the third and fourth final monotones vanish; those ratios
    are reported as +inf and cannot attain the minimum.  Ties in the
    argmin go to the lowest index.
    """
    ei = initial_monotones(inst, c)
    ef = final_monotones(c)
    ratios = tuple(a / b if b > 0.0 else math.inf for a, b in zip(ei, ef))
    minimum = min(ratios)
    branch = Branch.LOW_C if c <= inst.alpha else Branch.HIGH_C
    return RatioProfile(c, branch, *ratios, minimum, ratios.index(minimum) + 1)


def catalyzed_probability(inst: ConcentrationInstance, c: float) -> float:
    """Success probability with the rank-2 catalyst (c, 1-c) attached."""
    return min(1.0, ratio_profile(inst, c).minimum)


def optimal_catalyst(inst: ConcentrationInstance) -> CatalystResult:
    """Best rank-2 catalyst parameter and the probability it achieves.

    In the deterministic regime (2 (1 - alpha^N) >= 1) nothing can be
    improved.  A single copy is a two-qubit to two-qubit conversion where
    catalysis provably cannot help: the fourth ratio pins the probability
    at the baseline 2 (1 - alpha) for every c, so no optimizer is
    reported there either.  Otherwise c_opt solves r2 = r3 on the low
    branch,

        2 x c^2 - (1 + 3 x) c + 2 x = 0,        x = alpha^N,

    taking the root in [1/2, alpha); the other root exceeds 1.
    """
    x = inst.alpha ** inst.n_copies
    baseline = 2.0 * (1.0 - x)
    if baseline >= 1.0:
        return CatalystResult(None, 1.0, 1.0, 1.0, True)
    if inst.n_copies == 1:
        return CatalystResult(None, baseline, baseline, 1.0, False)
    if baseline == 0.0:
        # alpha = 1: a product state concentrates with probability zero.
        return CatalystResult(None, 0.0, 0.0, 1.0, False)
    # (1 + 3x)^2 - 16 x^2 factored; stays non-negative for x <= 1.
    disc = (1.0 + 7.0 * x) * (1.0 - x)
    c_opt = (1.0 + 3.0 * x - math.sqrt(disc)) / (4.0 * x)
    p = (1.0 - x) / (1.0 - c_opt)
    assert abs(p - catalyzed_probability(inst, c_opt)) <= 1e-12
    assert 0.5 <= c_opt < inst.alpha
    return CatalystResult(c_opt, p, baseline, p / baseline, False)


def boost_sweep(alphas: Sequence[float], n_values: Sequence[int]) -> list[tuple[float, int, float]]:
    """Catalyzed-over-baseline probability ratio on an (alpha, N) grid.

    Deterministic grid points report boost = 1; rows are grouped by N.
    """
    rows: list[tuple[float, int, float]] = []
    for n in n_values:
        for a in alphas:
            res = optimal_catalyst(ConcentrationInstance(float(a), int(n)))
            rows.append((float(a), int(n), res.boost))
    return rows
