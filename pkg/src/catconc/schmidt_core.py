"""Ordered Schmidt spectra and exact transformation probabilities.

Spectra are kept in compressed (value, multiplicity) form so that the
spectrum of n copies of a two-qubit state costs O(n) to build and query
instead of O(2^n).  The majorization test and the minimum-monotone-ratio
probability walk the compressed form directly: between multiplicity
boundaries the partial sums are linear in the index, so only boundary
indices ever need to be inspected.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, EmptyInput, NegativeEntry, NotNormalized

NORMALIZATION_TOL = 1e-9
MERGE_TOL = 1e-12
MAJORIZATION_TOL = 1e-12


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Non-increasing squared Schmidt coefficients with multiplicities.

    ``entries`` holds (value, multiplicity) pairs with values strictly
    decreasing and all positive.  Zero weight never gets an entry, so
    ``total_dimension`` doubles as the rank.
    """

    entries: tuple[tuple[float, int], ...]

    @property
    def total_dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def weight(self) -> float:
        """Total probability mass (1 up to floating-point drift)."""
        return math.fsum(v * m for v, m in self.entries)


@dataclass(frozen=True)
class TransformPair:
    """Initial and final spectra of a candidate transformation."""

    initial: SchmidtSpectrum
    final: SchmidtSpectrum


def _canonical(pairs: Iterable[tuple[float, int]], merge_tol: float) -> tuple[tuple[float, int], ...]:
    # Sort descending, pool equal (or closer than merge_tol) values, drop zeros.
    # The near-miss merge uses the multiplicity-weighted mean so the total
    # weight is preserved; bitwise-equal values skip the averaging entirely.
    ordered = sorted(((v, m) for v, m in pairs if v > 0.0), reverse=True)
    out: list[list[float]] = []
    for v, m in ordered:
        if out and out[-1][0] == v:
            out[-1][1] += m
        elif out and out[-1][0] - v <= merge_tol:
            ov, om = out[-1]
            out[-1][0] = (ov * om + v * m) / (om + m)
            out[-1][1] = om + m
        else:
            out.append([v, m])
    return tuple((v, int(m)) for v, m in out)


def make_spectrum(values: Sequence[float]) -> SchmidtSpectrum:
    """Canonicalize raw squared Schmidt coefficients.

    Sorts non-increasingly, merges equal values into multiplicities and
    renormalizes when the total weight is within 1e-9 of one; a larger
    deviation is treated as a user error.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyInput("spectrum needs at least one value")
    if any(v < 0.0 for v in vals):
        raise NegativeEntry(f"negative squared coefficient: {min(vals)}")
    total = math.fsum(vals)
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"weights sum to {total!r}, expected 1 within {NORMALIZATION_TOL}")
    if total != 1.0:
        vals = [v / total for v in vals]
    entries = _canonical(((v, 1) for v in vals), 0.0)
    if not entries:
        raise EmptyInput("spectrum needs at least one positive value")
    return SchmidtSpectrum(entries)


def n_copy_spectrum(alpha: float, n: int) -> SchmidtSpectrum:
    """Spectrum of n copies of a two-qubit state with larger weight alpha.

    Entry p carries value alpha^(n-p) (1-alpha)^p with multiplicity
    C(n, p); the 2^n-term tensor power is never expanded.
    """
    if not 0.5 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0.5, 1], got {alpha}")
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    beta = 1.0 - alpha
    pairs = ((alpha ** (n - p) * beta ** p, math.comb(n, p)) for p in range(n + 1))
    return SchmidtSpectrum(_canonical(pairs, 0.0))


def tensor(a: SchmidtSpectrum, b: SchmidtSpectrum) -> SchmidtSpectrum:
    """Spectrum of the joint state; values multiply pairwise.

    Products of distinct inputs may collide numerically, so values within
    1e-12 of each other are pooled; this keeps ranks from inflating.
    """
    pairs = ((va * vb, ma * mb) for va, ma in a.entries for vb, mb in b.entries)
    return SchmidtSpectrum(_canonical(pairs, MERGE_TOL))


_BELL = SchmidtSpectrum(((0.5, 2),))


def bell_spectrum() -> SchmidtSpectrum:
    """Spectrum (1/2, 1/2) of a maximally entangled two-qubit state."""
    return _BELL


def _cumulatives(spec: SchmidtSpectrum) -> tuple[list[int], list[float]]:
    counts: list[int] = []
    sums: list[float] = []
    c = 0
    s = 0.0
    for v, m in spec.entries:
        c += m
        s += v * m
        counts.append(c)
        sums.append(s)
    return counts, sums


def _partial_sum(spec: SchmidtSpectrum, counts: list[int], sums: list[float], k: int) -> float:
    # Sum of the k largest coefficients, counted with multiplicity.
    if k <= 0:
        return 0.0
    if k >= counts[-1]:
        return sums[-1]
    i = bisect_left(counts, k)
    prev_c = counts[i - 1] if i else 0
    prev_s = sums[i - 1] if i else 0.0
    return prev_s + spec.entries[i][0] * (k - prev_c)


def monotone_E(v: SchmidtSpectrum, l: int) -> float:
    """1 minus the sum of the (l-1) largest squared coefficients.

    E_1 is always 1, the sequence is non-increasing in l, and beyond the
    rank the monotone is exactly zero.
    """
    if l < 1:
        raise DomainError(f"monotone index must be >= 1, got {l}")
    if l == 1:
        return 1.0
    if l > v.total_dimension:
        return 0.0
    counts, sums = _cumulatives(v)
    return max(0.0, 1.0 - _partial_sum(v, counts, sums, l - 1))


def majorizes(pair: TransformPair) -> bool:
    """True when every initial partial sum is <= the final one (tol 1e-12).

    The shorter spectrum is implicitly padded with zeros.  The partial-sum
    gap is linear in k between multiplicity boundaries of either spectrum,
    so checking the union of boundaries is exhaustive.
    """
    ci, si = _cumulatives(pair.initial)
    cf, sf = _cumulatives(pair.final)
    for k in sorted(set(ci) | set(cf)):
        gap = _partial_sum(pair.initial, ci, si, k) - _partial_sum(pair.final, cf, sf, k)
        if gap > MAJORIZATION_TOL:
            return False
    return True


def vidal_probability(pair: TransformPair) -> float:
    """Best conversion probability: the minimum ratio E_l(initial)/E_l(final).

    Ratios with a vanishing final monotone are +inf and never attain the
    minimum, so only l up to the final rank is inspected.  On each stretch
    between multiplicity boundaries the ratio is a quotient of two linear
    functions of l, hence monotone, so boundary indices are enough.
    """
    if majorizes(pair):
        return 1.0
    ci, si = _cumulatives(pair.initial)
    cf, sf = _cumulatives(pair.final)
    top = pair.final.total_dimension - 1  # l - 1 may not reach the final rank
    cand = {0, top}
    cand.update(k for k in ci if k <= top)
    cand.update(k for k in cf if k <= top)
    best = math.inf
    for m in cand:
        ef = 1.0 - _partial_sum(pair.final, cf, sf, m)
        if ef <= 0.0:
            continue
        ei = max(0.0, 1.0 - _partial_sum(pair.initial, ci, si, m))
        ratio = ei / ef
        if ratio < best:
            best = ratio
    return min(max(best, 0.0), 1.0)


def remains_incommensurate(alpha: float, n: int, catalyst: SchmidtSpectrum) -> bool:
    """True when the catalyst still fails to make n-copy concentration sure.

    Only defined where the uncatalyzed conversion is probabilistic
    (alpha^n > 1/2); there the augmented pair is expected to stay
    incommensurate for every catalyst, and this predicate exists so that
    property tests can hammer on that claim.
    """
    if not 0.5 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0.5, 1], got {alpha}")
    if alpha ** n <= 0.5:
        raise DomainError(f"alpha^n = {alpha ** n} is outside the incommensurate regime")
    psi = n_copy_spectrum(alpha, n)
    pair = TransformPair(tensor(psi, catalyst), tensor(_BELL, catalyst))
    return not majorizes(pair)


def binary_entropy(alpha: float) -> float:
    """Von Neumann entropy -a log2 a - (1-a) log2 (1-a), with 0 log 0 = 0."""
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha in (0.0, 1.0):
        return 0.0
    beta = 1.0 - alpha
    return -alpha * math.log2(alpha) - beta * math.log2(beta)
