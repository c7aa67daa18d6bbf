"""Cross-validation suites: closed forms against the explicit-spectrum oracle.

Each suite reports how many of its checks passed; the CLI ``verify``
command prints the tallies and fails the process when anything is off.
All randomness is seeded, so a given configuration always checks the
same points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalysis_closed_form import (
    ConcentrationInstance,
    catalyzed_probability,
    initial_monotones,
    lqcc_probability,
    optimal_catalyst,
    ratio_profile,
)
from .catalyst_search import evaluate_catalyst
from .schmidt_core import (
    TransformPair,
    bell_spectrum,
    make_spectrum,
    monotone_E,
    n_copy_spectrum,
    remains_incommensurate,
    tensor,
    vidal_probability,
)

EQUIV_TOL = 1e-12

# (alpha, N) pairs in the probabilistic regime used by the sampled suites.
_SAMPLE_PAIRS = tuple(
    (a, n)
    for a in (0.75, 0.8, 0.85, 0.9, 0.95, 0.99)
    for n in (2, 3, 4, 6)
    if a ** n > 0.5
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def check_equivalence(grid_density: int = 20) -> SuiteResult:
    """Closed-form catalyzed probability vs the oracle on explicit spectra."""
    alphas = np.linspace(0.75, 0.99, grid_density)
    cs = np.linspace(0.51, 0.99, (3 * grid_density) // 2)
    passed = total = 0
    for n in range(2, 7):
        for a in alphas:
            inst = ConcentrationInstance(float(a), n)
            for c in cs:
                total += 1
                closed = catalyzed_probability(inst, float(c))
                oracle = evaluate_catalyst(inst, make_spectrum((float(c), 1.0 - float(c))))
                passed += abs(closed - oracle) <= EQUIV_TOL
    return SuiteResult("equivalence", passed, total)


def check_monotone_agreement() -> SuiteResult:
    """Piecewise monotone expressions vs monotone_E on the joint spectrum."""
    passed = total = 0
    for a in np.linspace(0.72, 0.999, 8):
        for n in range(1, 6):
            inst = ConcentrationInstance(float(a), n)
            joint_base = n_copy_spectrum(float(a), n)
            for c in np.linspace(0.5, 1.0, 10):
                total += 1
                cat = make_spectrum((float(c), 1.0 - float(c))) if c < 1.0 else make_spectrum((1.0,))
                joint = tensor(joint_base, cat)
                formula = initial_monotones(inst, float(c))
                direct = tuple(monotone_E(joint, l) for l in range(1, 5))
                passed += max(abs(f - d) for f, d in zip(formula, direct)) <= EQUIV_TOL
    return SuiteResult("monotone-agreement", passed, total)


def check_baseline_oracle() -> SuiteResult:
    """Uncatalyzed oracle probability vs min(1, 2 (1 - alpha^n))."""
    passed = total = 0
    bell = bell_spectrum()
    for a in np.arange(0.51, 1.0, 0.02):
        for n in range(1, 9):
            total += 1
            p = vidal_probability(TransformPair(n_copy_spectrum(float(a), n), bell))
            expected = min(1.0, 2.0 * (1.0 - float(a) ** n))
            passed += abs(p - expected) <= EQUIV_TOL
    return SuiteResult("baseline-oracle", passed, total)


def check_branch_continuity() -> SuiteResult:
    """Low and high piecewise expressions agree at the seam c = alpha."""
    passed = total = 0
    for a in np.linspace(0.72, 0.99, 12):
        a = float(a)
        for n in range(1, 7):
            total += 1
            low = initial_monotones(ConcentrationInstance(a, n), a)
            y = a ** (n - 1)
            e4 = (1.0 - a) * (1.0 - a) if n == 1 else 1.0 - a * y - a * y * (1.0 - a)
            high = (1.0, 1.0 - a * a ** n, 1.0 - a * y, e4)
            passed += max(abs(l - h) for l, h in zip(low, high)) <= EQUIV_TOL
    return SuiteResult("branch-continuity", passed, total)


def check_monotonicity(points: int = 120) -> SuiteResult:
    """r2 falls and r3 rises strictly with c on every sampled instance."""
    passed = total = 0
    for a, n in _SAMPLE_PAIRS:
        inst = ConcentrationInstance(a, n)
        profiles = [ratio_profile(inst, float(c)) for c in np.linspace(0.5, 0.999, points)]
        total += 2
        passed += all(q.r2 < p.r2 for p, q in zip(profiles, profiles[1:]))
        passed += all(q.r3 > p.r3 for p, q in zip(profiles, profiles[1:]))
    return SuiteResult("monotonicity", passed, total)


def check_r4_dominance(points: int = 120) -> SuiteResult:
    """r4 never undercuts min(r2, r3) in the probabilistic regime."""
    passed = total = 0
    for a, n in _SAMPLE_PAIRS:
        inst = ConcentrationInstance(a, n)
        for c in np.linspace(0.5, 0.999, points):
            total += 1
            prof = ratio_profile(inst, float(c))
            passed += min(prof.r2, prof.r3) <= prof.r4 + EQUIV_TOL
    return SuiteResult("r4-dominance", passed, total)


def check_copt_monotone() -> SuiteResult:
    """c_opt and boost rise with alpha; at fixed alpha the boost falls with N."""
    passed = total = 0
    for n in range(2, 7):
        alphas = np.linspace(0.5 ** (1.0 / n) + 5e-3, 0.995, 40)
        res = [optimal_catalyst(ConcentrationInstance(float(a), n)) for a in alphas]
        total += 2
        passed += all(q.c_opt > p.c_opt for p, q in zip(res, res[1:]))
        passed += all(q.boost >= p.boost - EQUIV_TOL for p, q in zip(res, res[1:]))
    series = [optimal_catalyst(ConcentrationInstance(0.99, n)).boost for n in range(2, 9)]
    total += 1
    passed += all(p > q for p, q in zip(series, series[1:]))
    return SuiteResult("copt-monotonicity", passed, total)


def check_optimality(cases: int = 1000, seed: int = 42) -> SuiteResult:
    """No random c beats the closed-form optimum."""
    rng = np.random.default_rng(seed)
    insts = [(0.8, 2), (0.85, 2), (0.9, 3), (0.95, 4), (0.99, 6)]
    best = {
        pair: optimal_catalyst(ConcentrationInstance(*pair)).p_catalyzed for pair in insts
    }
    passed = 0
    for i in range(cases):
        pair = insts[i % len(insts)]
        c = float(rng.uniform(0.5, 0.9999))
        passed += catalyzed_probability(ConcentrationInstance(*pair), c) <= best[pair] + EQUIV_TOL
    return SuiteResult("optimality", passed, cases)


def check_proposition(cases: int = 200, seed: int = 42) -> SuiteResult:
    """Random catalysts never make an incommensurate instance deterministic."""
    rng = np.random.default_rng(seed)
    passed = 0
    for _ in range(cases):
        n = int(rng.integers(1, 7))
        a = float(rng.uniform(0.5 ** (1.0 / n) + 1e-3, 0.999))
        k = int(rng.integers(2, 5))
        weights = np.sort(rng.dirichlet(np.ones(k)))[::-1]
        weights = np.maximum(weights, 1e-9)
        cat = make_spectrum(tuple(float(w) / float(weights.sum()) for w in weights))
        passed += remains_incommensurate(a, n, cat)
    return SuiteResult("proposition", passed, cases)


def check_universal_catalyst(cases: int = 500, seed: int = 42) -> SuiteResult:
    """Every entangled rank-2 catalyst strictly beats the baseline (N >= 2)."""
    rng = np.random.default_rng(seed + 1)
    passed = 0
    for _ in range(cases):
        n = int(rng.integers(2, 7))
        a = float(rng.uniform(0.5 ** (1.0 / n) + 1e-3, 0.999))
        c = float(rng.uniform(0.505, 0.995))
        inst = ConcentrationInstance(a, n)
        p = evaluate_catalyst(inst, make_spectrum((c, 1.0 - c)))
        passed += p > lqcc_probability(inst)
    return SuiteResult("universal-catalyst", passed, cases)


def run_all(grid_density: int = 20, seed: int = 42) -> list[SuiteResult]:
    """Every suite, in a stable order."""
    return [
        check_equivalence(grid_density),
        check_monotone_agreement(),
        check_baseline_oracle(),
        check_branch_continuity(),
        check_monotonicity(),
        check_r4_dominance(),
        check_copt_monotone(),
        check_optimality(seed=seed),
        check_proposition(seed=seed),
        check_universal_catalyst(seed=seed),
    ]
