"""Numerical catalyst optimization on explicit spectra.

Both searches score candidates exclusively through the explicit-spectrum
probability oracle, which is what makes them usable as independent
validation of the closed forms; the analytic rank-2 optimum only sneaks
in as one of the simplex restart seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .catalysis_closed_form import ConcentrationInstance, optimal_catalyst
from .errors import DeterministicRegime, DomainError
from .schmidt_core import (
    SchmidtSpectrum,
    TransformPair,
    bell_spectrum,
    make_spectrum,
    n_copy_spectrum,
    tensor,
    vidal_probability,
)


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the rank-2 grid scan and the rank-k simplex search."""

    grid_step: float = 1e-4
    simplex_tolerance: float = 1e-9
    max_iterations: int = 2000
    restarts: int = 8
    seed: int = 42

    def __post_init__(self) -> None:
        if not 0.0 < self.grid_step <= 0.1:
            raise DomainError(f"grid_step must lie in (0, 0.1], got {self.grid_step}")
        if self.simplex_tolerance <= 0.0:
            raise DomainError(f"simplex_tolerance must be positive, got {self.simplex_tolerance}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.restarts < 1:
            raise DomainError(f"restarts must be >= 1, got {self.restarts}")


@dataclass(frozen=True)
class RankKCatalyst:
    """A catalyst spectrum with the probability it achieves on the instance."""

    spectrum: SchmidtSpectrum
    probability: float
    converged: bool = True


def _rank2(c: float) -> SchmidtSpectrum:
    if c >= 1.0:
        return SchmidtSpectrum(((1.0, 1),))
    if c == 0.5:
        return SchmidtSpectrum(((0.5, 2),))
    return SchmidtSpectrum(((c, 1), (1.0 - c, 1)))


def evaluate_catalyst(inst: ConcentrationInstance, catalyst: SchmidtSpectrum) -> float:
    """Success probability of n-copy concentration with the catalyst attached."""
    psi = n_copy_spectrum(inst.alpha, inst.n_copies)
    pair = TransformPair(tensor(psi, catalyst), tensor(bell_spectrum(), catalyst))
    return vidal_probability(pair)


def _require_probabilistic(inst: ConcentrationInstance) -> None:
    if inst.alpha ** inst.n_copies <= 0.5:
        raise DeterministicRegime(
            f"(alpha, N) = ({inst.alpha}, {inst.n_copies}) already converts with certainty"
        )


def grid_search_rank2(inst: ConcentrationInstance, cfg: SearchConfig = SearchConfig()) -> RankKCatalyst:
    """Scan c over [1/2, 1 - grid_step] and keep the argmax.

    The objective goes through the explicit-spectrum oracle, never the
    closed form.  Ties break toward the lowest c.
    """
    _require_probabilistic(inst)
    psi = n_copy_spectrum(inst.alpha, inst.n_copies)
    bell = bell_spectrum()
    step = cfg.grid_step
    count = int(math.floor((0.5 - step) / step + 1e-6)) + 1
    best_c = 0.5
    best_p = -1.0
    for i in range(count):
        c = 0.5 + i * step
        cat = _rank2(c)
        p = vidal_probability(TransformPair(tensor(psi, cat), tensor(bell, cat)))
        if p > best_p:
            best_p = p
            best_c = c
    return RankKCatalyst(_rank2(best_c), best_p, True)


def simplex_search_rank_k(
    inst: ConcentrationInstance, k: int, cfg: SearchConfig = SearchConfig()
) -> RankKCatalyst:
    """Multi-restart Nelder-Mead over ordered rank-k catalyst spectra.

    A point is the first k-1 weights; the last weight closes the simplex.
    Points with a negative weight are scored by their violation, which
    pushes the search back inside.  Candidates are sorted before being
    evaluated because the objective depends only on the ordered spectrum.
    Restart seeds: the uniform spectrum, the rank-2 optimum padded with a
    tiny tail, then seeded random draws.  When the iteration budget runs
    out first, the best point found so far is still returned and flagged
    as unconverged.
    """
    if k < 2:
        raise DomainError(f"catalyst rank must be >= 2, got {k}")
    _require_probabilistic(inst)
    psi = n_copy_spectrum(inst.alpha, inst.n_copies)
    bell = bell_spectrum()

    def objective(z: np.ndarray) -> float:
        v = np.append(z, 1.0 - float(z.sum()))
        if (v < 0.0).any():
            return 1.0 - float(v[v < 0.0].sum())
        cat = make_spectrum(sorted((float(t) for t in v), reverse=True))
        return -vidal_probability(TransformPair(tensor(psi, cat), tensor(bell, cat)))

    rng = np.random.default_rng(cfg.seed)
    closed = optimal_catalyst(inst)
    c2 = closed.c_opt if closed.c_opt is not None else 0.75
    padded = np.full(k, 1e-6)
    padded[0] = c2
    padded[1] = 1.0 - c2
    padded /= padded.sum()
    seeds = [np.full(k - 1, 1.0 / k), np.sort(padded)[::-1][: k - 1].copy()]
    while len(seeds) < cfg.restarts:
        seeds.append(np.sort(rng.dirichlet(np.ones(k)))[::-1][: k - 1].copy())
    seeds = seeds[: cfg.restarts]

    best: tuple[float, tuple[float, ...], bool] | None = None
    for x0 in seeds:
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": cfg.max_iterations,
                "maxfev": cfg.max_iterations,
                "xatol": 1e-10,
                "fatol": cfg.simplex_tolerance,
            },
        )
        p = -float(res.fun)
        if p < 0.0:  # never left the infeasible region; cannot happen from a feasible seed
            continue
        vals = list(res.x) + [1.0 - float(np.sum(res.x))]
        key = tuple(sorted((float(t) for t in vals), reverse=True))
        if best is None or p > best[0] or (p == best[0] and key < best[1]):
            best = (p, key, bool(res.success))
    assert best is not None
    return RankKCatalyst(make_spectrum(best[1]), best[0], best[2])
