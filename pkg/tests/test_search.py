"""Grid and simplex catalyst searches against the closed-form optimum."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from catconc import (
    ConcentrationInstance,
    DeterministicRegime,
    DomainError,
    RankKCatalyst,
    SearchConfig,
    evaluate_catalyst,
    grid_search_rank2,
    make_spectrum,
    optimal_catalyst,
    simplex_search_rank_k,
)

from _oracle import brute_vidal, expand, kron_power

FAST = SearchConfig(grid_step=1e-3)


class TestConfig:
    def test_defaults(self):
        cfg = SearchConfig()
        assert cfg.grid_step == 1e-4
        assert cfg.restarts == 8
        assert cfg.seed == 42

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"grid_step": 0.0},
            {"grid_step": 0.2},
            {"simplex_tolerance": 0.0},
            {"max_iterations": 0},
            {"restarts": 0},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(DomainError):
            SearchConfig(**kwargs)


class TestEvaluate:
    def test_footnote_rank3_value(self):
        inst = ConcentrationInstance(0.8, 2)
        cat = make_spectrum((0.5, 0.35, 0.15))
        assert abs(evaluate_catalyst(inst, cat) - 0.906666666667) <= 1e-9

    def test_trivial_catalyst_recovers_baseline(self):
        inst = ConcentrationInstance(0.85, 2)
        assert abs(evaluate_catalyst(inst, make_spectrum((1.0,))) - 0.555) <= 1e-12

    @given(
        st.floats(0.72, 0.99),
        st.integers(1, 4),
        st.lists(st.floats(0.05, 1.0), min_size=1, max_size=4),
    )
    def test_matches_dense_oracle(self, alpha, n, ws):
        total = sum(ws)
        cat = make_spectrum(tuple(w / total for w in ws))
        got = evaluate_catalyst(ConcentrationInstance(alpha, n), cat)
        flat = expand(cat)
        want = brute_vidal(
            np.kron(kron_power(alpha, n), np.array(flat)),
            np.kron(np.array([0.5, 0.5]), np.array(flat)),
        )
        assert abs(got - want) <= 1e-12


class TestGridSearch:
    def test_rejects_deterministic(self):
        with pytest.raises(DeterministicRegime):
            grid_search_rank2(ConcentrationInstance(0.7, 2))

    def test_finds_closed_form_optimum(self):
        inst = ConcentrationInstance(0.85, 2)
        closed = optimal_catalyst(inst)
        found = grid_search_rank2(inst, FAST)
        assert found.converged
        assert abs(found.spectrum.entries[0][0] - closed.c_opt) <= 1e-3
        assert found.probability <= closed.p_catalyzed + 1e-12
        # kinked peak: the probability gap is first-order in the grid offset
        assert found.probability >= closed.p_catalyzed - 5e-3

    def test_grid_covers_both_endpoints(self):
        # step 0.1 puts points exactly at 0.5, 0.6, ..., 0.9
        inst = ConcentrationInstance(0.99, 2)
        found = grid_search_rank2(inst, SearchConfig(grid_step=0.1))
        assert abs(found.spectrum.entries[0][0] - 0.9) <= 1e-12

    def test_single_copy_objective_is_flat(self):
        # a single copy gains nothing from any catalyst; any argmax is
        # fine but the value must be the uncatalyzed 2 (1 - alpha)
        found = grid_search_rank2(ConcentrationInstance(0.9, 1), SearchConfig(grid_step=0.01))
        assert abs(found.probability - 0.2) <= 1e-12

    def test_exact_ties_break_toward_lowest_c(self, monkeypatch):
        monkeypatch.setattr(
            "catconc.catalyst_search.vidal_probability", lambda pair: 0.25
        )
        found = grid_search_rank2(ConcentrationInstance(0.9, 2), SearchConfig(grid_step=0.01))
        assert found.spectrum.entries == ((0.5, 2),)
        assert found.probability == 0.25


class TestSimplexSearch:
    def test_rejects_rank_below_two(self):
        with pytest.raises(DomainError):
            simplex_search_rank_k(ConcentrationInstance(0.85, 2), 1)

    def test_rejects_deterministic(self):
        with pytest.raises(DeterministicRegime):
            simplex_search_rank_k(ConcentrationInstance(0.7, 2), 3)

    def test_rank2_matches_closed_form(self):
        for alpha, n in ((0.8, 2), (0.85, 2), (0.99, 6)):
            inst = ConcentrationInstance(alpha, n)
            found = simplex_search_rank_k(inst, 2)
            closed = optimal_catalyst(inst)
            assert found.converged
            assert abs(found.probability - closed.p_catalyzed) <= 1e-6

    def test_rank3_beats_rank2_on_footnote_instance(self):
        inst = ConcentrationInstance(0.8, 2)
        found = simplex_search_rank_k(inst, 3)
        assert isinstance(found, RankKCatalyst)
        assert found.converged
        assert found.probability >= 0.906666666667 - 1e-9
        assert found.probability > optimal_catalyst(inst).p_catalyzed
        assert found.spectrum.total_dimension <= 3
        assert abs(found.spectrum.weight() - 1.0) <= 1e-9

    def test_result_is_consistent(self):
        inst = ConcentrationInstance(0.85, 2)
        found = simplex_search_rank_k(inst, 3)
        assert abs(evaluate_catalyst(inst, found.spectrum) - found.probability) <= 1e-9

    def test_seed_determinism(self):
        inst = ConcentrationInstance(0.9, 3)
        a = simplex_search_rank_k(inst, 4, SearchConfig(seed=7))
        b = simplex_search_rank_k(inst, 4, SearchConfig(seed=7))
        assert a == b

    def test_single_restart_still_feasible(self):
        inst = ConcentrationInstance(0.85, 2)
        found = simplex_search_rank_k(inst, 3, SearchConfig(restarts=1))
        assert 0.0 <= found.probability <= 1.0
        assert abs(found.spectrum.weight() - 1.0) <= 1e-9

    def test_tiny_budget_reports_nonconvergence(self):
        inst = ConcentrationInstance(0.85, 2)
        found = simplex_search_rank_k(
            inst, 5, SearchConfig(max_iterations=3, restarts=2)
        )
        assert not found.converged
        assert 0.0 <= found.probability <= 1.0
        # the best feasible point so far is still a valid spectrum
        assert abs(found.spectrum.weight() - 1.0) <= 1e-9
