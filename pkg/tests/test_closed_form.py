"""Closed-form monotones, ratio profiles, and the optimal rank-2 catalyst."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catconc import (
    Branch,
    ConcentrationInstance,
    DomainError,
    boost_sweep,
    catalyzed_probability,
    final_monotones,
    initial_monotones,
    lqcc_probability,
    make_spectrum,
    monotone_E,
    n_copy_spectrum,
    optimal_catalyst,
    ratio_profile,
    tensor,
)

alphas = st.floats(0.5, 1.0)
cs = st.floats(0.5, 1.0)
copy_counts = st.integers(1, 6)

# (alpha, n) -> (c_opt, p_catalyzed, boost), frozen from the dense oracle
OPTIMA = {
    (0.80, 2): (0.591967191685, 0.882281994643, 1.22539165923),
    (0.85, 2): (0.647398972785, 0.787008484326, 1.41803330509),
    (0.99, 2): (0.904190973087, 0.207704854555, 5.21871493856),
    (0.99, 3): (0.883702397239, 0.255387895322, 4.29931475913),
    (0.99, 4): (0.866674642163, 0.295547603541, 3.75022432424),
    (0.99, 5): (0.851844020067, 0.330799675599, 3.37482159158),
    (0.99, 6): (0.838564426743, 0.362496625857, 3.09721079383),
}


def rank2(c: float):
    return make_spectrum((c, 1.0 - c)) if c < 1.0 else make_spectrum((1.0,))


class TestInstance:
    def test_domain(self):
        with pytest.raises(DomainError):
            ConcentrationInstance(0.49, 2)
        with pytest.raises(DomainError):
            ConcentrationInstance(1.01, 2)
        with pytest.raises(DomainError):
            ConcentrationInstance(0.8, 0)


class TestBaseline:
    def test_known_values(self):
        assert abs(lqcc_probability(ConcentrationInstance(0.85, 2)) - 0.555) <= 1e-12
        assert lqcc_probability(ConcentrationInstance(0.7, 2)) == 1.0
        assert abs(lqcc_probability(ConcentrationInstance(0.99, 6)) - 0.117039701198) <= 1e-9

    @given(alphas, copy_counts)
    def test_formula(self, alpha, n):
        want = min(1.0, 2.0 * (1.0 - alpha ** n))
        assert abs(lqcc_probability(ConcentrationInstance(alpha, n)) - want) <= 1e-15


class TestMonotoneFormulas:
    def test_final_values(self):
        assert final_monotones(0.6) == (1.0, 0.7, 0.4, 0.2)

    def test_final_rejects_bad_c(self):
        with pytest.raises(DomainError):
            final_monotones(0.4)
        with pytest.raises(DomainError):
            final_monotones(1.2)

    def test_initial_values_low_branch(self):
        inst = ConcentrationInstance(0.85, 2)
        e1, e2, e3, e4 = initial_monotones(inst, 0.5)
        assert e1 == 1.0
        assert abs(e2 - 0.63875) <= 1e-12
        assert abs(e3 - 0.2775) <= 1e-12
        assert abs(e4 - 0.21375) <= 1e-12

    @given(alphas, copy_counts, cs)
    def test_agrees_with_joint_spectrum(self, alpha, n, c):
        inst = ConcentrationInstance(alpha, n)
        joint = tensor(n_copy_spectrum(alpha, n), rank2(c))
        formula = initial_monotones(inst, c)
        direct = tuple(monotone_E(joint, l) for l in range(1, 5))
        # 1e-10 rather than 1e-12: near-coincident joint values merge,
        # nudging partial sums; the strict grid check lives in verification
        assert max(abs(f - d) for f, d in zip(formula, direct)) <= 1e-10


class TestRatioProfile:
    def test_frozen_low_branch_point(self):
        prof = ratio_profile(ConcentrationInstance(0.85, 2), 0.5)
        assert prof.branch is Branch.LOW_C
        assert prof.r1 == 1.0
        assert abs(prof.r2 - 0.851666666667) <= 1e-9
        assert abs(prof.r3 - 0.555) <= 1e-12
        assert abs(prof.r4 - 0.855) <= 1e-12
        assert prof.minimum == prof.r3
        assert prof.argmin_index == 3

    def test_branch_switch(self):
        inst = ConcentrationInstance(0.85, 2)
        assert ratio_profile(inst, 0.85).branch is Branch.LOW_C
        assert ratio_profile(inst, 0.9).branch is Branch.HIGH_C

    def test_rank1_catalyst_has_infinite_tail_ratios(self):
        prof = ratio_profile(ConcentrationInstance(0.85, 2), 1.0)
        assert math.isinf(prof.r3)
        assert math.isinf(prof.r4)
        assert abs(prof.minimum - 0.555) <= 1e-12


class TestCatalyzedProbability:
    def test_frozen_high_branch_value(self):
        got = catalyzed_probability(ConcentrationInstance(0.85, 2), 0.9)
        assert abs(got - 0.635909090909) <= 1e-9

    def test_bell_catalyst_is_neutral(self):
        for alpha, n in ((0.85, 2), (0.9, 3), (0.99, 6)):
            inst = ConcentrationInstance(alpha, n)
            got = catalyzed_probability(inst, 0.5)
            assert abs(got - lqcc_probability(inst)) <= 1e-12

    def test_rank1_catalyst_is_neutral(self):
        inst = ConcentrationInstance(0.9, 4)
        assert abs(catalyzed_probability(inst, 1.0) - lqcc_probability(inst)) <= 1e-12

    def test_single_copy_gains_nothing(self):
        inst = ConcentrationInstance(0.9, 1)
        for c in (0.5, 0.6, 0.75, 0.9, 0.99):
            assert abs(catalyzed_probability(inst, c) - 0.2) <= 1e-12

    @given(alphas, copy_counts, cs)
    def test_never_below_baseline(self, alpha, n, c):
        inst = ConcentrationInstance(alpha, n)
        assert catalyzed_probability(inst, c) >= lqcc_probability(inst) - 1e-12


class TestOptimalCatalyst:
    def test_frozen_optima(self):
        for (alpha, n), (c_opt, p, boost) in OPTIMA.items():
            res = optimal_catalyst(ConcentrationInstance(alpha, n))
            assert abs(res.c_opt - c_opt) <= 1e-9
            assert abs(res.p_catalyzed - p) <= 1e-9
            assert abs(res.boost - boost) <= 1e-9
            assert not res.deterministic

    def test_deterministic_regime(self):
        res = optimal_catalyst(ConcentrationInstance(0.7, 2))
        assert res == type(res)(None, 1.0, 1.0, 1.0, True)

    def test_single_copy(self):
        res = optimal_catalyst(ConcentrationInstance(0.9, 1))
        assert res.c_opt is None
        assert abs(res.p_catalyzed - 0.2) <= 1e-15
        assert res.boost == 1.0
        assert not res.deterministic

    def test_product_state(self):
        res = optimal_catalyst(ConcentrationInstance(1.0, 3))
        assert res.c_opt is None
        assert res.p_catalyzed == 0.0
        assert res.boost == 1.0
        assert not res.deterministic

    @given(st.floats(0.82, 0.9999), st.integers(2, 6))
    def test_invariants(self, alpha, n):
        inst = ConcentrationInstance(alpha, n)
        res = optimal_catalyst(inst)
        if res.deterministic:
            assert alpha ** n <= 0.5 + 1e-12
            return
        assert res.c_opt is not None
        assert 0.5 <= res.c_opt < alpha
        assert res.p_catalyzed >= res.p_baseline - 1e-12
        assert abs(res.boost - res.p_catalyzed / res.p_baseline) <= 1e-12
        assert abs(res.p_catalyzed - catalyzed_probability(inst, res.c_opt)) <= 1e-12

    @given(st.floats(0.82, 0.9999), st.integers(2, 6), st.floats(-0.02, 0.02))
    def test_locally_optimal(self, alpha, n, delta):
        inst = ConcentrationInstance(alpha, n)
        res = optimal_catalyst(inst)
        if res.deterministic or res.c_opt is None:
            return
        c = min(1.0, max(0.5, res.c_opt + delta))
        assert catalyzed_probability(inst, c) <= res.p_catalyzed + 1e-12


class TestBoostSweep:
    def test_row_layout(self):
        rows = boost_sweep([0.8, 0.9], [2, 3])
        assert [(a, n) for a, n, _ in rows] == [(0.8, 2), (0.9, 2), (0.8, 3), (0.9, 3)]

    def test_matches_pointwise(self):
        rows = boost_sweep([0.85], [2])
        assert abs(rows[0][2] - 1.41803330509) <= 1e-9

    def test_deterministic_region_is_flat(self):
        rows = boost_sweep([0.6, 0.65, 0.7], [2])
        assert all(b == 1.0 for _, _, b in rows)
