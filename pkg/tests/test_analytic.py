import math

import numpy as np
import pytest

from conftest import random_schmidt
from rpelab import analytic
from rpelab.analytic import (
    advantage_interval,
    average_negativity,
    condition_R,
    condition_dim,
    condition_final,
    negativity_bell,
    negativity_closed,
    negativity_pair,
    negativity_uniform_rank,
    negativity_upper_bound,
    post_state_closed,
    pt_spectrum_closed,
    threshold_fidelity,
)
from rpelab.linalg import hermitian_eigenvalues, partial_transpose_second
from rpelab.states import (
    IsoParams,
    MeasurementEnsemble,
    SchmidtVector,
    bell_measurement,
    mixed_measurement,
)

PAIR3 = SchmidtVector((0.5, 0.5, 0.0))


class TestPostState:
    def test_maximally_mixed_limit(self):
        d = 3
        rho = post_state_closed(IsoParams(d, 1.0 / d**2), PAIR3)
        assert np.abs(rho - np.eye(d * d) / d**2).max() < 1e-14

    def test_pure_limit(self):
        from rpelab.states import max_entangled

        phi = max_entangled(3)
        rho = post_state_closed(IsoParams(3, 1.0), SchmidtVector.uniform(3))
        assert np.abs(rho - np.outer(phi, phi.conj())).max() < 1e-14

    def test_unit_trace(self, rng):
        for d in (2, 3, 4):
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            assert abs(np.trace(post_state_closed(p, lam)).real - 1.0) < 1e-12

    def test_positive_semidefinite(self, rng):
        for _ in range(5):
            d = 3
            p = IsoParams(d, float(rng.uniform(1.0 / d**2, 1.0)))
            lam = random_schmidt(rng, d)
            eigs = hermitian_eigenvalues(post_state_closed(p, lam))
            assert eigs[0] >= -1e-12


class TestPtSpectrum:
    def test_multiplicity_and_trace(self, rng):
        for d in (2, 3, 4):
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            spec = pt_spectrum_closed(p, lam)
            assert len(spec.diag) == d
            assert len(spec.pairs) == d * (d - 1) // 2
            assert abs(spec.all_values().sum() - 1.0) < 1e-12

    def test_product_outcome_is_ppt(self):
        # rank one kills every sqrt(l_k l_l) split, so no eigenvalue can
        # go negative and the outcome is separable
        p = IsoParams(3, 0.9)
        lam = SchmidtVector((1.0, 0.0, 0.0))
        spec = pt_spectrum_closed(p, lam)
        assert spec.all_values()[0] >= 0.0
        for plus, minus in spec.pairs:
            assert abs(plus - minus) < 1e-15
        assert abs(spec.pairs[-1][1] - 9 * p.a**2) < 1e-15

    def test_uniform_minus_branch_value(self):
        # d=3, F=0.6, uniform: minus eigenvalue = 9a^2 + 2ab - b^2/3 = -7/300
        spec = pt_spectrum_closed(IsoParams(3, 0.6), SchmidtVector.uniform(3))
        for _, minus in spec.pairs:
            assert abs(minus - (-7.0 / 300.0)) < 1e-12

    def test_matches_eigensolver_route(self, rng):
        for d in (2, 3, 4):
            for _ in range(25):
                p = IsoParams(d, float(rng.random()))
                lam = random_schmidt(rng, d)
                closed = pt_spectrum_closed(p, lam).all_values()
                numeric = hermitian_eigenvalues(
                    partial_transpose_second(post_state_closed(p, lam), d, d)
                )
                assert np.abs(closed - numeric).max() < 1e-10


class TestNegativityClosed:
    def test_pure_uniform_is_maximal(self):
        assert abs(negativity_closed(IsoParams(3, 1.0), SchmidtVector.uniform(3)) - 1.0) < 1e-12

    def test_spot_value_uniform(self):
        val = negativity_closed(IsoParams(3, 0.6), SchmidtVector.uniform(3))
        assert abs(val - 0.07) < 1e-12

    def test_spot_value_pair(self):
        assert abs(negativity_closed(IsoParams(3, 0.56), PAIR3) - 0.0169625) < 1e-12

    def test_range(self, rng):
        for _ in range(50):
            d = int(rng.integers(2, 5))
            p = IsoParams(d, float(rng.random()))
            val = negativity_closed(p, random_schmidt(rng, d))
            assert 0.0 <= val <= 1.0 + 1e-12

    def test_zero_for_rank_one(self, rng):
        lam = SchmidtVector((1.0, 0.0, 0.0))
        for F in (0.0, 0.3, 0.7, 1.0):
            assert negativity_closed(IsoParams(3, F), lam) == 0.0


class TestUpperBound:
    def test_always_above_closed(self, rng):
        for _ in range(100):
            d = int(rng.integers(2, 5))
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            assert negativity_closed(p, lam) <= negativity_upper_bound(p, lam) + 1e-12

    def test_uniform_equality(self):
        p = IsoParams(3, 0.7)
        lam = SchmidtVector.uniform(3)
        assert abs(
            negativity_closed(p, lam) - negativity_upper_bound(p, lam)
        ) < 1e-14

    def test_strict_for_skewed_weights(self):
        p = IsoParams(2, 0.9)
        lam = SchmidtVector((0.7, 0.3))
        assert negativity_upper_bound(p, lam) > negativity_closed(p, lam)

    def test_maximally_mixed_bound_zero(self):
        d = 3
        assert negativity_upper_bound(IsoParams(d, 1.0 / d**2), PAIR3) == 0.0


class TestUniformRankAndBell:
    def test_rank_one_zero(self):
        assert negativity_uniform_rank(IsoParams(3, 0.9), 1) == 0.0

    def test_full_rank_is_bell(self):
        for F in (0.2, 0.6, 0.95):
            p = IsoParams(4, F)
            assert abs(negativity_uniform_rank(p, 4) - negativity_bell(p)) < 1e-15

    def test_matches_closed_form(self):
        p = IsoParams(3, 0.56)
        assert abs(negativity_uniform_rank(p, 2) - 0.0169625) < 1e-12
        assert abs(
            negativity_uniform_rank(p, 2)
            - negativity_closed(p, SchmidtVector.uniform(2, pad_to=3))
        ) < 1e-15

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            negativity_uniform_rank(IsoParams(3, 0.5), 4)

    def test_bell_spot_values(self):
        assert abs(negativity_bell(IsoParams(3, 0.6)) - 0.07) < 1e-12
        assert abs(negativity_bell(IsoParams(3, 5.0 / 9.0))) < 1e-12
        for d in (2, 3, 5):
            assert abs(negativity_bell(IsoParams(d, 1.0)) - 1.0) < 1e-14

    def test_bell_monotone_in_fidelity(self):
        grid = np.linspace(0.0, 1.0, 401)
        for d in (2, 3, 4):
            vals = [negativity_bell(IsoParams(d, float(F))) for F in grid]
            assert all(b >= a - 1e-15 for a, b in zip(vals, vals[1:]))


class TestConditionsAndThreshold:
    def test_condition_final_spot(self):
        assert condition_final(IsoParams(3, 0.58))
        assert not condition_final(IsoParams(3, 0.55))

    def test_threshold_values(self):
        assert abs(threshold_fidelity(3) - (1 + 8 * math.sqrt(5)) / 33) < 1e-15
        assert abs(threshold_fidelity(2) - (1 + math.sqrt(3)) / 4) < 1e-15

    def test_threshold_decreases_to_zero(self):
        # decay goes like sqrt(2/d), so the drop below 0.02 is slow
        vals = [threshold_fidelity(d) for d in range(2, 101)]
        assert all(b < a for a, b in zip(vals, vals[1:]))
        assert abs(vals[-1] - math.sqrt(2.0 / 100.0)) < 0.02
        assert threshold_fidelity(20000) < 0.02

    def test_threshold_equivalence(self):
        for d in range(2, 11):
            thr = threshold_fidelity(d)
            for F in np.arange(0.0, 1.0001, 0.001):
                p = IsoParams(d, min(float(F), 1.0))
                assert condition_final(p) == (p.F >= thr)

    def test_condition_chain_when_satisfied(self, rng):
        for _ in range(200):
            d = int(rng.integers(2, 5))
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            n = negativity_closed(p, lam)
            if condition_R(p, lam.R):
                assert n <= negativity_uniform_rank(p, lam.R) + 1e-12
            if condition_dim(p, lam.R):
                assert negativity_uniform_rank(p, lam.R) <= negativity_bell(p) + 1e-12
            if condition_final(p):
                assert n <= negativity_bell(p) + 1e-12


class TestAdvantageInterval:
    def test_d3_values(self):
        lo, hi = advantage_interval(3)
        assert abs(lo - (7 + 8 * math.sqrt(3)) / 39) < 1e-15
        assert abs(hi - (1 + 8 * math.sqrt(5)) / 33) < 1e-15
        assert abs(hi - threshold_fidelity(3)) < 1e-15

    def test_ordering(self):
        for d in range(2, 12):
            lo, hi = advantage_interval(d)
            assert lo < hi

    def test_lower_endpoint_is_pair_onset(self):
        # bisection on the pair-outcome negativity alone
        from rpelab.search import bisect_boundary

        for d in (3, 4):
            lo, _ = advantage_interval(d)
            root = bisect_boundary(
                lambda F: negativity_pair(IsoParams(d, F)), lo - 0.02, lo + 0.02,
                1e-12,
            )
            assert abs(root - lo) < 1e-9


class TestAverageNegativity:
    def test_bell_ensemble_collapses(self):
        for d in (2, 3):
            p = IsoParams(d, 0.8)
            assert abs(
                average_negativity(p, bell_measurement(d)) - negativity_bell(p)
            ) < 1e-10

    def test_mixed_ensemble_spot_value(self):
        p = IsoParams(3, 0.56)
        avg = average_negativity(p, mixed_measurement(3))
        assert abs(avg - (6 * 0.0169625 + 3 * 0.0067) / 9) < 1e-10

    def test_advantage_inside_interval(self):
        lo, hi = advantage_interval(3)
        for F in np.linspace(lo + 1e-3, hi - 1e-3, 7):
            p = IsoParams(3, float(F))
            assert average_negativity(p, mixed_measurement(3)) > average_negativity(
                p, bell_measurement(3)
            )

    def test_incomplete_ensemble_rejected(self):
        partial = MeasurementEnsemble(2, bell_measurement(2).vectors[:3])
        with pytest.raises(ValueError, match="not complete"):
            average_negativity(IsoParams(2, 0.8), partial)
