import math

import mpmath
import numpy as np
import pytest
from scipy import optimize

from zerodensity.bounds import TABLE1_ROWS, TABLE2_ROWS, table1_params, table2_params
from zerodensity.constants import (
    A1, A2, B2, B4, BETA, DELTA_MAX, FIXED, H0, J_PAIRS, K_MIN, M0, MU_2, X_MIN, ConstantBundle, b6, divisor_square_tail_bound,
    divisor_tail_bound, eta0, eval_argument_constants, eval_constants, eval_I, eval_K_and_V, eval_log_constants,
    eval_M, eval_mean_value_constants, eval_script_constants, eval_tail_constants, eval_U, j_coefficients, j_groups,
)
from zerodensity.errors import DomainError

ALPHAS = (0.06, 0.105, 0.324)
I_PAIRS = sorted({pair for group in J_PAIRS for pair in group} | {(BETA - 1, 0), (BETA, 0)})


def _quad_I(A, n, alpha):
    f = lambda x: x ** A * mpmath.exp(-2 * alpha * x ** 2) * mpmath.log(x) ** n
    return float(mpmath.quad(f, [0, 1, 4, mpmath.inf]))


class TestFixedInputs:
    def test_eta0(self):
        e0 = eta0()
        assert e0 == pytest.approx(0.23622, abs=2e-5)
        assert b6(X_MIN, e0) == pytest.approx(1.0, abs=1e-9)
        assert FIXED.eta0 == e0

    def test_eta0_root_is_logged(self, caplog):
        eta0.cache_clear()
        with caplog.at_level("DEBUG", logger="zerodensity.constants.fixed"):
            e0 = eta0()
        records = [r for r in caplog.records if r.name == "zerodensity.constants.fixed"]
        assert len(records) == 1
        assert f"{e0:.12f}" in records[0].getMessage()

    def test_argument_constants_are_logged(self, caplog):
        with caplog.at_level("DEBUG", logger="zerodensity.constants.argument"):
            C7 = eval_argument_constants(1.0, 0.2562, H0 - 1).C7
        assert any(r.name == "zerodensity.constants.argument" and f"C7={C7:.8g}" in r.getMessage()
                   for r in caplog.records)

    def test_a3_is_minimum_of_subconvexity_bound(self):
        res = optimize.minimize_scalar(lambda t: A1 * t ** (1 / 6) * math.log(t) + A2,
                                       bounds=(1e-6, 1.0), method="bounded", options={"xatol": 1e-12})
        assert res.x == pytest.approx(math.exp(-6), rel=1e-4)
        assert FIXED.a3 == pytest.approx(A2 - 6 * A1 / math.e, rel=1e-15)
        assert FIXED.a3 == pytest.approx(res.fun, rel=1e-9)

    def test_delta_max(self):
        assert DELTA_MAX == pytest.approx(26.36, abs=0.01)

    def test_mu_2(self):
        assert MU_2 == pytest.approx(1.072382, abs=1e-6)

    def test_b6_is_divisor_tail_bound(self):
        for X, eta in [(1e9, 0.25), (H0, 0.2453), (1e12, 0.4)]:
            assert b6(X, eta) == pytest.approx(divisor_tail_bound(X, 1 + eta), rel=1e-12)


class TestMomentIntegrals:
    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("A, n", I_PAIRS)
    def test_closed_form_against_quadrature(self, A, n, alpha):
        assert eval_I(A, n, alpha) == pytest.approx(_quad_I(A, n, alpha), rel=1e-9)

    def test_gaussian_moment(self):
        # int_0^oo exp(-2 alpha x^2) dx = sqrt(pi / (8 alpha))
        assert eval_I(0.0, 0, 0.5) == pytest.approx(math.sqrt(math.pi / 4), rel=1e-14)

    @pytest.mark.parametrize("A, n, alpha", [(-1.0, 0, 0.1), (1.0, 3, 0.1), (1.0, 0, 0.0)])
    def test_domain(self, A, n, alpha):
        with pytest.raises(DomainError):
            eval_I(A, n, alpha)


class TestMeanValueConstants:
    def test_C1(self):
        assert eval_mean_value_constants(1.0).C1 == pytest.approx(6 / math.pi ** 2 + B2 / math.log(H0), rel=1e-15)

    def test_k_range(self):
        with pytest.raises(DomainError):
            eval_mean_value_constants(0.01)

    @pytest.mark.parametrize("row", TABLE1_ROWS, ids=lambda r: f"sigma={r[0]}")
    def test_table1_moments(self, row):
        p = table1_params(row[0])
        assert all(c > 0 for c in j_coefficients(p.k, p.alpha))
        assert eval_U(p.alpha, p.k, H0) > 1
        assert eval_K_and_V(p.alpha, p.k, p.delta, H0).V > 1

    def test_J_decreases_in_T(self):
        groups_low = j_groups(1.0, H0, 0.105)
        groups_high = j_groups(1.0, 1e3 * H0, 0.105)
        assert math.fsum(groups_high) < math.fsum(groups_low)
        assert len(groups_low) == 7

    def test_T_below_H0(self):
        with pytest.raises(DomainError):
            j_groups(1.0, H0 / 2, 0.105)

    def test_U_near_one(self):
        U = eval_U(0.324, 1.0, H0)
        assert U == pytest.approx(1.0018, abs=5e-4)

    def test_V(self):
        assert eval_K_and_V(0.324, 1.0, 0.3, H0).V == pytest.approx(8.36, rel=1e-2)

    def test_M(self):
        assert eval_M(1.0, 0.3) == 1.0
        k = 0.05
        assert eval_M(k, 0.1) == pytest.approx(math.log(H0) / (math.log(k * H0) + 0.2), rel=1e-15)


class TestArgumentConstants:
    def test_eta_mu_optimum_constants(self):
        C7 = eval_argument_constants(1.0, 0.25618, H0 - 1).C7
        assert C7 == pytest.approx(17.7457, rel=1e-3)
        assert eval_log_constants(1.0, 1.245).C8 == pytest.approx(0.3181, rel=2e-3)
        assert eval_log_constants(1.0, 1.24534).C8 == pytest.approx(0.3120, rel=2e-3)

    def test_eta_below_eta0(self):
        with pytest.raises(DomainError):
            eval_argument_constants(1.0, 0.2, H0 - 1)

    def test_mu_too_small(self):
        with pytest.raises(DomainError):
            eval_log_constants(1.0, 1.01)

    def test_divisor_bound_domains(self):
        with pytest.raises(DomainError):
            divisor_tail_bound(10.0, 1.0)
        with pytest.raises(DomainError):
            divisor_square_tail_bound(46.0, 2.0)


class TestBundle:
    def test_table2_script_constant(self, table2_headline_params):
        scriptC1, _ = eval_script_constants(table2_headline_params)
        assert scriptC1 == pytest.approx(2.1946110446020332e13, rel=1e-2)

    @pytest.mark.parametrize("row", TABLE2_ROWS, ids=lambda r: f"sigma={r[0]}")
    def test_table2_rows(self, row):
        assert eval_script_constants(table2_params(row[0])).scriptC1 == pytest.approx(row[3], rel=1e-2)

    def test_text_round_trip(self, headline_params):
        bundle = eval_constants(headline_params)
        assert ConstantBundle.from_text(bundle.to_text()) == bundle

    def test_bundle_matches_parts(self, headline_params):
        bundle = eval_constants(headline_params)
        script = eval_script_constants(headline_params)
        assert bundle.scriptC1 == script.scriptC1
        assert bundle.scriptC2 == script.scriptC2
        assert bundle.U == eval_U(headline_params.alpha, headline_params.k, H0)


class TestTailConstants:
    def test_C6_vanishes_for_large_delta(self):
        values = [eval_tail_constants(1.0, delta).C6 for delta in (0.3, 2.0, 20.0)]
        assert values[0] > values[1] > values[2]
        assert eval_tail_constants(1.0, 25.0).C6 < 1e-10

    @pytest.mark.parametrize("delta", [1e-3, 1e-4])
    def test_C5_scales_like_inverse_delta(self, delta):
        assert delta * eval_tail_constants(1.0, delta).C5 == pytest.approx(math.pi * M0 * B4 / 2, rel=1e-3)

    def test_invalid_delta(self):
        with pytest.raises(DomainError):
            eval_tail_constants(1.0, 0.0)


class TestMonotonicity:
    def test_C2_decreases_in_k(self):
        values = [eval_mean_value_constants(k).C2 for k in np.geomspace(K_MIN, 1.0, 10)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_U_decreases_in_T(self):
        assert eval_U(0.105, 1.0, 10 * H0) < eval_U(0.105, 1.0, H0)

    def test_V_decreases_in_T(self):
        assert eval_K_and_V(0.324, 1.0, 0.3, 10 * H0).V < eval_K_and_V(0.324, 1.0, 0.3, H0).V

    def test_M_is_continuous_at_the_switch(self):
        k = 0.5
        delta = -math.log(k) / 2
        assert eval_M(k, delta * (1 - 1e-12)) == pytest.approx(1.0, rel=1e-9)
        assert eval_M(k, delta * (1 + 1e-12)) == 1.0

    def test_scriptC1_increases_in_sigma(self):
        values = [eval_script_constants(table2_params(row[0])).scriptC1 for row in TABLE2_ROWS]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestDeterminism:
    def test_repeated_evaluation_is_bit_identical(self, headline_params):
        first = eval_constants(headline_params)
        eval_I.cache_clear()
        second = eval_constants(headline_params)
        assert first.to_text() == second.to_text()
        assert first == second
