import math

import pytest

from zerodensity.bounds import TABLE2_ROWS, table1_config, table2_config, validate_params
from zerodensity.config import ParameterSet, SearchConfig
from zerodensity.constants import H0, eta0
from zerodensity.errors import DomainError, NoValidPointError
from zerodensity.optimization import GridSearch, golden_minimize, minimize, minimize_eta_mu

pytestmark = pytest.mark.filterwarnings("ignore:delta < 1")


class TestGoldenMinimize:
    def test_interior_minimum(self):
        assert golden_minimize(lambda x: (x - 0.3) ** 2 + 1, 0.0, 1.0, xtol=1e-8) == pytest.approx(0.3, abs=1e-5)

    def test_boundary_minimum(self):
        assert golden_minimize(lambda x: x, 1.0, 2.0) == 1.0

    def test_domain_errors_are_skipped(self):
        def f(x):
            if x < 0.5:
                raise DomainError("outside")
            return (x - 0.7) ** 2
        assert golden_minimize(f, 0.0, 1.0, xtol=1e-8) == pytest.approx(0.7, abs=1e-5)

    def test_no_admissible_point(self):
        def f(x):
            raise DomainError("outside")
        with pytest.raises(NoValidPointError):
            golden_minimize(f, 0.0, 1.0)


class TestEtaMu:
    @pytest.mark.parametrize("H_gap", [1.0, 1e-6])
    def test_optimum(self, H_gap):
        eta, mu = minimize_eta_mu(1.0, H0 - H_gap)
        assert eta == pytest.approx(0.25618, abs=1e-4)
        assert mu == pytest.approx(1.2453, abs=1e-3)
        assert 1 + eta0() <= mu <= 1 + eta

    def test_mu_stays_in_range_for_small_k(self):
        eta, mu = minimize_eta_mu(0.5, H0 - 1)
        assert 1 + eta0() <= mu <= 1 + eta

    def test_H_range(self):
        with pytest.raises(DomainError):
            minimize_eta_mu(1.0, 100.0)


class TestSearchConfig:
    def test_defaults(self):
        config = SearchConfig()
        assert config.objective == "min_A"
        assert config.searched() == ["k", "alpha", "delta", "d"]

    def test_fixed_parameters_are_not_searched(self):
        assert table2_config().searched() == ["d"]

    def test_search_H(self):
        assert "H_gap" in SearchConfig(search_H=True, k_steps=2, alpha_steps=4, delta_steps=4, d_steps=4).searched()

    def test_invalid_objective(self):
        with pytest.raises(ValueError, match="Invalid objective"):
            SearchConfig(objective="min_B")

    def test_invalid_resolution(self):
        with pytest.raises(ValueError, match="alpha_steps"):
            SearchConfig(alpha_steps=1)

    def test_budget(self):
        with pytest.raises(ValueError, match="budget"):
            SearchConfig(max_evaluations=10)

    def test_unknown_option_warns(self):
        with pytest.warns(UserWarning, match="unknown search options"):
            SearchConfig(learning_rate=0.1)


class TestMinimize:
    def test_min_A_at_090(self):
        config = table1_config(fixed={"k": 1.0}, progress=False)
        params, result = minimize(0.90, config)
        assert result.A <= 11.499 * (1 + 1e-3)
        assert isinstance(params, ParameterSet)
        assert params.H_gap == 1.0

    def test_history_is_monotone(self):
        search = GridSearch(0.90, table2_config(progress=False))
        search.run()
        assert all(b <= a for a, b in zip(search.history, search.history[1:]))
        assert search.evaluations > 0

    def test_table2_at_090(self):
        params, result = minimize(0.90, table2_config(progress=False))
        assert validate_params(params) == []
        assert result.value <= 130.07 * 1.01
        assert math.isfinite(result.value)

    @pytest.mark.slow
    @pytest.mark.parametrize("row", TABLE2_ROWS, ids=lambda r: f"sigma={r[0]}")
    def test_table2_rows(self, row):
        _, result = minimize(row[0], table2_config(progress=False))
        assert result.value <= row[5] * 1.01

    def test_full_search_at_090(self):
        params, result = minimize(0.90, SearchConfig(progress=False))
        assert result.A <= 11.499 * (1 + 1e-3)
        assert validate_params(params) == []

    def test_searched_k_beats_k_one_at_060(self):
        params, result = minimize(0.60, SearchConfig(progress=False))
        pinned_params, pinned = minimize(0.60, SearchConfig(fixed={"k": 1.0}, progress=False))
        assert params.k < 1
        assert result.A < pinned.A
        assert validate_params(params) == [] and validate_params(pinned_params) == []

    def test_sigma_range(self):
        with pytest.raises(DomainError):
            GridSearch(1.2)
