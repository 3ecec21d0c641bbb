import math

import mpmath
import numpy as np
import pytest

from zerodensity.errors import DomainError, PrecisionError
from zerodensity.special import (
    EvalPrecision, digamma, gamma_deriv, trigamma, zeta_complex, zeta_real, zeta_vector,
)
from zerodensity.special.zeta import euler_maclaurin_cutoff

GAMMA_POINTS = [0.1, 0.5, 1.0, 1.5, 13 / 6, 3.0, 7.25]
ZETA_POINTS = [2.0, 0.5 + 1j, 0.5 + 100j, -0.3 + 3j, 1.3, 0.75 + 50j, 2 + 1000j, 0.5 + 1000j, 1.1 - 20j]


class TestGammaDerivatives:
    @pytest.mark.parametrize("x", GAMMA_POINTS)
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_against_mpmath(self, j, x):
        expected = float(mpmath.diff(mpmath.gamma, x, j))
        assert gamma_deriv(j, x) == pytest.approx(expected, rel=1e-10)

    def test_values_at_one(self):
        assert gamma_deriv(0, 1.0) == pytest.approx(1.0, rel=1e-15)
        assert gamma_deriv(1, 1.0) == pytest.approx(-np.euler_gamma, rel=1e-13)
        assert gamma_deriv(2, 1.0) == pytest.approx(np.euler_gamma ** 2 + math.pi ** 2 / 6, rel=1e-13)

    def test_polygamma(self):
        assert digamma(1.0) == pytest.approx(-np.euler_gamma, rel=1e-14)
        assert trigamma(1.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    @pytest.mark.parametrize("j, x", [(3, 1.0), (-1, 1.0), (0, 0.0), (1, -0.5)])
    def test_domain(self, j, x):
        with pytest.raises(DomainError):
            gamma_deriv(j, x)


class TestZeta:
    @pytest.mark.parametrize("s", ZETA_POINTS)
    def test_against_mpmath(self, s):
        expected = complex(mpmath.zeta(s))
        assert abs(zeta_complex(s) - expected) <= 1e-10 * abs(expected)

    def test_basel(self):
        assert zeta_complex(2) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
        assert zeta_real(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)

    def test_conjugate_symmetry(self):
        s = 0.6 + 37.5j
        assert zeta_complex(s.conjugate()) == pytest.approx(zeta_complex(s).conjugate(), rel=1e-13)

    def test_vector_keeps_shape(self):
        s = np.array([[0.5 + 10j, 2.0, 0.9 - 3j], [1.5 + 0.5j, -0.2 + 7j, 0.5 + 30j]])
        values = zeta_vector(s)
        assert values.shape == s.shape
        for point, value in zip(s.ravel(), values.ravel()):
            assert value == pytest.approx(complex(mpmath.zeta(complex(point))), rel=1e-10)

    def test_cutoff(self):
        assert euler_maclaurin_cutoff(np.array([0.5 + 100j])) == 16 + math.ceil(100 / math.pi + 0.5)

    def test_pole(self):
        with pytest.raises(DomainError):
            zeta_complex(1.0)

    def test_height_limit(self):
        with pytest.raises(DomainError):
            zeta_complex(0.5 + 2e6j)

    def test_term_budget(self):
        with pytest.raises(PrecisionError):
            zeta_complex(0.5 + 100j, EvalPrecision(max_terms=20))

    def test_invalid_precision(self):
        with pytest.raises(ValueError):
            EvalPrecision(rel_tol=0.0)


class TestIdentities:
    @pytest.mark.parametrize("x", [0.5, 1.0, 5 / 3, 5 / 6])
    def test_gamma_recurrence(self, x):
        assert gamma_deriv(0, x + 1) == pytest.approx(x * gamma_deriv(0, x), rel=1e-12)

    @pytest.mark.parametrize("x", [0.5, 1.0, 1.5, 5 / 3])
    def test_digamma_against_mpmath(self, x):
        assert digamma(x) == pytest.approx(float(mpmath.digamma(x)), rel=1e-12)

    @pytest.mark.parametrize("s", [1.05, 1.5, 2.0, 3.7, 10.0])
    def test_complex_zeta_matches_real_zeta(self, s):
        value = zeta_complex(complex(s, 0.0))
        assert value.real == pytest.approx(zeta_real(s), rel=1e-12)
        assert abs(value.imag) <= 1e-12 * abs(value.real)
