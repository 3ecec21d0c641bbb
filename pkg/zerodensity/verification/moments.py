"""
Toy-scale oracle for the smoothed second moment

    M(X, sigma) = int_R |g(sigma+it)|^2 |f_X(sigma+it)|^2 dt,   f_X = zeta M_X - 1,

used to check its log-convexity in sigma and the bound obtained by integrating
the Gaussian envelope of g by parts against F_X(sigma, t) = int_0^t |f_X|^2.
"""
import logging
import math
from typing import NamedTuple, Tuple

import numpy as np
from scipy import integrate

from ..constants import BETA, eval_omega
from ..errors import BudgetError, DomainError, QuadraturePrecisionError
from ..special import EvalPrecision, zeta_vector
from .arithmetic import mobius_sieve
from .oracles import weight
from .reports import LemmaReport

logger = logging.getLogger(__name__)

MAX_X = 200
MAX_T = 200.0
MAX_GRID = 2_000_000
# the integrals are cut where exp(-2 alpha (t/T)^2) drops below this fraction of its peak
ENVELOPE_CUTOFF = 1e-16
MOMENT_PRECISION = EvalPrecision(rel_tol=1e-6)


class ConvexityExponents(NamedTuple):
    """Weights a, b of M(1/2) and M(sigma_2), sigma_2 = 1 + delta/log X, from the ratios and in closed form."""
    a: float
    b: float
    a_closed: float
    b_closed: float


def convexity_exponents(sigma: float, delta: float, X: float) -> ConvexityExponents:
    if not X > 1 or not delta > 0:
        raise DomainError(f"Invalid X={X}, delta={delta} (requires X > 1, delta > 0)")
    log_x = math.log(X)
    sigma2 = 1 + delta / log_x
    a = (sigma2 - sigma) / (sigma2 - 0.5)
    b = (sigma - 0.5) / (sigma2 - 0.5)
    a_closed = 2 * (1 - sigma) + 2 * delta * (2 * sigma - 1) / (log_x + 2 * delta)
    return ConvexityExponents(a, b, a_closed, 1 - a_closed)


def mollified_zeta(X: int, s: np.ndarray) -> np.ndarray:
    """f_X(s) = zeta(s) M_X(s) - 1 with M_X(s) = sum_{n<=X} mu(n) n^{-s}."""
    mu = mobius_sieve(X)
    mollifier = np.zeros_like(s, dtype=complex)
    for n in np.flatnonzero(mu):
        mollifier += mu[n] * np.exp(-s * math.log(n))
    return zeta_vector(s, MOMENT_PRECISION) * mollifier - 1


def _grid(T: float, alpha: float, step: float) -> np.ndarray:
    t_max = T * math.sqrt(math.log(1 / ENVELOPE_CUTOFF) / (2 * alpha))
    # 4m + 1 points so that every other point is again an odd-sized Simpson grid
    quarter = int(math.ceil(t_max / (4 * step)))
    size = 4 * quarter + 1
    if size > MAX_GRID:
        raise BudgetError(f"Quadrature grid of {size} points exceeds {MAX_GRID}")
    return np.linspace(0, 4 * quarter * step, size)


def _simpson_pair(y: np.ndarray, t: np.ndarray) -> Tuple[float, float]:
    """Simpson value and the grid-halving error estimate."""
    fine = integrate.simpson(y, x=t)
    coarse = integrate.simpson(y[::2], x=t[::2])
    return fine, abs(fine - coarse) / 15


class _Moment(NamedTuple):
    value: float
    error: float
    f_squared: np.ndarray


def _smoothed_moment(X: int, T: float, sigma: float, alpha: float, t: np.ndarray) -> _Moment:
    s = sigma + 1j * t
    f_squared = np.abs(mollified_zeta(X, s)) ** 2
    integrand = np.abs(weight(s, T, alpha)) ** 2 * f_squared
    # |g f_X| is even in t
    value, error = _simpson_pair(integrand, t)
    return _Moment(2 * value, 2 * error, f_squared)


def _by_parts_bound(moment: _Moment, T: float, sigma: float, alpha: float, t: np.ndarray) -> Tuple[float, float]:
    """4 omega_1^2 alpha beta int_0^oo x^{beta-1} exp(-2 alpha x^beta) F_X(sigma, xT) dx, with x = t/T."""
    def integral(tt, f_squared):
        F = integrate.cumulative_trapezoid(f_squared, tt, initial=0)
        return integrate.simpson(tt / T * np.exp(-2 * alpha * (tt / T) ** BETA) * F, x=tt) / T

    fine = integral(t, moment.f_squared)
    coarse = integral(t[::2], moment.f_squared[::2])
    scale = 4 * eval_omega(1, sigma, T, alpha) ** 2 * alpha * BETA
    # trapezoid error dominates; it drops fourfold when the step halves
    return scale * fine, scale * abs(fine - coarse) / 3


def _require_precision(report: LemmaReport, error: float):
    if error > 0.01 * abs(report.margin):
        raise QuadraturePrecisionError(
            f"{report.lemma_id}: quadrature error {error:.3g} exceeds 1% of the margin {report.margin:.3g}"
        )


def check_smoothing_and_convexity(X: int, T: float, sigma_triple: Tuple[float, float, float], alpha: float,
                                  step: float = 0.01) -> Tuple[LemmaReport, LemmaReport]:
    """
    M(sigma) <= M(sigma_1)^a M(sigma_2)^b with a = (sigma_2 - sigma)/(sigma_2 - sigma_1), b = 1 - a,
    and M(sigma) <= 4 omega_1^2 alpha beta int_0^oo x^{beta-1} e^{-2 alpha x^beta} F_X(sigma, xT) dx.
    """
    sigma1, sigma, sigma2 = sigma_triple
    if not 1 <= X <= MAX_X or not 0 < T <= MAX_T:
        raise BudgetError(f"Invalid X={X}, T={T} (requires X <= {MAX_X}, 0 < T <= {MAX_T:g})")
    if not 0.5 <= sigma1 < sigma < sigma2 or not sigma1 < 1 < sigma2 or sigma == 1:
        raise DomainError(
            f"Invalid sigmas {sigma_triple} (requires 1/2 <= sigma_1 < sigma < sigma_2, sigma_1 < 1 < sigma_2, sigma != 1)"
        )
    if not alpha > 0:
        raise DomainError(f"Invalid alpha={alpha} (requires alpha > 0)")
    t = _grid(T, alpha, step)
    logger.debug("smoothed moments on %d points up to t=%.6g", t.size, t[-1])
    low, mid, high = (_smoothed_moment(X, T, s, alpha, t) for s in sigma_triple)

    a = (sigma2 - sigma) / (sigma2 - sigma1)
    b = (sigma - sigma1) / (sigma2 - sigma1)
    interpolated = low.value ** a * high.value ** b
    setting = f"X={X}, T={T:g}, alpha={alpha:g}, t cut at {t[-1]:.6g}"
    convexity = LemmaReport.make("convexity", f"{setting}, sigmas=({sigma1:g}, {sigma:g}, {sigma2:g})",
                                 mid.value, interpolated)
    _require_precision(convexity, mid.error + interpolated * (a * low.error / low.value + b * high.error / high.value))

    bound, bound_error = _by_parts_bound(mid, T, sigma, alpha, t)
    smoothing = LemmaReport.make("smoothing", f"{setting}, sigma={sigma:g}", mid.value, bound)
    _require_precision(smoothing, mid.error + bound_error)
    return convexity, smoothing
