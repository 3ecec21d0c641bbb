"""
Oracles for the analytic inequalities: the mean value theorem for Dirichlet
polynomials, pointwise bounds for zeta, and the envelopes of the smoothing
weight g(s) = ((s - 1)/s) exp(alpha (s/T)^2).
"""
import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from scipy import integrate

from ..constants import A1, A2, M0, eval_omega
from ..errors import DomainError, QuadraturePrecisionError
from ..special import EvalPrecision, zeta_real, zeta_vector
from .reports import ROUNDING_ALLOWANCE, LemmaReport

logger = logging.getLogger(__name__)

MAX_MV_HEIGHT = 1e4
# quadrature pieces for the mean value cross-check
MV_PIECE_LENGTH = 10.0
# points per unit height for the grid maximum of |zeta(1/2+it)|
MAX_GRID_DENSITY = 50
# zeta near its zeros loses relative accuracy; the oracles only need a few digits
ORACLE_PRECISION = EvalPrecision(rel_tol=1e-8)
CONVEXITY_SIGMAS = 7


def _dirichlet_polynomial(u: np.ndarray, t: float) -> complex:
    n = np.arange(1, len(u) + 1)
    return complex(np.sum(u * np.exp(1j * t * np.log(n))))


def mean_square_integral(u: Sequence[float], T1: float, T2: float) -> float:
    """
    int_{T1}^{T2} |sum_n u_n n^{it}|^2 dt in closed form: the diagonal gives
    sum u_n^2 (T2 - T1), each pair m != n gives u_m u_n (sin(T2 L) - sin(T1 L))/L
    with L = log(n/m).
    """
    u = np.asarray(u, dtype=float)
    log_n = np.log(np.arange(1, len(u) + 1))
    L = log_n[None, :] - log_n[:, None]
    off = L != 0
    kernel = np.full(L.shape, T2 - T1)
    kernel[off] = (np.sin(T2 * L[off]) - np.sin(T1 * L[off])) / L[off]
    return math.fsum((np.outer(u, u) * kernel).ravel())


def check_mv_inequality(u: Sequence[float], T1: float, T2: float, cross_check: bool = True) -> LemmaReport:
    """
    int_{T1}^{T2} |sum u_n n^{it}|^2 dt <= sum u_n^2 (T2 - T1 + 2 pi m0 (n + 1)).

    With ``cross_check`` the closed form is compared with adaptive quadrature;
    QuadraturePrecisionError is raised when the two disagree by more than 1% of the margin.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size == 0:
        raise DomainError("Invalid u: expected a non-empty one-dimensional sequence")
    if not 0 <= T1 < T2 <= MAX_MV_HEIGHT:
        raise DomainError(f"Invalid T1={T1}, T2={T2} (requires 0 <= T1 < T2 <= {MAX_MV_HEIGHT:g})")
    lhs = mean_square_integral(u, T1, T2)
    n = np.arange(1, len(u) + 1)
    rhs = math.fsum(u ** 2 * (T2 - T1 + 2 * math.pi * M0 * (n + 1)))
    report = LemmaReport.make("mv", f"N={len(u)}, T1={T1:g}, T2={T2:g}", lhs, rhs)
    if cross_check:
        edges = np.linspace(T1, T2, max(2, int(math.ceil((T2 - T1) / MV_PIECE_LENGTH)) + 1))
        value, error = 0.0, 0.0
        for a, b in zip(edges[:-1], edges[1:]):
            piece, piece_error = integrate.quad(lambda t: abs(_dirichlet_polynomial(u, t)) ** 2, a, b, limit=200)
            value += piece
            error += piece_error
        discrepancy = abs(value - lhs) + error
        if discrepancy > 0.01 * abs(report.margin):
            raise QuadraturePrecisionError(
                f"Quadrature disagrees with the closed form by {discrepancy:.3g}, "
                f"above 1% of the margin {report.margin:.3g}"
            )
        logger.debug("mv cross-check: closed form %.12g, quadrature %.12g (+- %.2g)", lhs, value, error)
    return report


def check_zeta_bounds(t_samples: Sequence[float], eta: float,
                      prec: Optional[EvalPrecision] = None) -> List[LemmaReport]:
    """
    For each t: |zeta(1/2+it)| <= a1 t^{1/6} log t (t >= 3), the maximum of
    |zeta(1/2+it')| over a grid of |t'| <= t against a1 t^{1/6} log t + a2, and
    the convexity bound
        |zeta(s)| <= 3 |1+s|/|1-s| (|1+s|/(2 pi))^{(1-sigma+eta)/2} zeta(1+eta)
    at points s = sigma + it with -eta <= sigma <= 1 + eta.
    """
    if not 0 < eta <= 0.5:
        raise DomainError(f"Invalid eta={eta} (requires 0 < eta <= 1/2)")
    prec = prec or ORACLE_PRECISION
    zeta_eta = zeta_real(1 + eta)
    reports = []
    for t in map(float, t_samples):
        if t < 0:
            raise DomainError(f"Invalid t={t} (requires t >= 0)")
        if t >= 3:
            value = abs(zeta_vector(np.array([0.5 + 1j * t]), prec)[0])
            reports.append(LemmaReport.make("zeta_half", f"t={t:g}", value, A1 * t ** (1 / 6) * math.log(t)))
        if t > 0:
            grid = np.linspace(0, t, max(2000, int(MAX_GRID_DENSITY * t)) + 1)
            peak = float(np.max(np.abs(zeta_vector(0.5 + 1j * grid, prec))))
            reports.append(LemmaReport.make(
                "zeta_half_max", f"T={t:g}, maximum over {len(grid)} grid points",
                peak, A1 * t ** (1 / 6) * math.log(t) + A2,
            ))
        sigmas = np.linspace(-eta, 1 + eta, CONVEXITY_SIGMAS)
        if t == 0:
            sigmas = sigmas[sigmas != 1]
        s = sigmas + 1j * t
        values = np.abs(zeta_vector(s, prec))
        bounds = (
            3 * np.abs(1 + s) / np.abs(1 - s)
            * (np.abs(1 + s) / (2 * math.pi)) ** ((1 - sigmas + eta) / 2) * zeta_eta
        )
        for sigma, value, rhs in zip(sigmas, values, bounds):
            reports.append(LemmaReport.make("zeta_convexity", f"s={sigma:g}+{t:g}i, eta={eta:g}", value, rhs))
    return reports


def weight(s: np.ndarray, T: float, alpha: float) -> np.ndarray:
    return (s - 1) / s * np.exp(alpha * (s / T) ** 2)


def check_weight_bounds(sigma: float, T: float, alpha: float, H: float,
                        t_samples: Sequence[float]) -> List[LemmaReport]:
    """
    Worst case over the samples of |g(sigma+it)| <= omega_1 exp(-alpha (t/T)^2),
    of omega_2 <= |g(sigma+it)| for samples in [H, T], and of |g(sigma-it)| = |g(sigma+it)|.
    """
    if sigma < 0.5:
        raise DomainError(f"Invalid sigma={sigma} (requires sigma >= 1/2)")
    if H < 1002:
        raise DomainError(f"Invalid H={H} (requires H >= 1002)")
    t = np.asarray(t_samples, dtype=float)
    if t.size == 0:
        raise DomainError("Invalid t_samples: empty")
    omega1 = eval_omega(1, sigma, T, alpha)
    omega2 = eval_omega(2, sigma, T, alpha, H)
    upper = np.abs(weight(sigma + 1j * t, T, alpha))
    lower = np.abs(weight(sigma - 1j * t, T, alpha))
    envelope = omega1 * np.exp(-alpha * (t / T) ** 2)
    setting = f"sigma={sigma:g}, T={T:g}, alpha={alpha:g}"

    worst = int(np.argmax(upper / envelope))
    reports = [LemmaReport.make(
        "weight_upper", f"{setting}, worst of {t.size} samples at t={t[worst]:g}",
        upper[worst], envelope[worst], allowance=ROUNDING_ALLOWANCE,
    )]
    inside = (t >= H) & (t <= T)
    if np.any(inside):
        worst = int(np.argmin(np.where(inside, upper, np.inf)))
        reports.append(LemmaReport.make(
            "weight_lower", f"{setting}, H={H:g}, worst of {int(inside.sum())} samples at t={t[worst]:g}",
            omega2, upper[worst],
        ))
    gap = np.abs(upper - lower)
    worst = int(np.argmax(gap))
    reports.append(LemmaReport.make(
        "weight_even", f"{setting}, worst of {t.size} samples at t={t[worst]:g}",
        gap[worst], ROUNDING_ALLOWANCE * max(upper[worst], np.finfo(float).tiny),
    ))
    return reports
