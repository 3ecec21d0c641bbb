"""
Constants bounding the argument of h_X = 1 - f_X^2 along horizontal segments
(C7 and its ingredients b5..b9) and the logarithmic integral of |h_X| on the
line Re s = mu (C8 and b10, b11).
"""
import logging
import math
from typing import NamedTuple

from ..errors import DomainError
from ..special import zeta_real
from ..utils import powr
from .fixed import EULER_GAMMA, H0, LOG_H0, M0, X_MIN, b6
from .moments import check_k

logger = logging.getLogger(__name__)

LOG2 = math.log(2)
# 1 + 2/|Im w| for |Im w| >= 1000, times the factor 3 of the convexity bound
ZETA_STRIP_FACTOR = 3.006


class ArgumentConstants(NamedTuple):
    b5: float
    b6_at_1e9: float
    b7: float
    b8: float
    b9: float
    C7: float


class LogConstants(NamedTuple):
    b10: float
    b11_2mu: float
    b11_2mu_minus_1: float
    C8: float


def divisor_tail_bound(X: float, tau: float) -> float:
    """Upper bound for sum_{n >= X} d(n) / n^tau, valid for X >= 1 and tau > 1."""
    if not tau > 1 or X < 1:
        raise DomainError(f"Invalid X={X}, tau={tau} (requires X >= 1, tau > 1)")
    log_x = math.log(X)
    s = tau - 1
    return tau / powr(X, s) * (log_x / s + 1 / s ** 2 + EULER_GAMMA / s + 7 / (12 * tau * X))


def divisor_square_tail_bound(X: float, tau: float) -> float:
    """Upper bound for sum_{n >= X} d(n)^2 / n^tau, valid for X >= 47 and tau > 1."""
    if not tau > 1 or X < 47:
        raise DomainError(f"Invalid X={X}, tau={tau} (requires X >= 47, tau > 1)")
    log_x = math.log(X)
    s = tau - 1
    return (2 * tau / powr(X, s)) * (log_x ** 3 / s + 3 * log_x ** 2 / s ** 2 + 6 * log_x / s ** 3 + 6 / s ** 4)


def b5(eta: float) -> float:
    """Bound for |h_X(s)| on Re s >= 1 + eta."""
    z1 = zeta_real(1 + eta)
    z2 = zeta_real(2 + 2 * eta)
    return z1 ** 4 / z2 ** 2 + 2 * z1 ** 2 / z2


def b7(k: float, eta: float) -> float:
    z = ZETA_STRIP_FACTOR * zeta_real(1 + eta)
    return (1 + 2 / (z * powr(k * H0, 1 + eta))) * z ** 2


def b8(eta: float, H: float) -> float:
    return math.sqrt((2 + eta) ** 2 / H ** 2 + ((1 + 2 * eta) / H + 1) ** 2)


def b11(X: float, tau: float) -> float:
    s = tau - 1
    log_x = math.log(X)
    return 1 + 3 / (s * log_x) + 6 / (s * log_x) ** 2 + 6 / (s * log_x) ** 3


def eval_argument_constants(k: float, eta: float, H: float) -> ArgumentConstants:
    """
    b9 and C7 carry k through b7, although their dependence on it is
    below 1e-12 for every admissible k.
    """
    check_k(k)
    if not 0 < eta < 1:
        raise DomainError(f"Invalid eta={eta} (requires 0 < eta < 1)")
    if H < 1002:
        raise DomainError(f"Invalid H={H} (requires H >= 1002)")
    u = b6(X_MIN, eta)
    if 1 - u * u <= 0:
        raise DomainError(f"Invalid eta={eta}: 1 - b6(1e9, eta)^2 = {1 - u * u:.6g} is not positive")
    v5 = b5(eta)
    v7 = b7(k, eta)
    v8 = b8(eta, H)
    v9 = (
        math.pi * math.log(v7) / LOG2
        + math.pi * math.log(v5) / LOG2
        - 2 * math.pi * math.log(1 - u * u) / LOG2
        + math.pi
        + (2 * (1 + 2 * eta) / LOG2) * math.log(v8 / (2 * math.pi))
    )
    C7 = (2 * (1 + 2 * eta) + 2 * math.pi * (1 + eta)) / LOG2 + v9 / LOG_H0
    logger.debug("argument constants(k=%.6g, eta=%.8f, H=%.10g): b9=%.6g C7=%.8g", k, eta, H, v9, C7)
    return ArgumentConstants(v5, u, v7, v8, v9, C7)


def eval_log_constants(k: float, mu: float) -> LogConstants:
    check_k(k)
    if not mu > 1:
        raise DomainError(f"Invalid mu={mu} (requires mu > 1)")
    x0 = k * H0
    log_x0 = math.log(x0)
    u = b6(x0, mu - 1)
    if u >= 1:
        raise DomainError(f"Invalid mu={mu}: b6(kH0, mu-1) = {u:.6g} is not below 1")
    b10 = -math.log1p(-u * u) / (u * u)
    b11_2mu = b11(x0, 2 * mu)
    b11_2mu_1 = b11(x0, 2 * mu - 1)
    C8 = (
        b10
        * log_x0 ** 2
        / powr(x0, 2 * mu - 2)
        * (4 * mu * b11_2mu / (k * (2 * mu - 1)) + 2 * math.pi * M0 * (2 * mu - 1) * b11_2mu_1 / (mu - 1))
    )
    return LogConstants(b10, b11_2mu, b11_2mu_1, C8)
