"""
Second moment of f_X to the right of the critical strip, at sigma_2 = 1 + delta/log X.
"""
import math
from typing import NamedTuple

from ..errors import DomainError
from .fixed import B3, B4, EULER_GAMMA, H0, LOG_H0, M0
from .moments import BETA, check_k, eval_I, eval_omega


class TailConstants(NamedTuple):
    C5: float
    C6: float


class TailMoment(NamedTuple):
    K: float
    V: float


def _check_delta(delta: float):
    if not delta > 0:
        raise DomainError(f"Invalid delta={delta} (requires delta > 0)")


def eval_tail_constants(k: float, delta: float) -> TailConstants:
    check_k(k)
    _check_delta(delta)
    log_x0 = math.log(k * H0)
    C5 = (
        (math.pi * M0 * B4 / (2 * delta))
        * (1 + 2 * delta / log_x0) ** 2
        * math.exp(2 * delta * EULER_GAMMA / log_x0)
    )
    C6 = (B4 / (5 * delta * math.exp(delta))) * (1 + delta / log_x0) ** 2 + B3 * math.exp(-2 * delta) / log_x0 ** 2
    return TailConstants(C5, C6)


def eval_K_and_V(alpha: float, k: float, delta: float, T: float) -> TailMoment:
    if T < H0:
        raise DomainError(f"Invalid T={T} (requires T >= H0={H0:g})")
    C5, C6 = eval_tail_constants(k, delta)
    K = (C5 + C6 * math.pi * M0 / (k * T)) * eval_I(BETA - 1, 0, alpha) + (C6 / k) * eval_I(BETA, 0, alpha)
    sigma2 = 1 + delta / math.log(k * T)
    V = 4 * alpha * BETA * eval_omega(1, sigma2, T, alpha) ** 2 * K
    return TailMoment(K, V)


def eval_M(k: float, delta: float) -> float:
    """Bound for log T / (log kT + 2 delta) over T >= H0."""
    if math.log(k) + 2 * delta < 0:
        return LOG_H0 / (math.log(k * H0) + 2 * delta)
    return 1.0
