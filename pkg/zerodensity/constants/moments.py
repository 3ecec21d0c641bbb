"""
Second moment of the mollified zeta function on the critical line.

The Gaussian weight g(s) = ((s-1)/s) exp(alpha (s/T)^2) turns every moment into a
combination of

    I(A, n) = int_0^inf x^A exp(-2 alpha x^beta) (log x)^n dx,

evaluated in closed form through derivatives of the Gamma function. The weight
has beta = 2 throughout.
"""
import math
from functools import lru_cache
from math import comb
from typing import NamedTuple, Optional, Tuple

from ..errors import DomainError
from ..special import gamma_deriv
from ..utils import powr
from .fixed import A1, A2, B1, B2, H0, K_MIN, M0

BETA = 2.0

# (A, n) pairs entering J: the leading term x^{beta+1/3} and the mollifier term x^{beta-2/3},
# then the two lower-order shapes from the additive constant a2
J_PAIRS = (
    ((BETA + 1 / 3, 0), (BETA - 2 / 3, 0)),
    ((BETA + 1 / 3, 1), (BETA - 2 / 3, 1)),
    ((BETA + 1 / 3, 2), (BETA - 2 / 3, 2)),
    ((BETA + 1 / 6, 0), (BETA - 5 / 6, 0)),
    ((BETA + 1 / 6, 1), (BETA - 5 / 6, 1)),
    ((BETA, 0), (BETA - 1, 0)),
)


class MeanValueConstants(NamedTuple):
    C1: float
    C2: float
    a3: float
    C3: float
    C4: float


@lru_cache(maxsize=65536)
def eval_I(A: float, n: int, alpha: float, beta: float = BETA) -> float:
    """Closed form of int_0^inf x^A exp(-2 alpha x^beta) (log x)^n dx for A > -1."""
    if not A > -1:
        raise DomainError(f"Invalid exponent A={A} (requires A > -1 for convergence)")
    if n not in (0, 1, 2):
        raise DomainError(f"Invalid log power n={n}. Supported powers: 0, 1, 2")
    if not alpha > 0 or not beta > 0:
        raise DomainError(f"Invalid alpha={alpha}, beta={beta} (both must be > 0)")
    z = (A + 1) / beta
    log_2a = math.log(2 * alpha)
    total = sum(comb(n, j) * (-log_2a) ** j * gamma_deriv(n - j, z) for j in range(n + 1))
    return powr(2 * alpha, -z) * beta ** (-(n + 1)) * total


def eval_omega(which: int, sigma: float, T: float, alpha: float, H: Optional[float] = None) -> float:
    """
    Envelopes of the weight on the line Re s = sigma:
    |g(sigma+it)| <= omega_1 exp(-alpha (t/T)^2) for all t and omega_2 <= |g(sigma+it)| on [H, T].
    """
    if sigma < 0.5:
        raise DomainError(f"Invalid sigma={sigma} for omega (requires sigma >= 1/2)")
    if which == 1:
        return math.exp(alpha * (sigma / T) ** 2)
    if which == 2:
        if H is None or H < 1002:
            raise DomainError(f"Invalid H={H} for omega_2 (requires H >= 1002)")
        return (1 - 1 / H) * math.exp(alpha * (sigma / T) ** 2 - alpha)
    raise DomainError(f"Invalid omega index {which}. Supported: 1, 2")


def check_k(k: float):
    if not K_MIN * (1 - 1e-12) <= k <= 1:
        raise DomainError(f"Invalid k={k} (requires 1e9/H0 <= k <= 1)")


@lru_cache(maxsize=4096)
def eval_mean_value_constants(k: float) -> MeanValueConstants:
    check_k(k)
    x0 = k * H0
    log_x0 = math.log(x0)
    C1 = 6 / math.pi ** 2 + B2 / log_x0
    C2 = math.pi * M0 * B1 / log_x0 + 6 * M0 / (math.pi * x0) + math.pi * M0 * B2 / (x0 * log_x0)
    a3 = -6 * A1 / math.e + A2
    C3 = a3 ** 2 * C1 * log_x0
    C4 = C1 * A1 ** 2 * (1 + 1 / math.sqrt(C3)) ** 2
    return MeanValueConstants(C1, C2, a3, C3, C4)


@lru_cache(maxsize=65536)
def j_coefficients(k: float, alpha: float) -> Tuple[float, ...]:
    """
    The seven T-independent coefficients of J(k, T), in the order

        J = c1 + c2 + c3/L + c4/L^2 + c5/(T^{1/6} L) + c6/(T^{1/6} L^2) + c7/(T^{1/3} L^2),

    with L = log T. J decreases in T only when all of them are positive.
    """
    mv = eval_mean_value_constants(k)
    rk = mv.C2 / mv.C1 * k

    def pair(index):
        (a_main, n_main), (a_moll, n_moll) = J_PAIRS[index]
        return eval_I(a_main, n_main, alpha), rk * eval_I(a_moll, n_moll, alpha)

    lead, moll = pair(0)
    return (
        lead,
        moll,
        2 * sum(pair(1)),
        sum(pair(2)),
        2 * A2 * sum(pair(3)) / A1,
        2 * A2 * sum(pair(4)) / A1,
        A2 ** 2 * sum(pair(5)) / A1 ** 2,
    )


def j_groups(k: float, T: float, alpha: float) -> Tuple[float, ...]:
    """The seven summands of J(k, T) at height T."""
    if T < H0:
        raise DomainError(f"Invalid T={T} (requires T >= H0={H0:g})")
    c = j_coefficients(k, alpha)
    log_t = math.log(T)
    t6 = powr(T, 1 / 6)
    t3 = powr(T, 1 / 3)
    return (
        c[0],
        c[1],
        c[2] / log_t,
        c[3] / log_t ** 2,
        c[4] / (t6 * log_t),
        c[5] / (t6 * log_t ** 2),
        c[6] / (t3 * log_t ** 2),
    )


def eval_J(k: float, T: float, alpha: float) -> float:
    return math.fsum(j_groups(k, T, alpha))


def eval_U(alpha: float, k: float, T: float) -> float:
    """U(alpha, k, T) = 4 alpha beta C4 omega_1(1/2, T, alpha)^2 J(k, T)."""
    C4 = eval_mean_value_constants(k).C4
    omega1 = eval_omega(1, 0.5, T, alpha)
    return 4 * alpha * BETA * C4 * omega1 ** 2 * eval_J(k, T, alpha)
