"""
Brute-force checks of the arithmetic sums behind the mean value constants:
squarefree counts, the coefficients lambda_X(n) of f_X = zeta M_X - 1 and
divisor sums.

    lambda_X(n) = sum_{d | n, d <= X} mu(d)   for n > X,   and 0 for n <= X.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..constants import B1, B2, B3, B4, EULER_GAMMA, divisor_square_tail_bound, divisor_tail_bound
from ..errors import BudgetError, DomainError
from ..utils import powr
from .reports import LemmaReport

logger = logging.getLogger(__name__)

MAX_X = 10 ** 7
MAX_N = 10 ** 8
DEFAULT_WINDOW = 10 ** 6
DEFAULT_DIVISOR_CAP = 10 ** 6
# hypothesis ranges in X
MOBIUS_COUNT_MIN = 1700
MOBIUS_LOG_MIN = 1002
LAMBDA_MIN = 10 ** 9
DIVISOR_SQUARE_MIN = 47
# |sum_{n<=t} d(n) - t log t - (2 gamma - 1) t| stays below this multiple of sqrt(t) for t >= 1
DIVISOR_ERROR_FACTOR = 4.0


@dataclass
class ArithmeticTables:
    X: int
    n_max: int
    mobius: np.ndarray
    lambdaX: np.ndarray
    divisor_counts: np.ndarray

    def check_invariants(self):
        if np.any(self.lambdaX[: min(self.X, self.n_max) + 1] != 0):
            raise AssertionError(f"lambda_X(n) is non-zero for some n <= X={self.X}")
        if np.any(np.abs(self.lambdaX[1:]) > self.divisor_counts[1:]):
            raise AssertionError("|lambda_X(n)| exceeds d(n)")


def mobius_sieve(n: int) -> np.ndarray:
    """mu(0..n), with mu(0) = 0."""
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    is_prime = np.ones(n + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(math.isqrt(n)) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    for p in np.flatnonzero(is_prime):
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
    return mu


def divisor_sieve(n: int) -> np.ndarray:
    """d(0..n), with d(0) = 0."""
    counts = np.zeros(n + 1, dtype=np.int32)
    for d in range(1, math.isqrt(n) + 1):
        counts[d * d] += 1
        counts[d * d + d::d] += 2
    return counts


def lambda_sieve(mu: np.ndarray, X: int, n: int) -> np.ndarray:
    lam = np.zeros(n + 1, dtype=np.int32)
    for d in np.flatnonzero(mu[1: X + 1]) + 1:
        lam[d::d] += mu[d]
    lam[: X + 1] = 0
    return lam


def build_tables(X: int, n_max: int) -> ArithmeticTables:
    if not 1 <= X <= MAX_X:
        raise BudgetError(f"Invalid X={X} (requires 1 <= X <= {MAX_X:.0e})")
    if not 1 <= n_max <= MAX_N:
        raise BudgetError(f"Invalid n_max={n_max} (requires 1 <= n_max <= {MAX_N:.0e})")
    mu = mobius_sieve(X)
    tables = ArithmeticTables(
        X=X, n_max=n_max, mobius=mu, lambdaX=lambda_sieve(mu, X, n_max), divisor_counts=divisor_sieve(n_max),
    )
    logger.debug("built arithmetic tables for X=%d up to n=%d", X, n_max)
    return tables


def _below(X: float, minimum: float) -> Optional[str]:
    if X < minimum:
        return f"hypothesis requires X >= {minimum:g}; checked at X={X:g} as supporting evidence"
    return None


def check_mobius_sums(X: int) -> Tuple[LemmaReport, LemmaReport]:
    """sum_{n<=X} mu^2(n) <= b1 X and sum_{n<=X} mu^2(n)/n - (6/pi^2) log X <= b2."""
    if not 1 <= X <= MAX_X:
        raise BudgetError(f"Invalid X={X} (requires 1 <= X <= {MAX_X:.0e})")
    squarefree = mobius_sieve(X)[1:] != 0
    n = np.arange(1, X + 1, dtype=float)
    count = int(np.count_nonzero(squarefree))
    harmonic = math.fsum(1 / n[squarefree])
    return (
        LemmaReport.make("mobius_count", f"X={X}", count, B1 * X, caveat=_below(X, MOBIUS_COUNT_MIN)),
        LemmaReport.make("mobius_log", f"X={X}", harmonic - 6 / math.pi ** 2 * math.log(X), B2,
                         caveat=_below(X, MOBIUS_LOG_MIN)),
    )


def _lambda_sum(tables: ArithmeticTables, tau: float, lo: int = 1, hi: Optional[int] = None) -> float:
    """sum over lo <= n <= hi of lambda_X(n)^2 / n^tau."""
    hi = tables.n_max if hi is None else hi
    lam = tables.lambdaX[lo: hi + 1].astype(float)
    keep = lam != 0
    n = np.arange(lo, hi + 1, dtype=float)[keep]
    return math.fsum(lam[keep] ** 2 * np.exp(-tau * np.log(n)))


def check_lambda_sums(X: int, delta: float = 0.303, window_cap: Optional[int] = None,
                      tau: float = 2.0) -> List[LemmaReport]:
    """
    The window sum over X < n < 5X is complete. The three sums over all n >= 1 are
    truncated at window_cap; their terms are non-negative, so the partial sums are
    lower bounds of the true left-hand sides.
    """
    if X < 1000:
        raise DomainError(f"Invalid X={X} (requires X >= 1000)")
    if not tau > 1 or not delta > 0:
        raise DomainError(f"Invalid tau={tau}, delta={delta} (requires tau > 1, delta > 0)")
    window_cap = max(DEFAULT_WINDOW, 5 * X) if window_cap is None else window_cap
    if window_cap < 5 * X - 1:
        raise BudgetError(f"Invalid window_cap={window_cap} (requires window_cap >= 5X - 1 = {5 * X - 1})")
    tables = build_tables(X, window_cap)
    log_x = math.log(X)
    caveat = _below(X, LAMBDA_MIN)
    partial = f"{caveat}; sum truncated at n={window_cap}" if caveat else f"sum truncated at n={window_cap}"

    window = _lambda_sum(tables, 2.0, X + 1, 5 * X - 1)
    tau_rhs = B4 * tau ** 2 / (tau - 1) * math.exp(EULER_GAMMA * (tau - 1)) * log_x
    near_one = 1 + delta / log_x
    near_one_rhs = B4 / delta * (1 + delta / log_x) ** 2 * math.exp(delta * EULER_GAMMA / log_x) * log_x ** 2
    near_two = 2 + 2 * delta / log_x
    near_two_rhs = (
        B4 / (5 * delta * math.exp(delta)) * (1 + delta / log_x) ** 2
        * math.exp(delta * (EULER_GAMMA - math.log(5)) / log_x) * log_x ** 2 / X
        + B3 * math.exp(-2 * delta) / X
    )
    return [
        LemmaReport.make("lambda_window", f"X={X}", window, B3 / X, caveat=caveat),
        LemmaReport.make("lambda_tau", f"X={X}, tau={tau:g}", _lambda_sum(tables, tau), tau_rhs, caveat=partial),
        LemmaReport.make("lambda_near_one", f"X={X}, delta={delta:g}", _lambda_sum(tables, near_one),
                         near_one_rhs, caveat=partial),
        LemmaReport.make("lambda_near_two", f"X={X}, delta={delta:g}", _lambda_sum(tables, near_two),
                         near_two_rhs, caveat=partial),
    ]


def _divisor_tail_majorant(N: int, tau: float, D_before: float) -> float:
    """
    Upper bound for sum_{n >= N} d(n)/n^tau by partial summation,
    tau int_N^oo D(t) t^{-tau-1} dt - D(N-1) N^{-tau}, with
    D(t) <= t log t + (2 gamma - 1) t + c sqrt(t).
    """
    s = tau - 1
    log_n = math.log(N)
    integral = (
        (log_n / s + 1 / s ** 2 + (2 * EULER_GAMMA - 1) / s) * powr(N, -s)
        + DIVISOR_ERROR_FACTOR * powr(N, 0.5 - tau) / (tau - 0.5)
    )
    return tau * integral - D_before * powr(N, -tau)


def _divisor_square_tail_majorant(N: int, tau: float, D_before: float) -> float:
    """As above with sum_{n<=t} d(n)^2 <= t (log t + 1)^3."""
    s = tau - 1
    u = math.log(N) + 1
    # int_{log N}^oo (v + 1)^3 e^{-s v} dv
    integral = powr(N, -s) * (u ** 3 / s + 3 * u ** 2 / s ** 2 + 6 * u / s ** 3 + 6 / s ** 4)
    return tau * integral - D_before * powr(N, -tau)


def check_divisor_sums(X: int, tau: float, cap: Optional[int] = None) -> Tuple[LemmaReport, ...]:
    """
    Certified upper estimates of sum_{n>=X} d(n)/n^tau and d(n)^2/n^tau against their closed-form bounds.
    The d(n)^2 bound needs X >= 47; below that only the d(n) report is returned.
    """
    if not tau > 1:
        raise DomainError(f"Invalid tau={tau} (requires tau > 1)")
    if X < 1:
        raise DomainError(f"Invalid X={X} (requires X >= 1)")
    cap = max(DEFAULT_DIVISOR_CAP, 10 * X) if cap is None else cap
    if cap > MAX_N or cap <= X:
        raise BudgetError(f"Invalid cap={cap} (requires X < cap <= {MAX_N:.0e})")
    d = divisor_sieve(cap - 1).astype(float)
    n = np.arange(X, cap, dtype=float)
    weights = np.exp(-tau * np.log(n))
    window = d[X:cap]
    first = math.fsum(window * weights) + _divisor_tail_majorant(cap, tau, math.fsum(d))
    instance = f"X={X}, tau={tau:g}, exact to n={cap - 1}"
    reports = (LemmaReport.make("divisor", instance, first, divisor_tail_bound(X, tau)),)
    if X < DIVISOR_SQUARE_MIN:
        logger.debug("divisor_square skipped at X=%d (bound holds from X=%d)", X, DIVISOR_SQUARE_MIN)
        return reports
    second = math.fsum(window ** 2 * weights) + _divisor_square_tail_majorant(cap, tau, math.fsum(d ** 2))
    return reports + (LemmaReport.make("divisor_square", instance, second, divisor_square_tail_bound(X, tau)),)
