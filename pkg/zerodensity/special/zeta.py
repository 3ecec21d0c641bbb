"""
Riemann zeta function.

``zeta_real`` covers s > 1 through scipy's Hurwitz zeta. ``zeta_complex`` is the
Euler-Maclaurin summation

    zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
              + sum_{k=1}^{m} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1} + R_m

where the remainder obeys

    |R_m| <= |s(s+1)...(s+2m+1) B_{2m+2} / (2m+2)!| * N^{-sigma-2m-1} / (sigma+2m+1),

i.e. the first omitted correction inflated by |s+2m+1|/(sigma+2m+1). It is only
used by the verification oracles, on |Im s| <= 1e6.
"""
import logging
import math
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy import special

from ..errors import DomainError, PrecisionError
from .gamma import DEFAULT_PRECISION, EvalPrecision

logger = logging.getLogger(__name__)

MAX_ABS_IMAG = 1e6
MAX_CORRECTIONS = 60
CHUNK_SIZE = 2048


@lru_cache(maxsize=None)
def _bernoulli_ratios(m: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 0..m."""
    b = special.bernoulli(2 * m)
    return np.array([b[2 * k] / math.factorial(2 * k) for k in range(m + 1)])


def zeta_real(s: float) -> float:
    if not s > 1:
        raise DomainError(f"Invalid argument s={s} for zeta_real (requires s > 1)")
    return float(special.zeta(s, 1))


def euler_maclaurin_cutoff(s) -> int:
    """Length N of the direct sum; keeps |s + 2k| / (2 pi N) near 1/2 for the first corrections."""
    s = np.asarray(s, dtype=complex)
    return 16 + int(math.ceil(np.max(np.abs(s.imag) / math.pi + np.abs(s.real))))


def _zeta_euler_maclaurin(s: np.ndarray, n_cut: int, rel_tol: float):
    """Vectorised summation at a common cutoff over a flat array; returns values and remainder bounds."""
    s = np.asarray(s, dtype=complex).ravel()
    sigma = s.real
    log_n = np.log(np.arange(1, n_cut, dtype=float))
    head = np.empty_like(s)
    for start in range(0, s.size, CHUNK_SIZE):
        block = s[start:start + CHUNK_SIZE]
        head[start:start + CHUNK_SIZE] = np.exp(-np.outer(block, log_n)).sum(axis=1)

    log_cut = math.log(n_cut)
    n_pow = np.exp(-s * log_cut)  # N^{-s}
    tail = n_cut * n_pow / (s - 1) + 0.5 * n_pow

    ratios = _bernoulli_ratios(MAX_CORRECTIONS + 1)
    poch = s.copy()  # s(s+1)...(s+2k-2)
    power = n_pow / n_cut  # N^{-s-2k+1}
    remainder = np.full(s.shape, np.inf)
    for k in range(1, MAX_CORRECTIONS + 1):
        tail = tail + ratios[k] * poch * power
        next_poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        next_power = power / (n_cut * n_cut)
        denom = sigma + 2 * k + 1
        with np.errstate(divide="ignore", invalid="ignore"):
            bound = np.abs(ratios[k + 1] * next_poch * next_power) * np.abs(s + 2 * k + 1) / denom
        bound = np.where(denom > 0, bound, np.inf)
        remainder = bound
        values = head + tail
        if np.all(remainder <= rel_tol * np.abs(values)):
            logger.debug("Euler-Maclaurin: N=%d, %d corrections", n_cut, k)
            return values, remainder
        poch, power = next_poch, next_power
    return head + tail, remainder


def zeta_complex(s: complex, prec: Optional[EvalPrecision] = None) -> complex:
    """
    Riemann zeta at a complex point s != 1 with |Im s| <= 1e6.
    Raises PrecisionError when the certified remainder cannot be pushed below
    ``prec.rel_tol * |zeta(s)|`` within ``prec.max_terms`` summands.
    """
    prec = prec or DEFAULT_PRECISION
    s = complex(s)
    if s == 1:
        raise DomainError("zeta_complex has a pole at s=1")
    if abs(s.imag) > MAX_ABS_IMAG:
        raise DomainError(f"Invalid argument s={s}: |Im s| must not exceed {MAX_ABS_IMAG:g}")
    values = zeta_vector(np.array([s]), prec)
    return complex(values[0])


def zeta_vector(s: np.ndarray, prec: Optional[EvalPrecision] = None) -> np.ndarray:
    """zeta over an array of points sharing one Euler-Maclaurin cutoff."""
    prec = prec or DEFAULT_PRECISION
    s = np.asarray(s, dtype=complex)
    if s.size == 0:
        return s.copy()
    if np.any(s == 1):
        raise DomainError("zeta has a pole at s=1")
    if np.any(np.abs(s.imag) > MAX_ABS_IMAG):
        raise DomainError(f"Invalid arguments: |Im s| must not exceed {MAX_ABS_IMAG:g}")
    n_cut = euler_maclaurin_cutoff(s)
    if n_cut > prec.max_terms:
        raise PrecisionError(f"Euler-Maclaurin needs {n_cut} terms, above max_terms={prec.max_terms}")
    values, remainder = _zeta_euler_maclaurin(s, n_cut, prec.rel_tol)
    values, remainder = values.reshape(s.shape), remainder.reshape(s.shape)
    if not np.all(remainder <= prec.rel_tol * np.abs(values)):
        raise PrecisionError(
            f"Euler-Maclaurin remainder above rel_tol={prec.rel_tol:g} after {MAX_CORRECTIONS} corrections"
        )
    return values
