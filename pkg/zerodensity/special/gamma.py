"""
Gamma function and its first two derivatives on the positive real axis.

The derivatives are expressed through the polygamma functions,

    Gamma'(x)  = Gamma(x) * psi(x)
    Gamma''(x) = Gamma(x) * (psi(x)**2 + psi'(x)),

with Gamma, psi (digamma) and psi' (trigamma) taken from ``scipy.special``.
"""
from dataclasses import dataclass

from scipy import special

from ..errors import DomainError


@dataclass(frozen=True)
class EvalPrecision:
    rel_tol: float = 1e-12
    max_terms: int = 200_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"Invalid rel_tol value: {self.rel_tol} (must be > 0)")
        if self.max_terms < 10:
            raise ValueError(f"Invalid max_terms value: {self.max_terms} (must be >= 10)")


DEFAULT_PRECISION = EvalPrecision()


def digamma(x: float) -> float:
    return float(special.digamma(x))


def trigamma(x: float) -> float:
    return float(special.polygamma(1, x))


def gamma_deriv(j: int, x: float) -> float:
    """
    Return the j-th derivative of Euler's Gamma function at x > 0, for j in {0, 1, 2}.
    """
    if j not in (0, 1, 2):
        raise DomainError(f"Invalid derivative order j={j}. Supported orders: 0, 1, 2")
    if not x > 0:
        raise DomainError(f"Invalid argument x={x} for gamma_deriv (requires x > 0)")
    g = float(special.gamma(x))
    if j == 0:
        return g
    psi = digamma(x)
    if j == 1:
        return g * psi
    return g * (psi * psi + trigamma(x))
