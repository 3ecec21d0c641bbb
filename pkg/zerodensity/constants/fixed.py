"""
Fixed numeric inputs of the zero-density bound.

All logarithms in the package are natural logarithms.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

logger = logging.getLogger(__name__)

# height up to which the Riemann hypothesis is known to hold
H0 = 3.0610046e10
LOG_H0 = math.log(H0)
LOGLOG_H0 = math.log(LOG_H0)

# subconvexity constants: |zeta(1/2+it)| <= a1 t^{1/6} log t + a2
A1 = 0.63
A2 = 2.851

# arithmetic sum constants for mu^2 and lambda_X
B1 = 0.62
B2 = 1.048
B3 = 0.605
B4 = 0.529

# Montgomery-Vaughan mean value constant
M0 = math.sqrt(1 + (2 / 3) * math.sqrt(6 / 5))

EULER_GAMMA = float(np.euler_gamma)

# lower end of the admissible range for X = kT
X_MIN = 1e9
K_MIN = X_MIN / H0

H_MIN = 1002.0

# 0 < delta < log(H0) (log log H0 - 1) / 2
DELTA_MAX = LOG_H0 * (LOGLOG_H0 - 1) / 2

# (log X)^2 / X^{2mu-2} decreases in X once log X > 1/(mu-1); the threshold carries a 3/2 margin
# over that, so it holds from X = 1e9 for every mu > MU_2 = 1.072382...
MU_2 = 1 + 1.5 / math.log(X_MIN)


def b6(X: float, eta: float) -> float:
    """Upper bound for sum_{n > X} d(n) / n^{1+eta}, the bound on |f_X(1+eta+it)|."""
    log_x = math.log(X)
    return ((1 + eta) * log_x / (eta * math.exp(eta * log_x))) * (
        1
        + 1 / (eta * log_x)
        + EULER_GAMMA / log_x
        + 7 * eta / (12 * (1 + eta) * X * log_x)
    )


@lru_cache(maxsize=None)
def eta0(xtol: float = 1e-12) -> float:
    """Root of b6(1e9, eta) = 1 on (0, 1/2); below it 1 - b6^2 is no longer positive."""
    # b6(1e9, .) decreases on (1/log(1e9), 1/2), which brackets the root
    lo = 1 / math.log(X_MIN) + 1e-6
    root = float(optimize.brentq(lambda e: b6(X_MIN, e) - 1, lo, 0.5, xtol=xtol))
    logger.debug("eta0: b6(%.3g, eta) = 1 at eta=%.12f", X_MIN, root)
    return root


@dataclass(frozen=True)
class FixedInputs:
    H0: float = H0
    a1: float = A1
    a2: float = A2
    b1: float = B1
    b2: float = B2
    b3: float = B3
    b4: float = B4
    m0: float = M0
    euler_gamma: float = EULER_GAMMA

    @property
    def eta0(self) -> float:
        return eta0()

    @property
    def a3(self) -> float:
        # minimum of a1 t^{1/6} log t + a2, attained at t = e^{-6}
        return -6 * self.a1 / math.e + self.a2


FIXED = FixedInputs()
