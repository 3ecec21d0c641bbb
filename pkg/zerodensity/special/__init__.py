from .gamma import DEFAULT_PRECISION, EvalPrecision, digamma, gamma_deriv, trigamma
from .zeta import zeta_complex, zeta_real, zeta_vector
