"""
Explicit upper bounds for N(sigma, T), the number of zeros rho = beta + i gamma of
the Riemann zeta function with beta > sigma and 0 < gamma < T.

Two shapes are available for T >= H0:

    log form:   (T-H) log T / (2 pi d) * log(1 + C1 (log kT)^{2 sigma} (log T)^{4(1-sigma)} T^{8(1-sigma)/3} / (T-H))
                + C2 (log T)^2 / (2 pi d)
    power form: A (log kT)^{2 sigma} (log T)^{5-4 sigma} T^{8(1-sigma)/3} + B (log T)^2

with A = C1/(2 pi d), B = C2/(2 pi d) and C1, C2 the master constants of
``zerodensity.constants``. The power form follows from log(1+x) <= x and is never
smaller than the log form.
"""
import logging
import math
import warnings
from dataclasses import dataclass

from ..config import ParameterSet
from ..constants import eval_script_constants
from ..errors import ValidationError
from ..utils import powr
from .validation import validate_params

logger = logging.getLogger(__name__)

LOG_FORM = "log_form"
POWER_FORM = "power_form"
FORMS = (LOG_FORM, POWER_FORM)


@dataclass(frozen=True)
class BoundResult:
    form: str
    A: float
    B: float
    value: float
    params: ParameterSet

    def to_dict(self):
        return {"form": self.form, "A": self.A, "B": self.B, "value": self.value}


def _check(p: ParameterSet):
    violations = validate_params(p)
    if violations:
        raise ValidationError(violations)
    if p.delta < 1:
        warnings.warn("delta < 1 is outside the literal range delta >= 1 of the main theorem; "
                      "it is accepted on the whole range 0 < delta < log H0 (log log H0 - 1)/2")


def _log_growth(p: ParameterSet) -> float:
    """log of (log kT)^{2 sigma} (log T)^{4(1-sigma)} T^{8(1-sigma)/3}."""
    log_t = math.log(p.T)
    return (
        2 * p.sigma * math.log(math.log(p.k * p.T))
        + 4 * (1 - p.sigma) * math.log(log_t)
        + (8 / 3) * (1 - p.sigma) * log_t
    )


def _evaluate(p: ParameterSet):
    _check(p)
    scriptC1, scriptC2 = eval_script_constants(p)
    two_pi_d = 2 * math.pi * p.d
    log_t = math.log(p.T)
    # x is the argument of log(1+x); both forms share it and its prefactor
    scale = p.T_minus_H * log_t / two_pi_d
    x = math.exp(math.log(scriptC1) + _log_growth(p) - math.log(p.T_minus_H))
    argument_term = scriptC2 * log_t ** 2 / two_pi_d
    return scriptC1 / two_pi_d, scriptC2 / two_pi_d, scale, x, argument_term


def bound_log_form(p: ParameterSet) -> BoundResult:
    A, B, scale, x, argument_term = _evaluate(p)
    value = scale * math.log1p(x) + argument_term
    logger.debug("log form at sigma=%s: main=%.6g argument=%.6g", p.sigma, scale * math.log1p(x), argument_term)
    return BoundResult(LOG_FORM, A, B, value, p)


def bound_power_form(p: ParameterSet) -> BoundResult:
    A, B, scale, x, argument_term = _evaluate(p)
    return BoundResult(POWER_FORM, A, B, scale * x + argument_term, p)


def bound(p: ParameterSet, form: str = LOG_FORM) -> BoundResult:
    if form not in FORMS:
        raise ValueError(f"Invalid form: {form}. Supported forms: {FORMS}")
    return bound_log_form(p) if form == LOG_FORM else bound_power_form(p)


def ramare_bound(sigma: float, T: float) -> float:
    """Earlier explicit bound 965 (3T)^{8(1-sigma)/3} (log T)^{5-2 sigma} + 51.5 (log T)^2, kept for comparison."""
    if not 0.5 < sigma < 1:
        raise ValueError(f"Invalid sigma={sigma} (requires 1/2 < sigma < 1)")
    log_t = math.log(T)
    return 965 * powr(3 * T, 8 * (1 - sigma) / 3) * powr(log_t, 5 - 2 * sigma) + 51.5 * log_t ** 2
