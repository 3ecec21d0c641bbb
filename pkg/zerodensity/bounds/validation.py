import math
from typing import List

from ..config import ParameterSet
from ..constants import (
    DELTA_MAX, H0, H_MIN, K_MIN, LOG_H0, MU_2, b6, eta0, eval_K_and_V, eval_U, j_coefficients,
)
from ..errors import DomainError, Violation


def _in_range_checks(p: ParameterSet) -> List[Violation]:
    e0 = eta0()
    checks = [
        (K_MIN * (1 - 1e-12) <= p.k <= 1, "k range", "X = kT >= 1e9 and k <= 1",
         f"k = {p.k:g} outside [1e9/H0, 1] = [{K_MIN:.6g}, 1]"),
        (p.d > 0, "d > 0", "choice sigma' = sigma - d/log T", f"d = {p.d:g} is not positive"),
        (p.alpha > 0, "alpha > 0", "Gaussian weight", f"alpha = {p.alpha:g} is not positive"),
        (0 < p.delta < DELTA_MAX, "delta range", "monotonicity of log log T / (log kT + 2 delta)",
         f"delta = {p.delta:g} outside (0, {DELTA_MAX:.4f})"),
        (e0 < p.eta < 0.5, "eta range", "argument bound for h_X",
         f"eta = {p.eta:g} outside (eta0, 1/2) = ({e0:.6f}, 0.5): eta below eta0" if p.eta <= e0
         else f"eta = {p.eta:g} outside (eta0, 1/2) = ({e0:.6f}, 0.5)"),
        (1 + e0 <= p.mu <= 1 + p.eta, "mu range", "lower bound for log|h_X| on Re s = mu",
         f"mu = {p.mu:g} outside [1 + eta0, 1 + eta] = [{1 + e0:.6f}, {1 + p.eta:.6f}]"),
        (p.mu > MU_2, "mu > mu_2", "decrease of (log kT)^2 / (kT)^{2mu-2} in T",
         f"mu = {p.mu:g} is not above mu_2 = {MU_2:.6f}"),
        (H_MIN <= p.H <= H0 and p.H_gap >= 0, "H range", "lower weight envelope",
         f"H = H0 - {p.H_gap:g} outside [1002, H0]"),
        (p.T >= H0, "T >= H0", "zeros below H0 lie on the critical line",
         f"T = {p.T:.10g} is below H0 = {H0:.10g}"),
        (p.T_minus_H > 0, "H < T", "count of zeros between H and T",
         f"H is not below T (T - H = {p.T_minus_H:g})"),
        (0.5 + p.d / LOG_H0 < p.sigma < 1, "sigma range", "hypothesis sigma > 1/2 + d/log H0",
         f"sigma ≤ 1/2 + d/log H0 ({p.sigma:g} <= {0.5 + p.d / LOG_H0:.6f})" if p.sigma <= 0.5 + p.d / LOG_H0
         else f"sigma = {p.sigma:g} is not below 1"),
    ]
    return [Violation(name, source, message) for ok, name, source, message in checks if not ok]


def _moment_checks(p: ParameterSet) -> List[Violation]:
    violations = []
    try:
        coefficients = j_coefficients(p.k, p.alpha)
        negative = [i + 1 for i, c in enumerate(coefficients) if not c > 0]
        if negative:
            violations.append(Violation(
                "J coefficients", "monotonicity of U in T",
                f"J(k, T) coefficient group(s) {negative} not positive at k = {p.k:g}, alpha = {p.alpha:g}",
            ))
        U = eval_U(p.alpha, p.k, H0)
        if not U > 1:
            violations.append(Violation("U > 1", "compiled bound", f"U(alpha, k, H0) = {U:.6g} is not above 1"))
        V = eval_K_and_V(p.alpha, p.k, p.delta, H0).V
        if not V > 1:
            violations.append(Violation("V > 1", "compiled bound", f"V(alpha, k, delta, H0) = {V:.6g} is not above 1"))
        u = b6(p.k * H0, p.mu - 1)
        if not u < 1:
            violations.append(Violation(
                "b6(kH0, mu-1) < 1", "lower bound for log|h_X| on Re s = mu",
                f"b6(kH0, mu - 1) = {u:.6g} is not below 1",
            ))
    except DomainError as exc:
        violations.append(Violation("domain", "constant evaluation", str(exc)))
    return violations


def validate_params(p: ParameterSet) -> List[Violation]:
    """
    Every hypothesis the bound rests on, checked numerically. Returns the violated
    ones; an empty list means the parameter set is admissible.
    """
    violations = _in_range_checks(p)
    if any(v.name in ("k range", "alpha > 0", "delta range") for v in violations):
        return violations
    if not (math.isfinite(p.mu) and p.mu > 1):
        return violations
    return violations + _moment_checks(p)
