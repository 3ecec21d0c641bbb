"""
The full constant cascade for one ParameterSet, and the two master constants
scriptC1 (zero count through the mollified second moment) and scriptC2
(argument contributions).
"""
import math
from dataclasses import asdict, dataclass, fields
from typing import TYPE_CHECKING, Dict, NamedTuple

from ..errors import ValidationError, Violation
from ..utils import dump_key_value_text, parse_key_value_text
from .argument import eval_argument_constants, eval_log_constants
from .fixed import H0, LOG_H0, LOGLOG_H0
from .moments import eval_J, eval_mean_value_constants, eval_omega, eval_U
from .tail import eval_K_and_V, eval_M, eval_tail_constants

if TYPE_CHECKING:
    from ..config import ParameterSet


class ScriptConstants(NamedTuple):
    scriptC1: float
    scriptC2: float


@dataclass(frozen=True)
class ConstantBundle:
    C1: float
    C2: float
    C3: float
    C4: float
    C5: float
    C6: float
    C7: float
    C8: float
    a3: float
    b5: float
    b6: float
    b7: float
    b8: float
    b9: float
    b10: float
    b11_2mu: float
    b11_2mu_minus_1: float
    b12: float
    M_k_delta: float
    omega1_half: float
    omega2_sigma: float
    J: float
    U: float
    K: float
    V: float
    scriptC1: float
    scriptC2: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def to_text(self) -> str:
        return dump_key_value_text(self.to_dict())

    @classmethod
    def from_text(cls, text: str) -> "ConstantBundle":
        values = parse_key_value_text(text)
        names = [f.name for f in fields(cls)]
        missing = [n for n in names if n not in values]
        if missing:
            raise ValueError(f"Invalid constant bundle text: missing {missing}")
        return cls(**{n: float(values[n]) for n in names})


def b12(H: float) -> float:
    return 1 / (2 * (1 - 1 / H) ** 2)


def _log_scriptC1(p: "ParameterSet", U: float, V: float, M: float) -> float:
    log_x0 = math.log(p.k * H0)
    two_s = 2 * p.sigma - 1
    shifted = log_x0 + 2 * p.delta
    u_exponent = 2 * (1 - p.sigma) + 2 * p.d / LOG_H0 + 2 * p.delta * two_s / shifted
    return (
        math.log(b12(p.H))
        + (8 / 3) * p.delta * two_s * M
        + 4 * p.delta * two_s * LOGLOG_H0 / shifted
        + u_exponent * math.log(U)
        + two_s * math.log(V)
        + 2 * p.d * (2 * LOGLOG_H0 - math.log(log_x0)) / LOG_H0
        + 8 * p.d / 3
        + 2 * p.alpha
    )


def eval_script_constants(p: "ParameterSet") -> ScriptConstants:
    U = eval_U(p.alpha, p.k, H0)
    if not U > 1:
        raise ValidationError([
            Violation("U > 1", "hypothesis of the compiled bound", f"U(alpha, k, H0) = {U:.6g} is not above 1")
        ])
    V = eval_K_and_V(p.alpha, p.k, p.delta, H0).V
    scriptC1 = math.exp(_log_scriptC1(p, U, V, eval_M(p.k, p.delta)))
    C7 = eval_argument_constants(p.k, p.eta, p.H).C7
    C8 = eval_log_constants(p.k, p.mu).C8
    scriptC2 = C7 * (p.mu - p.sigma + p.d / LOG_H0) + C8
    return ScriptConstants(scriptC1, scriptC2)


def eval_constants(p: "ParameterSet") -> ConstantBundle:
    mv = eval_mean_value_constants(p.k)
    tail = eval_tail_constants(p.k, p.delta)
    arg = eval_argument_constants(p.k, p.eta, p.H)
    logc = eval_log_constants(p.k, p.mu)
    K, V = eval_K_and_V(p.alpha, p.k, p.delta, H0)
    script = eval_script_constants(p)
    return ConstantBundle(
        C1=mv.C1,
        C2=mv.C2,
        C3=mv.C3,
        C4=mv.C4,
        C5=tail.C5,
        C6=tail.C6,
        C7=arg.C7,
        C8=logc.C8,
        a3=mv.a3,
        b5=arg.b5,
        b6=arg.b6_at_1e9,
        b7=arg.b7,
        b8=arg.b8,
        b9=arg.b9,
        b10=logc.b10,
        b11_2mu=logc.b11_2mu,
        b11_2mu_minus_1=logc.b11_2mu_minus_1,
        b12=b12(p.H),
        M_k_delta=eval_M(p.k, p.delta),
        omega1_half=eval_omega(1, 0.5, H0, p.alpha),
        omega2_sigma=eval_omega(2, max(p.sigma_prime, 0.5), H0, p.alpha, p.H),
        J=eval_J(p.k, H0, p.alpha),
        U=eval_U(p.alpha, p.k, H0),
        K=K,
        V=V,
        scriptC1=script.scriptC1,
        scriptC2=script.scriptC2,
    )
