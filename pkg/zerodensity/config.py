import math
import warnings
from dataclasses import MISSING, asdict, dataclass, fields, replace
from typing import Dict, Mapping, Optional, Tuple

from .constants.fixed import DELTA_MAX, H0, K_MIN, LOG_H0
from .utils import dump_key_value_text, parse_key_value_text

OBJECTIVES = ("min_A", "min_bound_at_H0")
SEARCH_PARAMETERS = ("k", "alpha", "delta", "d", "H_gap")


@dataclass(frozen=True)
class ParameterSet:
    """
    The tuple (sigma, T, k, alpha, delta, d, eta, mu, H) fixing every bound.

    H is kept as its distance ``H_gap = H0 - H`` to H0: float64 has a spacing of
    about 3.8e-6 near H0, so H0 - 1e-6 has no representation of its own.
    X is always kT.
    """
    sigma: float
    k: float
    alpha: float
    delta: float
    d: float
    eta: float
    mu: float
    T: float = H0
    H_gap: float = 1.0

    @property
    def H(self) -> float:
        return H0 - self.H_gap

    @property
    def X(self) -> float:
        return self.k * self.T

    @property
    def T_minus_H(self) -> float:
        return (self.T - H0) + self.H_gap

    @property
    def sigma_prime(self) -> float:
        return self.sigma - self.d / LOG_H0

    def replace(self, **changes) -> "ParameterSet":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def to_text(self) -> str:
        return dump_key_value_text(self.to_dict())

    @classmethod
    def from_mapping(cls, values: Mapping[str, object], base: Optional["ParameterSet"] = None) -> "ParameterSet":
        """
        Build a ParameterSet from a flat mapping, optionally on top of ``base``.
        ``H`` is accepted in place of ``H_gap``.
        """
        valid = [f.name for f in fields(cls)] + ["H"]
        unknown = sorted(set(values) - set(valid))
        if unknown:
            raise ValueError(f"Invalid parameter name(s) {unknown}. Valid names: {valid}")
        parsed = {}
        for name, raw in values.items():
            try:
                parsed[name] = float(raw)
            except (TypeError, ValueError):
                raise ValueError(f"Invalid value for {name}: {raw!r} (expected a real number)") from None
        if "H" in parsed:
            if "H_gap" in parsed:
                raise ValueError("Invalid parameter mapping: give either H or H_gap, not both")
            parsed["H_gap"] = H0 - parsed.pop("H")
        if base is not None:
            return base.replace(**parsed)
        missing = [f.name for f in fields(cls) if f.default is MISSING and f.name not in parsed]
        if missing:
            raise ValueError(f"Invalid parameter mapping: missing {missing}")
        return cls(**parsed)

    @classmethod
    def from_text(cls, text: str, base: Optional["ParameterSet"] = None) -> "ParameterSet":
        return cls.from_mapping(parse_key_value_text(text), base=base)


def _as_range(values) -> Tuple[float, float]:
    low, high = (float(v) for v in values)
    return low, high


def max_d(sigma: float) -> float:
    """Largest d with sigma > 1/2 + d/log H0, kept strictly inside the open range."""
    return (sigma - 0.5) * LOG_H0 * (1 - 1e-9)


class SearchConfig:
    def __init__(self,
                 objective: str = "min_A",
                 k_range: Tuple[float, float] = (K_MIN, 1.0),
                 alpha_range: Tuple[float, float] = (0.01, 1.0),
                 delta_range: Tuple[float, float] = (0.05, 2.0),
                 d_range: Optional[Tuple[float, float]] = None,
                 H_gap_range: Tuple[float, float] = (1.0, 1e6),
                 k_steps: int = 6,
                 alpha_steps: int = 12,
                 delta_steps: int = 8,
                 d_steps: int = 12,
                 H_gap_steps: int = 2,
                 refine_rounds: int = 5,
                 H_gap: float = 1.0,
                 search_H: bool = False,
                 fixed: Optional[Dict[str, float]] = None,
                 eta_mu_xtol: float = 1e-6,
                 max_evaluations: int = 100_000,
                 progress: bool = True,
                 **kwargs):
        if objective not in OBJECTIVES:
            raise ValueError(f"Invalid objective: {objective}. Supported objectives: {OBJECTIVES}")
        if kwargs:
            warnings.warn(f"Ignoring unknown search options: {sorted(kwargs)}")
        self.objective = objective
        self.k_range = _as_range(k_range)
        self.alpha_range = _as_range(alpha_range)
        self.delta_range = _as_range(delta_range)
        self.d_range = _as_range(d_range) if d_range is not None else None
        self.H_gap_range = _as_range(H_gap_range)
        self.k_steps = k_steps
        self.alpha_steps = alpha_steps
        self.delta_steps = delta_steps
        self.d_steps = d_steps
        self.H_gap_steps = H_gap_steps
        self.refine_rounds = refine_rounds
        self.H_gap = float(H_gap)
        self.search_H = search_H
        self.fixed = {name: float(value) for name, value in (fixed or {}).items()}
        self.eta_mu_xtol = float(eta_mu_xtol)
        self.max_evaluations = max_evaluations
        self.progress = progress
        self._check()

    def _check(self):
        unknown = sorted(set(self.fixed) - set(SEARCH_PARAMETERS))
        if unknown:
            raise ValueError(f"Invalid fixed parameter(s) {unknown}. Searchable: {SEARCH_PARAMETERS}")
        for name in SEARCH_PARAMETERS:
            steps = getattr(self, f"{name}_steps")
            if steps < 2:
                raise ValueError(f"Invalid {name}_steps value: {steps} (grid resolutions must be >= 2)")
        if self.refine_rounds < 0:
            raise ValueError(f"Invalid refine_rounds value: {self.refine_rounds}")
        bounds = {
            "k": (K_MIN, 1.0),
            "alpha": (0.0, math.inf),
            "delta": (0.0, DELTA_MAX),
            "d": (0.0, LOG_H0 / 2),
            "H_gap": (0.0, H0 - 1002),
        }
        for name, (lo, hi) in bounds.items():
            rng = getattr(self, f"{name}_range")
            if rng is None:
                continue
            a, b = rng
            if not (lo * (1 - 1e-12) <= a <= b <= hi and a > 0):
                raise ValueError(f"Invalid {name}_range {rng}: must satisfy {lo:g} <= low <= high <= {hi:g}")
        if not 0 <= self.H_gap <= H0 - 1002:
            raise ValueError(f"Invalid H_gap value: {self.H_gap}")
        per_round = 1
        for name in self.searched():
            per_round *= getattr(self, f"{name}_steps")
        total = per_round * (self.refine_rounds + 1)
        if total > self.max_evaluations:
            raise ValueError(
                f"Invalid search budget: {total} grid evaluations exceed max_evaluations={self.max_evaluations}"
            )

    def searched(self):
        names = [n for n in ("k", "alpha", "delta", "d") if n not in self.fixed]
        if self.search_H and "H_gap" not in self.fixed:
            names.append("H_gap")
        return names

    def to_dict(self):
        return dict(vars(self))

    @classmethod
    def from_namespace(cls, namespace) -> "SearchConfig":
        return cls(**vars(namespace))

    def __repr__(self):
        items = ", ".join(f"{k}={v!r}" for k, v in vars(self).items())
        return f"SearchConfig({items})"
