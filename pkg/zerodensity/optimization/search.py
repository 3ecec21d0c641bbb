"""
Parameter search for the zero-density bound.

The search follows the structure of the bound: H is pinned (or scanned), then
eta minimises C7(eta, H), then mu minimises mu C7 + C8(k, mu), and finally the
remaining parameters (k, alpha, delta, d) are scanned on a geometric grid that
is refined around the incumbent by shrinking boxes.
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy import optimize
from tqdm import tqdm

from ..bounds.density import BoundResult, bound_log_form, bound_power_form
from ..bounds.validation import validate_params
from ..config import ParameterSet, SearchConfig, max_d
from ..constants import H0, eta0, eval_argument_constants, eval_log_constants, eval_script_constants
from ..errors import DomainError, NoValidPointError, ValidationError

logger = logging.getLogger(__name__)

COARSE_POINTS = 41
# order used to break ties between equal objective values
TIE_ORDER = ("k", "alpha", "delta", "d", "H_gap")


def _safe(f: Callable[[float], float]) -> Callable[[float], float]:
    def wrapped(x):
        try:
            value = f(float(x))
        except DomainError:
            return math.inf
        return value if math.isfinite(value) else math.inf
    return wrapped


def golden_minimize(f: Callable[[float], float], lo: float, hi: float, xtol: float = 1e-6) -> float:
    """
    Minimise a unimodal f on [lo, hi]: coarse scan, then golden-section inside the
    bracket around the best scan point. Points where f raises DomainError are excluded.
    """
    f = _safe(f)
    xs = np.linspace(lo, hi, COARSE_POINTS)
    values = np.array([f(x) for x in xs])
    i = int(np.argmin(values))
    if not np.isfinite(values[i]):
        raise NoValidPointError(f"No admissible point in [{lo:.6g}, {hi:.6g}]")
    if i == 0 or i == len(xs) - 1:
        logger.debug("golden_minimize: minimum at the boundary x=%.8g", xs[i])
        return float(xs[i])
    a, b, c = xs[i - 1], xs[i], xs[i + 1]
    if values[i] < values[i - 1] and values[i] < values[i + 1]:
        res = optimize.minimize_scalar(f, bracket=(a, b, c), method="golden", tol=xtol)
    else:
        res = optimize.minimize_scalar(f, bounds=(a, c), method="bounded", options={"xatol": xtol})
    logger.debug("golden_minimize: bracket (%.8g, %.8g, %.8g) -> x=%.10g", a, b, c, res.x)
    return float(res.x)


@lru_cache(maxsize=4096)
def minimize_eta_mu(k: float, H: float, xtol: float = 1e-6) -> Tuple[float, float]:
    """eta minimising C7(eta, H), then mu minimising mu C7(eta, H) + C8(k, mu) on [1 + eta0, 1 + eta]."""
    if not 1002 <= H <= H0:
        raise DomainError(f"Invalid H={H} (requires 1002 <= H <= H0)")
    e0 = eta0()
    eta = golden_minimize(lambda e: eval_argument_constants(k, e, H).C7, e0 + 1e-9, 0.5 - 1e-9, xtol)
    C7 = eval_argument_constants(k, eta, H).C7
    mu = golden_minimize(lambda m: m * C7 + eval_log_constants(k, m).C8, 1 + e0, 1 + eta, xtol)
    logger.debug("minimize_eta_mu(k=%.6g, H=%.10g): eta=%.8f mu=%.8f", k, H, eta, mu)
    return eta, mu


class GridSearch:
    """Coarse geometric grid over the free parameters plus shrinking-box refinement."""

    def __init__(self, sigma: float, config: Optional[SearchConfig] = None):
        if not 0.5 < sigma < 1:
            raise DomainError(f"Invalid sigma={sigma} (requires 1/2 < sigma < 1)")
        self.sigma = sigma
        self.config = config or SearchConfig()
        self.names = self.config.searched()
        self.ranges = self._ranges()
        self.history: List[float] = []
        self.evaluations = 0

    def _ranges(self) -> Dict[str, Tuple[float, float]]:
        cfg = self.config
        d_hi = max_d(self.sigma)
        if cfg.d_range is None:
            d_range = (min(0.01, d_hi / 2), d_hi)
        else:
            d_range = (min(cfg.d_range[0], d_hi / 2), min(cfg.d_range[1], d_hi))
        return {
            "k": cfg.k_range,
            "alpha": cfg.alpha_range,
            "delta": cfg.delta_range,
            "d": d_range,
            "H_gap": cfg.H_gap_range,
        }

    def make_params(self, point: Dict[str, float]) -> ParameterSet:
        cfg = self.config
        values = {"H_gap": cfg.H_gap}
        values.update(cfg.fixed)
        values.update(point)
        eta, mu = minimize_eta_mu(values["k"], H0 - values["H_gap"], cfg.eta_mu_xtol)
        return ParameterSet(
            sigma=self.sigma, k=values["k"], alpha=values["alpha"], delta=values["delta"], d=values["d"],
            eta=eta, mu=mu, T=H0, H_gap=values["H_gap"],
        )

    def objective(self, params: ParameterSet) -> float:
        self.evaluations += 1
        if validate_params(params):
            return math.inf
        try:
            if self.config.objective == "min_A":
                return eval_script_constants(params).scriptC1 / (2 * math.pi * params.d)
            return bound_log_form(params).value
        except (DomainError, ValidationError):
            return math.inf

    def _key(self, value: float, point: Dict[str, float]):
        return (value,) + tuple(point.get(name, 0.0) for name in TIE_ORDER)

    def _grid(self, boxes: Dict[str, Tuple[float, float]]):
        if not self.names:
            return [{}]
        axes = []
        for name in self.names:
            lo, hi = boxes[name]
            steps = getattr(self.config, f"{name}_steps")
            axes.append(np.geomspace(lo, hi, steps) if hi > lo else np.array([lo]))
        mesh = np.meshgrid(*axes, indexing="ij")
        return [dict(zip(self.names, (float(m.flat[i]) for m in mesh))) for i in range(mesh[0].size)]

    def run(self) -> Tuple[ParameterSet, BoundResult]:
        cfg = self.config
        boxes = {name: self.ranges[name] for name in self.names}
        log_steps = {
            name: math.log(boxes[name][1] / boxes[name][0]) / (getattr(cfg, f"{name}_steps") - 1)
            for name in self.names
        }
        best_key, best_point = (math.inf,), None
        per_round = int(np.prod([getattr(cfg, f"{n}_steps") for n in self.names])) if self.names else 1
        with tqdm(total=per_round * (cfg.refine_rounds + 1), desc=f"sigma={self.sigma}",
                  disable=not cfg.progress, leave=False) as bar:
            for round_index in range(cfg.refine_rounds + 1):
                for point in self._grid(boxes):
                    key = self._key(self.objective(self.make_params(point)), point)
                    if key < best_key:
                        best_key, best_point = key, point
                    bar.update(1)
                if best_point is None or not math.isfinite(best_key[0]):
                    raise NoValidPointError(f"Every grid point violates validation at sigma={self.sigma}")
                self.history.append(best_key[0])
                logger.debug("round %d: objective=%.10g at %s", round_index, best_key[0], best_point)
                # shrink each box to one grid step around the incumbent
                for name in self.names:
                    lo0, hi0 = self.ranges[name]
                    centre = math.log(best_point[name])
                    h = log_steps[name]
                    boxes[name] = (max(lo0, math.exp(centre - h)), min(hi0, math.exp(centre + h)))
                    log_steps[name] = 2 * h / (getattr(cfg, f"{name}_steps") - 1)
        params = self.make_params(best_point if best_point is not None else {})
        if cfg.objective == "min_A":
            return params, bound_power_form(params)
        return params, bound_log_form(params)


def minimize(sigma: float, config: Optional[SearchConfig] = None) -> Tuple[ParameterSet, BoundResult]:
    """Best admissible ParameterSet for ``config.objective`` at the given sigma."""
    search = GridSearch(sigma, config)
    params, result = search.run()
    logger.info("sigma=%s: %s=%.10g after %d evaluations", sigma, search.config.objective,
                search.history[-1], search.evaluations)
    return params, result
