__version__ = "0.1.0"
from .config import ParameterSet, SearchConfig
from .bounds import BoundResult, bound, bound_log_form, bound_power_form, emit_table, validate_params
from .constants import ConstantBundle, eval_constants
from .optimization import minimize, minimize_eta_mu

__all__ = [
    "ParameterSet", "SearchConfig", "BoundResult", "ConstantBundle", "bound", "bound_log_form", "bound_power_form",
    "emit_table", "eval_constants", "minimize", "minimize_eta_mu", "validate_params",
]
