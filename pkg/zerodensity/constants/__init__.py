from .fixed import (
    A1, A2, B1, B2, B3, B4, DELTA_MAX, EULER_GAMMA, FIXED, H0, H_MIN, K_MIN, LOG_H0, M0, MU_2, X_MIN,
    FixedInputs, b6, eta0,
)
from .moments import (
    BETA, J_PAIRS, MeanValueConstants, eval_I, eval_J, eval_mean_value_constants, eval_omega, eval_U,
    j_coefficients, j_groups,
)
from .tail import TailConstants, TailMoment, eval_K_and_V, eval_M, eval_tail_constants
from .argument import (
    ArgumentConstants, LogConstants, b5, b7, b8, b11, divisor_square_tail_bound, divisor_tail_bound,
    eval_argument_constants, eval_log_constants,
)
from .bundle import ConstantBundle, ScriptConstants, b12, eval_constants, eval_script_constants
