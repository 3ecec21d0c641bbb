from .reports import LemmaReport, all_passed, failures, format_reports, reports_to_frame
from .arithmetic import (
    ArithmeticTables, build_tables, check_divisor_sums, check_lambda_sums, check_mobius_sums, divisor_sieve,
    lambda_sieve, mobius_sieve,
)
from .oracles import check_mv_inequality, check_weight_bounds, check_zeta_bounds, mean_square_integral, weight
from .moments import ConvexityExponents, check_smoothing_and_convexity, convexity_exponents, mollified_zeta
