"""
Tables of bounds for a list of sigma values.

Table 1 lists the power-form coefficients A, B with k, mu, alpha, delta, d chosen
per row, eta = 0.25618 and H = H0 - 1. Table 2 lists the log-form bound at T = H0
with k = 1, alpha = 0.324, delta = 0.3, eta = 0.2561, mu = 1.2453, H = H0 - 1e-6
and d chosen per row.
"""
import io
import logging
import math
from dataclasses import astuple, dataclass, fields
from decimal import ROUND_HALF_EVEN, Decimal
from typing import IO, List, Optional, Sequence, Union

import pandas as pd
from tqdm import tqdm

from ..config import ParameterSet, SearchConfig
from ..constants import H0, eval_script_constants
from .density import BoundResult, bound_log_form, bound_power_form

logger = logging.getLogger(__name__)

TABLE1_ETA = 0.25618
TABLE1_H_GAP = 1.0

# sigma, k, mu, alpha, delta, d, A, B
TABLE1_ROWS = (
    (0.60, 0.5, 1.251, 0.288, 0.3140, 0.341, 2.177, 5.663),
    (0.65, 0.6, 1.249, 0.256, 0.3070, 0.340, 2.963, 5.249),
    (0.70, 0.8, 1.247, 0.222, 0.3040, 0.339, 3.983, 4.824),
    (0.75, 1.0, 1.245, 0.189, 0.3030, 0.338, 5.277, 4.403),
    (0.80, 1.0, 1.245, 0.160, 0.3030, 0.337, 6.918, 3.997),
    (0.85, 1.0, 1.245, 0.133, 0.3030, 0.336, 8.975, 3.588),
    (0.86, 1.0, 1.245, 0.127, 0.3030, 0.335, 9.441, 3.514),
    (0.87, 1.0, 1.245, 0.122, 0.3030, 0.335, 9.926, 3.430),
    (0.88, 1.0, 1.245, 0.116, 0.3030, 0.335, 10.431, 3.346),
    (0.89, 1.0, 1.245, 0.111, 0.3030, 0.335, 10.955, 3.262),
    (0.90, 1.0, 1.245, 0.105, 0.3030, 0.334, 11.499, 3.186),
    (0.91, 1.0, 1.245, 0.100, 0.3030, 0.334, 12.063, 3.102),
    (0.92, 1.0, 1.245, 0.095, 0.3030, 0.334, 12.646, 3.017),
    (0.93, 1.0, 1.245, 0.089, 0.3030, 0.333, 13.250, 2.941),
    (0.94, 1.0, 1.245, 0.084, 0.3030, 0.333, 13.872, 2.856),
    (0.95, 1.0, 1.245, 0.079, 0.3030, 0.333, 14.513, 2.772),
    (0.96, 1.0, 1.245, 0.074, 0.3030, 0.332, 15.173, 2.694),
    (0.97, 1.0, 1.245, 0.069, 0.3030, 0.332, 15.850, 2.609),
    (0.98, 1.0, 1.245, 0.064, 0.3030, 0.331, 16.544, 2.532),
    (0.99, 1.0, 1.245, 0.060, 0.3030, 0.331, 17.253, 2.446),
)

TABLE2_K = 1.0
TABLE2_ALPHA = 0.324
TABLE2_DELTA = 0.3
TABLE2_ETA = 0.2561
TABLE2_MU = 1.2453
TABLE2_H_GAP = 1e-6

# sigma, d, 1/(2 pi d), C1, C2/(2 pi d), bound on N(sigma, H0)
TABLE2_ROWS = (
    (0.60, 2.414, 0.066, 2094.73, 0.893, 520.28),
    (0.65, 3.621, 0.044, 97986.60, 0.595, 346.85),
    (0.70, 4.828, 0.033, 4583580.34, 0.447, 260.14),
    (0.75, 6.036, 0.027, 214409007.32, 0.357, 208.11),
    (0.80, 7.243, 0.022, 10029544375.44, 0.298, 173.42),
    (0.85, 8.450, 0.019, 469158276689.92, 0.255, 148.65),
    (0.86, 8.691, 0.019, 1012341447042.27, 0.248, 144.52),
    (0.87, 8.933, 0.018, 2184412502812.95, 0.242, 140.61),
    (0.88, 9.174, 0.018, 4713486735514.76, 0.235, 136.91),
    (0.89, 9.416, 0.017, 10170678467214.40, 0.229, 133.40),
    (0.90, 9.657, 0.017, 21946110446020.33, 0.224, 130.07),
    (0.91, 9.899, 0.017, 47354929689448.17, 0.218, 126.90),
    (0.92, 10.140, 0.016, 102181631292174.11, 0.213, 123.88),
    (0.93, 10.382, 0.016, 220485720114084.42, 0.208, 120.99),
    (0.94, 10.623, 0.015, 475760194464125.94, 0.203, 118.24),
    (0.95, 10.864, 0.015, 1026586948666903.92, 0.199, 115.62),
    (0.96, 11.106, 0.015, 2215151194732183.30, 0.195, 113.10),
    (0.97, 11.347, 0.015, 4779814142285142.58, 0.190, 110.70),
    (0.98, 11.589, 0.014, 10313798574616601.14, 0.186, 108.39),
    (0.99, 11.830, 0.014, 22254932487167323.15, 0.183, 106.18),
)

TABLE1_SIGMAS = tuple(row[0] for row in TABLE1_ROWS)
TABLE2_SIGMAS = tuple(row[0] for row in TABLE2_ROWS)

SOURCES = ("paper", "optimizer")


@dataclass(frozen=True)
class Table1Row:
    sigma: float
    k: float
    mu: float
    alpha: float
    delta: float
    d: float
    A: float
    B: float


@dataclass(frozen=True)
class Table2Row:
    sigma: float
    d: float
    inv_2pid: float
    scriptC1: float
    B: float
    bound: float


TableRow = Union[Table1Row, Table2Row]

HEADERS = {
    1: ("sigma_0", "k", "mu", "alpha", "delta", "d", "A=C1/(2 pi d)", "B=C2/(2 pi d)"),
    2: ("sigma", "d", "1/(2 pi d)", "C1", "C2/(2 pi d)", "N(sigma,H0)<="),
}
ROW_TYPES = {1: Table1Row, 2: Table2Row}
# decimals for human-readable output, column by column
PRETTY_DECIMALS = {
    1: (2, 1, 3, 3, 4, 3, 3, 3),
    2: (2, 3, 3, 2, 3, 2),
}


def _lookup(rows, sigma: float, which: int):
    for row in rows:
        if math.isclose(row[0], sigma, abs_tol=1e-12):
            return row
    raise ValueError(f"Invalid sigma={sigma} for table {which}. Available rows: {[r[0] for r in rows]}")


def table1_params(sigma: float) -> ParameterSet:
    s, k, mu, alpha, delta, d, _, _ = _lookup(TABLE1_ROWS, sigma, 1)
    return ParameterSet(sigma=s, k=k, alpha=alpha, delta=delta, d=d, eta=TABLE1_ETA, mu=mu,
                        T=H0, H_gap=TABLE1_H_GAP)


def table2_params(sigma: float) -> ParameterSet:
    s, d = _lookup(TABLE2_ROWS, sigma, 2)[:2]
    return ParameterSet(sigma=s, k=TABLE2_K, alpha=TABLE2_ALPHA, delta=TABLE2_DELTA, d=d, eta=TABLE2_ETA,
                        mu=TABLE2_MU, T=H0, H_gap=TABLE2_H_GAP)


def table1_config(**overrides) -> SearchConfig:
    options = dict(objective="min_A", H_gap=TABLE1_H_GAP)
    options.update(overrides)
    return SearchConfig(**options)


def table2_config(**overrides) -> SearchConfig:
    options = dict(objective="min_bound_at_H0", H_gap=TABLE2_H_GAP,
                   fixed={"k": TABLE2_K, "alpha": TABLE2_ALPHA, "delta": TABLE2_DELTA})
    options.update(overrides)
    return SearchConfig(**options)


def table1_row(result: BoundResult) -> Table1Row:
    p = result.params
    return Table1Row(p.sigma, p.k, p.mu, p.alpha, p.delta, p.d, result.A, result.B)


def table2_row(result: BoundResult) -> Table2Row:
    p = result.params
    scriptC1 = eval_script_constants(p).scriptC1
    return Table2Row(p.sigma, p.d, 1 / (2 * math.pi * p.d), scriptC1, result.B, result.value)


def headline_power_form() -> BoundResult:
    """Power-form bound at sigma = 0.90 with the Table 1 parameters."""
    return bound_power_form(table1_params(0.90))


def emit_table(which: int,
               sigma_list: Optional[Sequence[float]] = None,
               params_source: str = "paper",
               config: Optional[SearchConfig] = None,
               progress: bool = True) -> List[TableRow]:
    from ..optimization import minimize

    if which not in (1, 2):
        raise ValueError(f"Invalid table: {which}. Supported tables: 1, 2")
    if params_source not in SOURCES:
        raise ValueError(f"Invalid params source: {params_source}. Supported sources: {SOURCES}")
    if sigma_list is None:
        sigma_list = TABLE1_SIGMAS if which == 1 else TABLE2_SIGMAS
    for sigma in sigma_list:
        if not 0.5 < sigma < 1:
            raise ValueError(f"Invalid sigma={sigma} (requires 1/2 < sigma < 1)")

    rows = []
    for sigma in tqdm(sigma_list, desc=f"table {which}", disable=not progress):
        if params_source == "paper":
            if which == 1:
                result = bound_power_form(table1_params(sigma))
            else:
                result = bound_log_form(table2_params(sigma))
        else:
            cfg = config or (table1_config() if which == 1 else table2_config())
            _, result = minimize(sigma, cfg)
        rows.append(table1_row(result) if which == 1 else table2_row(result))
        logger.info("table %d: sigma=%s done", which, sigma)
    return rows


def rows_to_frame(rows: Sequence[TableRow]) -> pd.DataFrame:
    if not rows:
        return pd.DataFrame()
    which = 1 if isinstance(rows[0], Table1Row) else 2
    return pd.DataFrame([astuple(r) for r in rows], columns=list(HEADERS[which]))


def _round_half_even(value: float, decimals: int) -> str:
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_EVEN))


def format_table(rows: Sequence[TableRow], fmt: str = "csv") -> str:
    """csv and tsv carry shortest round-trip floats; pretty rounds half-even to the printed decimals."""
    frame = rows_to_frame(rows)
    if fmt in ("csv", "tsv"):
        buffer = io.StringIO()
        frame.to_csv(buffer, sep="," if fmt == "csv" else "\t", index=False)
        return buffer.getvalue()
    if fmt == "pretty":
        which = 1 if isinstance(rows[0], Table1Row) else 2
        pretty = frame.copy()
        for column, decimals in zip(pretty.columns, PRETTY_DECIMALS[which]):
            pretty[column] = [_round_half_even(v, decimals) for v in frame[column]]
        return pretty.to_string(index=False) + "\n"
    raise ValueError(f"Invalid format: {fmt}. Supported formats: csv, tsv, pretty")


def write_table(rows: Sequence[TableRow], stream: IO[str], fmt: str = "csv"):
    stream.write(format_table(rows, fmt))


def read_table(text: str, which: int, fmt: str = "csv") -> List[TableRow]:
    frame = pd.read_csv(io.StringIO(text), sep="," if fmt == "csv" else "\t", float_precision="round_trip")
    row_type = ROW_TYPES[which]
    names = [f.name for f in fields(row_type)]
    return [row_type(**dict(zip(names, map(float, values)))) for values in frame.itertuples(index=False)]
