from .validation import validate_params
from .density import BoundResult, FORMS, LOG_FORM, POWER_FORM, bound, bound_log_form, bound_power_form, ramare_bound
from .tables import (
    TABLE1_ROWS, TABLE1_SIGMAS, TABLE2_ROWS, TABLE2_SIGMAS, Table1Row, Table2Row, TableRow, emit_table,
    format_table, headline_power_form, read_table, table1_config, table1_params, table2_config, table2_params,
    write_table,
)
