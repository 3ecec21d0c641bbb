"""
Command-line entry point: ``zerodensity {bound,table,optimize,verify}``.

Exit codes: 0 success, 1 usage or malformed input, 2 parameter validation
failure, 3 failed in-hypothesis lemma check.
"""
import argparse
import logging
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from . import __version__
from .bounds import (
    LOG_FORM, POWER_FORM, bound, emit_table, headline_power_form, ramare_bound, table1_config,
    table1_params, table2_config, table2_params, write_table,
)
from .bounds.tables import TABLE1_ETA
from .config import ParameterSet, SearchConfig
from .constants import eval_constants
from .errors import DomainError, NoValidPointError, ValidationError, ZeroDensityError
from .optimization import minimize
from .utils import dump_key_value_text, format_float, load_config_as_namespace, load_key_value_file
from .verification import (
    all_passed, check_divisor_sums, check_lambda_sums, check_mobius_sums, check_mv_inequality,
    check_smoothing_and_convexity, check_weight_bounds, check_zeta_bounds, failures, format_reports,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3

OUTPUT_DIR_ENV = "ZERODENSITY_OUTPUT_DIR"
FORMATS = ("pretty", "csv", "tsv")
PARAMETER_KEYS = tuple(f.name for f in fields(ParameterSet)) + ("H",)
FORM_ALIASES = {"log": LOG_FORM, "power": POWER_FORM, LOG_FORM: LOG_FORM, POWER_FORM: POWER_FORM}
LEMMAS = ("mobius", "lambda", "divisor", "mv", "zeta", "weight", "smoothing", "all")
MODES = ("table1", "table2")
# settings a mode pins on top of the grid file
MODE_KEYS = ("objective", "H_gap", "fixed")

MV_LENGTH = 50
MV_HEIGHT = 500.0
ZETA_HEIGHTS = (3.0, 10.0, 100.0, 1000.0)


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class RunConfig:
    subcommand: str
    overrides: Dict[str, str] = field(default_factory=dict)
    fmt: str = "pretty"
    output: Optional[str] = None

    def __post_init__(self):
        unknown = sorted(set(self.overrides) - set(PARAMETER_KEYS))
        if unknown:
            raise ValueError(f"Invalid parameter name(s) {unknown}. Valid names: {list(PARAMETER_KEYS)}")
        if self.fmt not in FORMATS:
            raise ValueError(f"Invalid format: {self.fmt}. Supported formats: {FORMATS}")

    def output_path(self) -> Optional[Path]:
        if self.output in (None, "-"):
            return None
        path = Path(self.output)
        directory = os.environ.get(OUTPUT_DIR_ENV)
        if directory and not path.is_absolute():
            path = Path(directory) / path
        return path


@contextmanager
def _open_output(run: RunConfig):
    path = run.output_path()
    if path is None:
        yield sys.stdout
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        yield f
    logger.info("wrote %s", path)


def _add_common(parser):
    parser.add_argument("--format", choices=FORMATS, default="pretty", help="Output format")
    parser.add_argument("--output", type=str, default=None,
                        help=f"Output file; relative paths resolve against ${OUTPUT_DIR_ENV} when set")
    parser.add_argument("--log-level", type=str, default="WARNING", help="Logging level")
    parser.add_argument("--quiet", action="store_true", help="Disable progress bars")


def create_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="zerodensity", description="Explicit zero-density bounds for the Riemann zeta function")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("bound", help="Evaluate one bound for a parameter set")
    p.add_argument("--sigma", type=float)
    for name in ("T", "k", "alpha", "delta", "d", "eta", "mu", "H"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--H-gap", dest="H_gap", type=float, help="H0 - H")
    p.add_argument("--set", dest="assignments", action="append", default=[], metavar="NAME=VALUE",
                   help="Override any parameter, repeatable")
    preset = p.add_mutually_exclusive_group()
    preset.add_argument("--table1-defaults", action="store_true", help="Start from the Table 1 row at --sigma")
    preset.add_argument("--table2-defaults", action="store_true", help="Start from the Table 2 row at --sigma")
    preset.add_argument("--params-file", type=str, help="Key-value parameter file (name = value)")
    preset.add_argument("--headline", action="store_true", help="Power form with the Table 1 parameters at 0.90")
    p.add_argument("--form", choices=sorted(FORM_ALIASES), default="log")
    p.add_argument("--show-constants", action="store_true")
    p.add_argument("--compare-ramare", action="store_true", help="Also print the earlier 965/51.5 bound")
    _add_common(p)

    p = sub.add_parser("table", help="Regenerate Table 1 or Table 2")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)
    p.add_argument("--source", choices=("paper", "optimizer"), default="paper")
    p.add_argument("--sigma", type=float, nargs="+", default=None)
    p.add_argument("--config", type=str, default=None, help="YAML search configuration for --source optimizer")
    _add_common(p)

    p = sub.add_parser("optimize", help="Search the parameters minimising a bound at one sigma")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--mode", choices=MODES, default=None,
                   help="table1: minimise A with H = H0 - 1; table2: log-form bound at H0 with k, alpha, delta fixed")
    p.add_argument("--grid-file", "--config", dest="config", type=str, default=None,
                   help="YAML search configuration (grid resolutions, ranges, refinement)")
    p.add_argument("--objective", choices=("min_A", "min_bound_at_H0"), default=None)
    p.add_argument("--search-H", action="store_true", help="Also scan H instead of pinning it")
    _add_common(p)

    p = sub.add_parser("verify", help="Numerically check the inequalities behind the constants")
    p.add_argument("--lemma", choices=LEMMAS, default="all")
    p.add_argument("--X", type=int, default=None)
    p.add_argument("--tau", type=float, default=2.0)
    p.add_argument("--delta", type=float, default=0.303)
    p.add_argument("--eta", type=float, default=TABLE1_ETA)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1, help="Random sequences for the mean value check")
    p.add_argument("--samples", type=int, default=100, help="Sample points for the weight check")
    _add_common(p)
    return parser


def _collect_overrides(args) -> Dict[str, str]:
    overrides = {}
    for name in ("sigma", "T", "k", "alpha", "delta", "d", "eta", "mu", "H", "H_gap"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    for assignment in args.assignments:
        if "=" not in assignment:
            raise ValueError(f"Invalid --set value: {assignment!r} (expected NAME=VALUE)")
        name, value = (part.strip() for part in assignment.split("=", 1))
        overrides[name] = value
    return overrides


def _params_from_args(args, run: RunConfig) -> ParameterSet:
    base = None
    if args.table1_defaults or args.table2_defaults:
        if args.sigma is None:
            raise ValueError("Invalid preset request: --sigma is required with --table1-defaults/--table2-defaults")
        base = table1_params(args.sigma) if args.table1_defaults else table2_params(args.sigma)
    elif args.params_file:
        base = ParameterSet.from_mapping(load_key_value_file(args.params_file))
    return ParameterSet.from_mapping(run.overrides, base=base)


def _write_record(record: Dict[str, float], run: RunConfig):
    with _open_output(run) as stream:
        if run.fmt == "pretty":
            stream.write(dump_key_value_text(record))
        else:
            pd.DataFrame([record]).to_csv(stream, sep="," if run.fmt == "csv" else "\t", index=False)


def cmd_bound(args) -> int:
    run = RunConfig("bound", _collect_overrides(args), args.format, args.output)
    if args.headline:
        result = headline_power_form()
    else:
        result = bound(_params_from_args(args, run), FORM_ALIASES[args.form])
    record = {"form": result.form, "A": result.A, "B": result.B, "value": result.value}
    if args.show_constants:
        record.update(eval_constants(result.params).to_dict())
    if args.compare_ramare:
        record["ramare"] = ramare_bound(result.params.sigma, result.params.T)
    _write_record(record, run)
    return EXIT_OK


def _search_config(path: Optional[str], default: SearchConfig, args) -> SearchConfig:
    config = SearchConfig.from_namespace(load_config_as_namespace(path)) if path else default
    if args.quiet:
        config.progress = False
    return config


def cmd_table(args) -> int:
    run = RunConfig("table", fmt=args.format, output=args.output)
    config = None
    if args.source == "optimizer":
        config = _search_config(args.config, table1_config() if args.which == 1 else table2_config(), args)
    rows = emit_table(args.which, args.sigma, args.source, config, progress=not args.quiet)
    with _open_output(run) as stream:
        write_table(rows, stream, run.fmt)
    return EXIT_OK


def cmd_optimize(args) -> int:
    run = RunConfig("optimize", fmt=args.format, output=args.output)
    config = _search_config(args.config, SearchConfig(), args)
    changes = {}
    if args.mode:
        preset = (table1_config() if args.mode == "table1" else table2_config()).to_dict()
        changes.update({key: preset[key] for key in MODE_KEYS})
    if args.objective:
        changes["objective"] = args.objective
    if args.search_H:
        changes["search_H"] = True
    if changes:
        config = SearchConfig(**{**config.to_dict(), **changes})
    params, result = minimize(args.sigma, config)
    with _open_output(run) as stream:
        stream.write(f"# objective = {config.objective}\n")
        stream.write(f"# {result.form}: A = {format_float(result.A)}, B = {format_float(result.B)}, "
                     f"value = {format_float(result.value)}\n")
        stream.write(params.to_text())
    return EXIT_OK


def _verify(args) -> List:
    lemmas = LEMMAS[:-1] if args.lemma == "all" else (args.lemma,)
    reports = []
    for lemma in lemmas:
        if lemma == "mobius":
            reports.extend(check_mobius_sums(args.X or 1700))
        elif lemma == "lambda":
            reports.extend(check_lambda_sums(args.X or 1000, delta=args.delta, tau=args.tau))
        elif lemma == "divisor":
            reports.extend(check_divisor_sums(args.X or 47, args.tau))
        elif lemma == "mv":
            for trial in tqdm(range(args.trials), desc="mv", disable=args.quiet or args.trials == 1):
                rng = np.random.default_rng(args.seed + trial)
                reports.append(check_mv_inequality(rng.uniform(-1, 1, MV_LENGTH), 0.0, MV_HEIGHT))
        elif lemma == "zeta":
            reports.extend(check_zeta_bounds(ZETA_HEIGHTS, args.eta))
        elif lemma == "weight":
            T = 1e4
            rng = np.random.default_rng(args.seed)
            t = np.sort(np.concatenate([np.linspace(0, 2 * T, args.samples), rng.uniform(0, 2 * T, args.samples)]))
            reports.extend(check_weight_bounds(0.5, T, 0.105, 1002.0, t))
        elif lemma == "smoothing":
            reports.extend(check_smoothing_and_convexity(args.X or 10, 50.0, (0.5, 0.75, 1.1), 0.3))
    return reports


def cmd_verify(args) -> int:
    run = RunConfig("verify", fmt=args.format, output=args.output)
    reports = _verify(args)
    with _open_output(run) as stream:
        stream.write(format_reports(reports, run.fmt))
    if not all_passed(reports):
        for report in failures(reports):
            print(f"FAILED {report.lemma_id} ({report.instance}): lhs={report.lhs!r} > rhs={report.rhs!r}",
                  file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


COMMANDS = {"bound": cmd_bound, "table": cmd_table, "optimize": cmd_optimize, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    try:
        logging.basicConfig(level=args.log_level.upper(),
                            format="%(asctime)s %(levelname)s %(name)s: %(message)s")
        return COMMANDS[args.command](args)
    except ValidationError as e:
        print(e, file=sys.stderr)
        return EXIT_VALIDATION
    except (DomainError, NoValidPointError) as e:
        print(f"Invalid parameters: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, OSError, ZeroDensityError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
