import argparse
import math
from pathlib import Path
from typing import Dict, Union

import yaml


def load_config_as_namespace(config_file):
    with open(config_file, "r") as f:
        config_dict = yaml.safe_load(f)
    return argparse.Namespace(**(config_dict or {}))


def powr(x: float, y: float) -> float:
    """x**y for x > 0, always as exp(y*log(x)) so table values do not depend on libm's pow."""
    return math.exp(y * math.log(x))


def format_float(value: float) -> str:
    # shortest text that reads back to the same float64
    return repr(float(value))


def parse_key_value_text(text: str) -> Dict[str, str]:
    """
    Parse ``name = value`` lines. Blank lines and ``#`` comments are ignored,
    a repeated name keeps its last value.
    """
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"Invalid key-value line {lineno}: {raw!r} (expected 'name = value')")
        name, value = (part.strip() for part in line.split("=", 1))
        if not name:
            raise ValueError(f"Invalid key-value line {lineno}: {raw!r} (empty name)")
        entries[name] = value
    return entries


def load_key_value_file(path: Union[str, Path]) -> Dict[str, str]:
    with open(path, "r") as f:
        return parse_key_value_text(f.read())


def dump_key_value_text(values: Dict[str, Union[float, str]]) -> str:
    return "".join(
        f"{name} = {value if isinstance(value, str) else format_float(value)}\n" for name, value in values.items()
    )
