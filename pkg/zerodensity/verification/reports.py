import io
import logging
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence

import pandas as pd

from ..utils import format_float

logger = logging.getLogger(__name__)

# reported relative slack for inequalities that hold with equality in exact arithmetic
ROUNDING_ALLOWANCE = 1e-12

COLUMNS = ("lemma_id", "instance", "lhs", "rhs", "margin", "pass", "caveat")


@dataclass(frozen=True)
class LemmaReport:
    """
    Outcome of one numerical check lhs <= rhs.

    A report with a caveat was produced outside the hypotheses of the inequality
    (for instance below its range of validity in X); it is informative only and
    never counts as a failure.
    """
    lemma_id: str
    instance: str
    lhs: float
    rhs: float
    margin: float
    passed: bool
    caveat: Optional[str] = None

    @classmethod
    def make(cls, lemma_id: str, instance: str, lhs: float, rhs: float,
             caveat: Optional[str] = None, allowance: float = 0.0) -> "LemmaReport":
        if allowance:
            rhs = rhs + allowance * abs(rhs)
            instance = f"{instance}; rhs includes a {allowance:g} relative rounding allowance"
        lhs, rhs = float(lhs), float(rhs)
        margin = rhs - lhs
        report = cls(lemma_id, instance, lhs, rhs, margin, margin >= 0, caveat)
        if not report.passed:
            log = logger.info if caveat else logger.warning
            log("%s failed on %s: lhs=%.17g rhs=%.17g", lemma_id, instance, lhs, rhs)
        return report

    @property
    def counts(self) -> bool:
        return self.caveat is None

    def to_dict(self):
        values = asdict(self)
        values["pass"] = values.pop("passed")
        return {name: values[name] for name in COLUMNS}


def failures(reports: Iterable[LemmaReport]) -> List[LemmaReport]:
    """In-hypothesis reports that failed."""
    return [r for r in reports if r.counts and not r.passed]


def all_passed(reports: Iterable[LemmaReport]) -> bool:
    return not failures(reports)


def reports_to_frame(reports: Sequence[LemmaReport]) -> pd.DataFrame:
    return pd.DataFrame([r.to_dict() for r in reports], columns=list(COLUMNS))


def format_reports(reports: Sequence[LemmaReport], fmt: str = "pretty") -> str:
    frame = reports_to_frame(reports)
    if fmt in ("csv", "tsv"):
        buffer = io.StringIO()
        frame.to_csv(buffer, sep="," if fmt == "csv" else "\t", index=False)
        return buffer.getvalue()
    if fmt == "pretty":
        pretty = frame.copy()
        for column in ("lhs", "rhs", "margin"):
            pretty[column] = [format_float(v) for v in frame[column]]
        pretty["caveat"] = frame["caveat"].fillna("")
        return pretty.to_string(index=False) + "\n"
    raise ValueError(f"Invalid format: {fmt}. Supported formats: csv, tsv, pretty")
