from dataclasses import dataclass
from typing import List


class ZeroDensityError(Exception):
    """Base class for every error raised by zerodensity."""


class DomainError(ZeroDensityError, ValueError):
    pass


class PrecisionError(ZeroDensityError, ArithmeticError):
    pass


class QuadraturePrecisionError(PrecisionError):
    pass


class BudgetError(ZeroDensityError, ValueError):
    pass


class NoValidPointError(ZeroDensityError, RuntimeError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed hypothesis of the bound: its name, where it comes from, and what went wrong."""
    name: str
    source: str
    message: str

    def __str__(self):
        return f"{self.message} [{self.name}; {self.source}]"


class ValidationError(ZeroDensityError, ValueError):
    def __init__(self, violations: List[Violation]):
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"Invalid parameter set ({len(self.violations)} violated conditions):\n{lines}")
