"""
Property suites for every module and the coordinator that runs them
"""

from .context import CheckSettings, Outcome, PropertyContext, SkipProperty
from .coordinator import ERROR, FAIL, PASS, SKIPPED, PropertySuiteCoordinator, suite_failed

__all__ = [
    "ERROR",
    "FAIL",
    "PASS",
    "SKIPPED",
    "CheckSettings",
    "Outcome",
    "PropertyContext",
    "PropertySuiteCoordinator",
    "SkipProperty",
    "suite_failed",
]
