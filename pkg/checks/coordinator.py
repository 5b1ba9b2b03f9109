"""
Property suite coordinator: runs every module's property checks over a set of ensembles
"""

import logging
from collections.abc import Callable
from typing import Any

import numpy as np

from config import get_config
from loaders import ProblemFile

from . import (
    barycentre_properties,
    coupling_properties,
    geodesic_properties,
    metric_properties,
    spd_properties,
)
from .context import CheckSettings, Outcome, PropertyContext, SkipProperty

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
ERROR = "error"
SKIPPED = "skipped"

PropertyFn = Callable[[PropertyContext], Outcome]


class PropertySuiteCoordinator:
    """Coordinates the property suites of all modules"""

    def __init__(self, settings: CheckSettings | None = None):
        self.config = get_config()
        self.settings = settings or CheckSettings.from_config(self.config)
        self.module_suites: dict[str, dict[str, list[tuple[str, PropertyFn]]]] = {
            "spd_core": {"per_ensemble": spd_properties.PROPERTIES, "once": []},
            "bures_metric": {"per_ensemble": metric_properties.PROPERTIES, "once": []},
            "geodesics": {
                "per_ensemble": geodesic_properties.PROPERTIES,
                "once": geodesic_properties.SUITE_PROPERTIES,
            },
            "barycentre": {"per_ensemble": barycentre_properties.PROPERTIES, "once": []},
            "coupling": {"per_ensemble": coupling_properties.PROPERTIES, "once": []},
        }

    def run_all(self, ensembles: list[ProblemFile], seed: int = 0) -> tuple[list[dict[str, Any]], dict[str, Any]]:
        """
        Run every registered property on every ensemble

        Args:
            ensembles: Problems to check; each must hold PD matrices
            seed: Root seed for the generators handed to the properties

        Returns:
            Tuple of (one entry per property, summary)
        """
        prepared = [(problem.spd(), problem.resolved_weights(), {}) for problem in ensembles]
        entries = []

        for module_index, (module, suite) in enumerate(self.module_suites.items()):
            logger.info(f"Checking {module} on {len(prepared)} ensembles...")
            for index, (name, fn) in enumerate(suite["per_ensemble"]):
                outcomes = []
                for trial, (matrices, weights, shared) in enumerate(prepared):
                    ctx = self._context(matrices, weights, shared, seed, (trial, module_index, index))
                    outcomes.append(self._run_property(module, name, fn, ctx))
                entries.append(self._aggregate(module, name, outcomes))

            for index, (name, fn) in enumerate(suite["once"]):
                matrices, weights, shared = prepared[0]
                ctx = self._context(matrices, weights, shared, seed, (len(prepared), module_index, index))
                entries.append(self._aggregate(module, name, [self._run_property(module, name, fn, ctx)]))

        summary = self._summarize(entries, len(prepared), seed)
        logger.info(
            f"Property suite: {summary['passed']} passed, {summary['failed']} failed, "
            f"{summary['errors']} errors, {summary['skipped']} skipped"
        )
        return entries, summary

    def _context(self, matrices, weights, shared: dict, seed: int, key: tuple[int, int, int]) -> PropertyContext:
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))
        return PropertyContext(
            matrices=matrices, weights=weights, rng=rng, settings=self.settings, seed=seed, shared=shared
        )

    def _run_property(self, module: str, name: str, fn: PropertyFn, ctx: PropertyContext) -> tuple[str, str]:
        """
        Run one property on one ensemble

        Returns:
            Tuple of (status, detail)
        """
        try:
            outcome = fn(ctx)
        except SkipProperty as e:
            return SKIPPED, str(e)
        except Exception as e:
            logger.error(f"Error checking {module}.{name}: {e}")
            return ERROR, f"{type(e).__name__}: {e}"

        if not outcome.passed:
            logger.warning(f"{module}.{name} failed: {outcome.detail}")
            return FAIL, outcome.detail
        logger.debug(f"{module}.{name} passed: {outcome.detail}")
        return PASS, outcome.detail

    def _aggregate(self, module: str, name: str, outcomes: list[tuple[str, str]]) -> dict[str, Any]:
        """Fold per-ensemble outcomes into one entry; the first failure or error is reported"""
        counts = {status: sum(1 for s, _ in outcomes if s == status) for status in (PASS, FAIL, ERROR, SKIPPED)}
        ran = len(outcomes) - counts[SKIPPED]

        for status in (FAIL, ERROR):
            if counts[status]:
                trial, detail = next((i, d) for i, (s, d) in enumerate(outcomes) if s == status)
                return {
                    "module": module,
                    "property": name,
                    "status": status,
                    "detail": f"{counts[status]}/{ran} ensembles {status}; first at ensemble {trial}: {detail}",
                }

        if ran == 0:
            return {"module": module, "property": name, "status": SKIPPED, "detail": outcomes[0][1]}

        detail = outcomes[0][1] if len(outcomes) == 1 else f"{ran}/{ran} ensembles pass"
        return {"module": module, "property": name, "status": PASS, "detail": detail}

    def _summarize(self, entries: list[dict[str, Any]], trials: int, seed: int) -> dict[str, Any]:
        return {
            "passed": sum(1 for e in entries if e["status"] == PASS),
            "failed": sum(1 for e in entries if e["status"] == FAIL),
            "errors": sum(1 for e in entries if e["status"] == ERROR),
            "skipped": sum(1 for e in entries if e["status"] == SKIPPED),
            "ensembles": trials,
            "seed": seed,
        }


def suite_failed(summary: dict[str, Any]) -> bool:
    return bool(summary["failed"] or summary["errors"])
