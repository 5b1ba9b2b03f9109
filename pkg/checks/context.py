"""
Shared inputs and settings for property checks
"""

from dataclasses import dataclass, field, replace

import numpy as np

from barycentre import BarycenterConfig, BarycenterSolution, barycenter
from config import AppConfig
from coupling import CouplingPlan, build_coupling
from spd_core import RECON_TOL, SpdMatrix, Weights, random_spd, symmetrize

LOEWNER_SLACK = 1e-9
MC_SIGMAS = 5.0


class SkipProperty(Exception):  # noqa: N818
    """Raised by a property that does not apply to the given ensemble"""


@dataclass(frozen=True)
class Outcome:
    passed: bool
    detail: str


@dataclass(frozen=True)
class CheckSettings:
    recon_tol: float = RECON_TOL
    slack: float = LOEWNER_SLACK
    probes: int = 100
    tol: float = 1e-10
    max_iter: int = 500
    nodes: int = 64
    mc_samples: int = 100000
    chunk_size: int = 65536
    workers: int = 1
    sigmas: float = MC_SIGMAS

    @classmethod
    def from_config(cls, config: AppConfig) -> "CheckSettings":
        return cls(
            recon_tol=config.numerics.recon_tol,
            probes=config.check.probes,
            tol=config.barycenter.tol,
            max_iter=config.barycenter.max_iter,
            nodes=config.quadrature.nodes,
            mc_samples=config.monte_carlo.samples,
            chunk_size=config.monte_carlo.chunk_size,
            workers=config.monte_carlo.workers,
        )


@dataclass(eq=False)
class PropertyContext:
    """
    One ensemble with its weights, a property-private generator and the suite settings

    Solutions shared by several properties are solved once per ensemble and kept in
    `shared`, which the coordinator hands to every property of that ensemble.
    """

    matrices: list[SpdMatrix]
    weights: Weights
    rng: np.random.Generator
    settings: CheckSettings = field(default_factory=CheckSettings)
    seed: int = 0
    shared: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrices[0].dim

    def pad(self, count: int) -> list[SpdMatrix]:
        """The first `count` matrices, topped up with random PD matrices when the ensemble is smaller"""
        chosen = list(self.matrices[:count])
        while len(chosen) < count:
            chosen.append(random_spd(self.rng, self.dim))
        return chosen

    def pair(self) -> tuple[SpdMatrix, SpdMatrix]:
        a, b = self.pad(2)
        return a, b

    def random_spd(self) -> SpdMatrix:
        return random_spd(self.rng, self.dim)

    def random_symmetric(self) -> np.ndarray:
        return symmetrize(self.rng.standard_normal((self.dim, self.dim)))

    def barycenter_config(self, **overrides) -> BarycenterConfig:
        return replace(BarycenterConfig(tol=self.settings.tol, max_iter=self.settings.max_iter), **overrides)

    @property
    def solution(self) -> BarycenterSolution:
        if "solution" not in self.shared:
            self.shared["solution"] = barycenter(
                self.matrices, self.weights, self.barycenter_config(keep_iterates=True)
            )
        return self.shared["solution"]

    @property
    def plan(self) -> CouplingPlan:
        if "plan" not in self.shared:
            self.shared["plan"] = build_coupling(
                self.matrices, self.weights, self.barycenter_config(), self.settings.recon_tol
            )
        return self.shared["plan"]

    def scaled_slack(self, *matrices: SpdMatrix) -> float:
        """Eigenvalue slack scaled by the largest eigenvalue involved"""
        largest = max((m.spectrum.eigenvalues[0] for m in matrices), default=1.0)
        return self.settings.slack * max(1.0, float(largest))
