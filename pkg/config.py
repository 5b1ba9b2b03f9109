#!/usr/bin/env python3
"""
Configuration management for the Bures-Wasserstein toolkit
Numeric tolerances, solver defaults and logging live in config.json
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any


@dataclass
class NumericsConfig:
    recon_tol: float
    discriminant_slack: float
    conditioning_limit: float


@dataclass
class BarycenterDefaults:
    tol: float
    max_iter: int


@dataclass
class QuadratureConfig:
    nodes: int


@dataclass
class MonteCarloConfig:
    samples: int
    seed: int
    chunk_size: int
    workers: int


@dataclass
class CheckConfig:
    trials: int
    seed: int
    probes: int


@dataclass
class LoggingConfig:
    level: str
    format: str


@dataclass
class AppConfig:
    numerics: NumericsConfig
    barycenter: BarycenterDefaults
    quadrature: QuadratureConfig
    monte_carlo: MonteCarloConfig
    check: CheckConfig
    logging: LoggingConfig


class ConfigManager:
    """Loads and caches the application configuration"""

    def __init__(self, config_file: str | Path = Path(__file__).with_name("config.json")):
        self.config_file = Path(config_file)
        self._config: AppConfig | None = None

    def load_config(self) -> AppConfig:
        """Load configuration from file with validation"""
        if self._config is not None:
            return self._config

        config_data = self._load_config_file()

        try:
            self._config = AppConfig(
                numerics=NumericsConfig(
                    recon_tol=float(config_data["numerics"]["recon_tol"]),
                    discriminant_slack=float(config_data["numerics"]["discriminant_slack"]),
                    conditioning_limit=float(config_data["numerics"]["conditioning_limit"]),
                ),
                barycenter=BarycenterDefaults(
                    tol=float(config_data["barycenter"]["tol"]),
                    max_iter=int(config_data["barycenter"]["max_iter"]),
                ),
                quadrature=QuadratureConfig(nodes=int(config_data["quadrature"]["nodes"])),
                monte_carlo=MonteCarloConfig(
                    samples=int(config_data["monte_carlo"]["samples"]),
                    seed=int(config_data["monte_carlo"]["seed"]),
                    chunk_size=int(config_data["monte_carlo"]["chunk_size"]),
                    workers=int(config_data["monte_carlo"]["workers"]),
                ),
                check=CheckConfig(
                    trials=int(config_data["check"]["trials"]),
                    seed=int(config_data["check"]["seed"]),
                    probes=int(config_data["check"]["probes"]),
                ),
                logging=LoggingConfig(level=config_data["logging"]["level"], format=config_data["logging"]["format"]),
            )
        except KeyError as e:
            raise ValueError(f"Missing required configuration key: {e}") from e

        self._validate(self._config)
        logging.debug(f"Configuration loaded from {self.config_file}")
        return self._config

    def _load_config_file(self) -> dict[str, Any]:
        """Load configuration from JSON file"""
        if not self.config_file.exists():
            raise FileNotFoundError(f"Configuration file not found: {self.config_file}")

        try:
            with open(self.config_file) as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in configuration file: {e}") from e

    @staticmethod
    def _validate(config: AppConfig) -> None:
        if config.numerics.recon_tol <= 0 or config.numerics.discriminant_slack < 0:
            raise ValueError("Numeric tolerances must be positive")
        if config.barycenter.tol <= 0 or config.barycenter.max_iter < 1:
            raise ValueError("Barycenter defaults need tol > 0 and max_iter >= 1")
        if config.quadrature.nodes < 2:
            raise ValueError("Quadrature needs at least 2 nodes")
        if config.monte_carlo.chunk_size < 1 or config.monte_carlo.workers < 1:
            raise ValueError("Monte Carlo chunk_size and workers must be >= 1")


# Global configuration instance
config_manager = ConfigManager()


def get_config() -> AppConfig:
    """Get the application configuration"""
    return config_manager.load_config()
