"""
Per-invocation wiring of settings, cache, oracle and phi engine.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any

import structlog

from caystir.oracle import BruteForceOracle, SeedCache
from caystir.phi import PhiEngine
from caystir.schemas import OutputFormat
from caystir.settings import Settings

# CLI flag -> settings field
_OVERRIDES = {
    "threads": "threads",
    "cap": "oracle_element_cap",
    "seed": "seed",
    "cache_dir": "cache_dir",
    "format": "output_format",
    "log_level": "log_level",
}


def configure_logging(level: str) -> None:
    """Send structlog output to stderr, filtered at ``level``."""
    numeric = logging.getLevelNamesMapping().get(level.upper(), logging.WARNING)
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


@dataclass
class Runtime:
    config: Settings
    cache: SeedCache
    oracle: BruteForceOracle
    engine: PhiEngine
    force_oracle: bool = False

    @property
    def fmt(self) -> OutputFormat:
        return self.config.output_format

    @classmethod
    def from_settings(cls, config: Settings, *, force_oracle: bool = False) -> "Runtime":
        cache = SeedCache(config.cache_dir)
        oracle = BruteForceOracle(
            element_cap=config.oracle_element_cap,
            enumeration_cap=config.oracle_enumeration_cap,
            class_budget=config.oracle_class_budget,
            threads=config.threads,
            cache=cache,
        )
        engine = PhiEngine(oracle, h_scan_budget=config.h_scan_budget, threads=config.threads)
        return cls(config, cache, oracle, engine, force_oracle)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "Runtime":
        """Flags override environment, .env, caystir.toml and defaults."""
        overrides: dict[str, Any] = {
            field: getattr(args, flag)
            for flag, field in _OVERRIDES.items()
            if getattr(args, flag, None) is not None
        }
        config = Settings(**overrides)
        return cls.from_settings(config, force_oracle=getattr(args, "oracle", False))
