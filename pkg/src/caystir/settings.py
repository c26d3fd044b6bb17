"""
Settings Configuration Module

This module defines the configuration for the caystir engines and CLI using
Pydantic's BaseSettings. Oracle caps, thread counts, the seed-row cache location
and the default output format all live here.

Values are layered: explicit keyword arguments (the CLI flags) win over
environment variables with the CAYSTIR_ prefix, which win over a .env file,
which wins over a caystir.toml file in the working directory, which wins over
the defaults below.
"""

from pathlib import Path

import structlog
from pydantic import Field, PositiveInt
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from caystir.schemas import OutputFormat

logger = structlog.get_logger(__name__)


def _default_cache_dir() -> Path:
    return Path.home() / ".cache" / "caystir"


class Settings(BaseSettings):
    """
    Application settings shared by the oracle, the phi engine and the CLI.
    """

    # Largest vertex-group order the element BFS may allocate (Sym(9), Alt(10))
    oracle_element_cap: PositiveInt = 1_814_400
    # Largest degree for full Sym(n) enumeration (I_g rows, seed rows)
    oracle_enumeration_cap: PositiveInt = 10
    # Upper bound on |H| * p(n) products for the class-level BFS
    oracle_class_budget: PositiveInt = 400_000_000
    # Largest generator class the radius-one scan will walk
    h_scan_budget: PositiveInt = 5_000_000
    # Worker threads for class sweeps and BFS expansion
    threads: PositiveInt = 1
    # Directory holding cached seed rows
    cache_dir: Path = Field(default_factory=_default_cache_dir)
    # Default rendering for CLI tables
    output_format: OutputFormat = OutputFormat.TABLE
    # Seed for randomized verification suites
    seed: int = 0

    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="CAYSTIR_",
        env_file=".env",
        env_file_encoding="utf-8",
        toml_file="caystir.toml",
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            TomlConfigSettingsSource(settings_cls),
            file_secret_settings,
        )


# Create a global settings instance
settings = Settings()
logger.debug("settings", settings=settings.model_dump())
