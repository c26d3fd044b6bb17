from pathlib import Path

import numpy as np
import pytest

from caystir.oracle import BruteForceOracle, SeedCache
from caystir.phi import PhiEngine


@pytest.fixture
def seed_cache(tmp_path: Path) -> SeedCache:
    return SeedCache(tmp_path / "seeds")


@pytest.fixture
def oracle(seed_cache: SeedCache) -> BruteForceOracle:
    return BruteForceOracle(
        element_cap=1_814_400,
        enumeration_cap=10,
        class_budget=400_000_000,
        threads=1,
        cache=seed_cache,
    )


@pytest.fixture
def engine(oracle: BruteForceOracle) -> PhiEngine:
    return PhiEngine(oracle, h_scan_budget=5_000_000, threads=1)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
