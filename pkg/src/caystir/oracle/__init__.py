from caystir.oracle.cache import SeedCache
from caystir.oracle.seeds import SeedRow, seed_key, seed_threshold
from caystir.oracle.service import BruteForceOracle
from caystir.oracle.tables import UNREACHED, ClassDistanceTable, ElementDistanceTable

__all__ = [
    "UNREACHED",
    "BruteForceOracle",
    "ClassDistanceTable",
    "ElementDistanceTable",
    "SeedCache",
    "SeedRow",
    "seed_key",
    "seed_threshold",
]
