from caystir.metric import GraphSpec, VertexGroup
from caystir.oracle import BruteForceOracle, SeedCache
from caystir.perms import CycleType, Permutation
from caystir.phi import PhiEngine, PhiQuery, PhiResult
from caystir.stirling import StirlingFunction

__all__ = [
    "BruteForceOracle",
    "CycleType",
    "GraphSpec",
    "Permutation",
    "PhiEngine",
    "PhiQuery",
    "PhiResult",
    "SeedCache",
    "StirlingFunction",
    "VertexGroup",
]
