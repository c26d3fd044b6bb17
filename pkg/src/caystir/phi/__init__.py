from caystir.phi.engine import (
    PhiEngine,
    PhiQuery,
    PhiResult,
    PhiRow,
    PhiTable,
    ReconstructionResult,
)

__all__ = [
    "PhiEngine",
    "PhiQuery",
    "PhiResult",
    "PhiRow",
    "PhiTable",
    "ReconstructionResult",
]
