from caystir.stirling.function import StirlingFunction, classical_stirling, new_stirling

__all__ = ["StirlingFunction", "classical_stirling", "new_stirling"]
