class CaystirError(Exception):
    """Base exception for caystir errors"""


class PermutationError(CaystirError):
    """Raised for invalid permutations, cycle types or degree mismatches"""


class NotationError(PermutationError):
    """Raised when cycle or one-line notation cannot be parsed"""


class StirlingDomainError(CaystirError):
    """Raised when a Stirling function is seeded or evaluated outside its domain"""


class GraphSpecError(CaystirError):
    """Raised when (k, n) does not describe a k-transposition Cayley graph"""


class AnalyticRangeError(CaystirError):
    """Raised when the analytic sphere formulas are invalid for (k, n)"""


class FactorizationError(CaystirError):
    """Raised when a two-factor decomposition precondition is violated"""


class OracleCapError(CaystirError):
    """Raised when a brute-force computation exceeds its configured cap"""


class SeedInfeasibleError(OracleCapError):
    """Raised when a seed row's support exceeds the enumeration cap"""


class UnsupportedRegimeError(CaystirError):
    """Raised when no exact route exists for a phi query"""


class BelowThresholdError(UnsupportedRegimeError):
    """Raised when n is at or below the analytic threshold and the oracle is infeasible"""


class QueryError(CaystirError):
    """Raised when a phi query has an invalid radius"""


class ExactValueUnavailableError(CaystirError):
    """Raised when a reconstruction number depends on an unsupported cell"""


class OracleConsistencyError(CaystirError):
    """Raised when brute-force results break a structural invariant"""
