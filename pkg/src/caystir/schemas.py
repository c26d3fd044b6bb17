"""
Schema Definitions for caystir Documents

This module defines the enums and JSON documents shared by the oracle, the phi
engine and the CLI. Every big integer crosses the JSON boundary as a decimal
string so that values beyond 2**64 survive any consumer.
"""

from enum import Enum
from typing import Annotated

from pydantic import BaseModel, BeforeValidator, PlainSerializer


def _parse_decimal(value: object) -> int:
    if isinstance(value, bool):
        msg = "boolean is not a decimal integer"
        raise TypeError(msg)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value.strip())
    msg = f"expected a decimal string, got {type(value).__name__}"
    raise TypeError(msg)


BigInt = Annotated[
    int,
    BeforeValidator(_parse_decimal),
    PlainSerializer(str, return_type=str),
]


class OutputFormat(str, Enum):
    """
    Rendering options for CLI tables.
    """

    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class SeedKind(str, Enum):
    """
    Families of seed rows extracted at the recursion threshold.
    """

    PHI_K1 = "phi-k1"
    I_ROW = "i-row"
    CROSS_ROW = "cross-row"


class Regime(str, Enum):
    """
    How a phi value was obtained.
    """

    ANALYTIC_RECURSION = "analytic-recursion"
    ORACLE = "oracle"
    H_SCAN = "H-scan"
    UNSUPPORTED = "unsupported"


class StirlingSeedDocument(BaseModel):
    """
    Serialized threshold, seed row and constant tail of a Stirling function.

    Attributes:
        threshold (int): Base level t of the recursion
        m_floor (int): Smallest m stored explicitly in the seed row
        tail (BigInt): Value of f(t, m) for every m < m_floor
        seed (dict[int, BigInt]): Explicit values f(t, m) for m_floor <= m <= t
    """

    threshold: int
    m_floor: int
    tail: BigInt
    seed: dict[int, BigInt]


class SeedRowDocument(BaseModel):
    g_type: str
    t: int
    kind: SeedKind
    offset: int = 0
    row: dict[int, BigInt]
    tail: BigInt


class ClassDistanceDocument(BaseModel):
    k: int
    n: int
    distances: dict[str, int]


class PhiRowDocument(BaseModel):
    r: int
    phi: BigInt | None
    regime: Regime
    note: str = ""


class PhiTableDocument(BaseModel):
    k: int
    n: int
    g_type: str
    rows: list[PhiRowDocument]


class VerifyReport(BaseModel):
    """
    Outcome of one verification suite.

    Attributes:
        suite (str): Suite name as given on the command line
        passed (bool): True when every check held
        checks (int): Number of individual comparisons made
        cases (int): Number of inputs (elements, classes or random draws) visited
        seconds (float): Wall-clock duration
        failures (list[str]): The first few failed checks, for diagnosis
    """

    suite: str
    passed: bool
    checks: int
    cases: int
    seconds: float
    failures: list[str] = []
