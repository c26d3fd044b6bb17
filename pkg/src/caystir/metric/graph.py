"""
The k-transposition Cayley graph Γᵏₙ.

Vertices are the elements of Sym(n) when k is odd and of Alt(n) when k is even;
edges join x and x·h for h in the class H of k-transpositions.
"""

from dataclasses import dataclass
from enum import Enum
from math import factorial

from caystir.exceptions import GraphSpecError
from caystir.perms import CycleType, Parity, class_size

_MIN_ALT_DEGREE = 5


class VertexGroup(str, Enum):
    SYM = "Sym"
    ALT = "Alt"


@dataclass(frozen=True)
class GraphSpec:
    """
    The pair (k, n) with its derived vertex group.

    Attributes:
        k (int): Number of disjoint 2-cycles in each generator
        n (int): Degree of the permutations
    """

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            msg = f"k must be at least 1, got {self.k}"
            raise GraphSpecError(msg)
        if self.n < 2 * self.k:
            msg = f"n={self.n} is too small for {self.k}-transpositions"
            raise GraphSpecError(msg)
        if self.k % 2 == 0 and self.n < _MIN_ALT_DEGREE:
            msg = f"k={self.k} even needs n >= {_MIN_ALT_DEGREE}, got {self.n}"
            raise GraphSpecError(msg)

    @property
    def group(self) -> VertexGroup:
        return VertexGroup.SYM if self.k % 2 else VertexGroup.ALT

    @property
    def order(self) -> int:
        full = factorial(self.n)
        return full if self.group is VertexGroup.SYM else full // 2

    @property
    def analytic_floor(self) -> int:
        """Smallest n for which the closed-form sphere description holds."""
        if self.k == 1:
            return 2
        if self.k == 2:  # noqa: PLR2004
            return _MIN_ALT_DEGREE
        return 4 * self.k

    @property
    def analytic_valid(self) -> bool:
        return self.n >= self.analytic_floor

    @property
    def generator_type(self) -> CycleType:
        return CycleType.k_transposition(self.n, self.k)

    @property
    def generator_count(self) -> int:
        return class_size(self.generator_type)

    def admits(self, t: CycleType) -> bool:
        """Whether the class t lies in the vertex group."""
        return self.group is VertexGroup.SYM or t.parity is Parity.EVEN

    def __str__(self) -> str:
        return f"Γ(k={self.k}, n={self.n}) on {self.group.value}({self.n})"
