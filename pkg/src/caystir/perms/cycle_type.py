"""
Cycle types of permutations.

A cycle type is a partition of the degree n recorded as multiplicities
n_l of each cycle length l, fixed points included. Conjugacy classes of Sym(n)
are exactly the cycle types, so every class-level computation in the package is
keyed on this value type.
"""

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import factorial, prod

from caystir.exceptions import PermutationError


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of_deficit(cls, deficit: int) -> "Parity":
        """Parity of a permutation whose cycle deficit n - |g| is ``deficit``."""
        return cls.EVEN if deficit % 2 == 0 else cls.ODD

    def __xor__(self, other: "Parity") -> "Parity":
        return Parity.EVEN if self is other else Parity.ODD


@dataclass(frozen=True)
class CycleType:
    """
    Partition of n by cycle length.

    Attributes:
        multiplicities (tuple[tuple[int, int], ...]): (length, count) pairs with
            positive counts, sorted by length
    """

    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        lengths = [length for length, _ in self.multiplicities]
        if lengths != sorted(set(lengths)):
            msg = f"cycle lengths must be distinct and sorted: {lengths}"
            raise PermutationError(msg)
        for length, count in self.multiplicities:
            if length < 1 or count < 1:
                msg = f"invalid multiplicity {count} for cycle length {length}"
                raise PermutationError(msg)
        if not self.multiplicities:
            msg = "a cycle type needs degree at least 1"
            raise PermutationError(msg)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "CycleType":
        for length, count in counts.items():
            if count < 0:
                msg = f"negative multiplicity {count} for cycle length {length}"
                raise PermutationError(msg)
        return cls(
            tuple(
                (length, count) for length, count in sorted(counts.items()) if count
            )
        )

    @classmethod
    def from_partition(cls, parts: Iterable[int]) -> "CycleType":
        return cls.from_counts(Counter(parts))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls.from_counts({1: n})

    @classmethod
    def k_transposition(cls, n: int, k: int) -> "CycleType":
        """Type 1^(n-2k) 2^k of the generating class H."""
        if k < 1 or n < 2 * k:
            msg = f"no {k}-transpositions in degree {n}"
            raise PermutationError(msg)
        return cls.from_counts({1: n - 2 * k, 2: k})

    def count(self, length: int) -> int:
        return dict(self.multiplicities).get(length, 0)

    @cached_property
    def degree(self) -> int:
        return sum(length * count for length, count in self.multiplicities)

    @cached_property
    def cycle_count(self) -> int:
        return sum(count for _, count in self.multiplicities)

    @property
    def deficit(self) -> int:
        """n - |g|, the transposition distance of any member."""
        return self.degree - self.cycle_count

    @property
    def support_size(self) -> int:
        return self.degree - self.count(1)

    @property
    def parity(self) -> Parity:
        return Parity.of_deficit(self.deficit)

    @property
    def is_identity(self) -> bool:
        return self.support_size == 0

    @cached_property
    def partition(self) -> tuple[int, ...]:
        return tuple(
            length
            for length, count in reversed(self.multiplicities)
            for _ in range(count)
        )

    def is_k_transposition(self, k: int) -> bool:
        return self.count(2) == k and self.support_size == 2 * k

    def with_degree(self, n: int) -> "CycleType":
        """Same non-trivial cycles, padded or trimmed to degree n by fixed points."""
        if n < self.support_size:
            msg = f"support {self.support_size} does not fit in degree {n}"
            raise PermutationError(msg)
        counts = dict(self.multiplicities)
        counts[1] = n - self.support_size
        return CycleType.from_counts(counts)

    @property
    def support_key(self) -> str:
        """Degree-free name of the class, e.g. ``2^1 3^1``; ``e`` for the identity."""
        parts = [f"{length}^{count}" for length, count in self.multiplicities if length > 1]
        return " ".join(parts) if parts else "e"

    def canonical_cycles(self) -> list[tuple[int, ...]]:
        """Cycles of the canonical representative: decreasing lengths on consecutive points."""
        cycles: list[tuple[int, ...]] = []
        start = 1
        for length in self.partition:
            cycles.append(tuple(range(start, start + length)))
            start += length
        return cycles

    def __str__(self) -> str:
        return " ".join(f"{length}^{count}" for length, count in self.multiplicities)


def class_size(t: CycleType) -> int:
    """Number of elements of Sym(n) with cycle type t, n!/prod(l^n_l * n_l!)."""
    centralizer = prod(
        length**count * factorial(count) for length, count in t.multiplicities
    )
    return factorial(t.degree) // centralizer


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part, *rest)


def partitions_of(n: int) -> list[CycleType]:
    """Every cycle type of degree n, in reverse lexicographic order of partitions."""
    if n < 1:
        msg = f"degree must be positive, got {n}"
        raise PermutationError(msg)
    return [CycleType.from_partition(parts) for parts in _partitions(n, n)]
