"""
Distance tables produced by the brute-force oracle.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from caystir.exceptions import OracleConsistencyError, PermutationError
from caystir.metric import GraphSpec
from caystir.perms import CycleType, Permutation
from caystir.perms.arrays import (
    cycle_type_counts,
    from_row,
    lex_permutations,
    lex_rank,
    to_row,
)
from caystir.perms.notation import parse_cycle_type
from caystir.schemas import ClassDistanceDocument

UNREACHED = 255
_TYPE_BLOCK = 65_536


def cycle_type_from_counts(counts: npt.NDArray[np.intp]) -> CycleType:
    return CycleType.from_counts(
        {length: int(count) for length, count in enumerate(counts) if length and count}
    )


@dataclass(frozen=True)
class ClassDistanceTable:
    """
    Distance from the identity for every cycle type of the vertex group.

    Attributes:
        spec (GraphSpec): The graph the table belongs to
        distances (dict[CycleType, int]): Distance of each class
    """

    spec: GraphSpec
    distances: dict[CycleType, int] = field(hash=False)

    def __getitem__(self, t: CycleType) -> int:
        return self.distances[t]

    def __len__(self) -> int:
        return len(self.distances)

    @property
    def max_distance(self) -> int:
        return max(self.distances.values())

    def to_document(self) -> ClassDistanceDocument:
        return ClassDistanceDocument(
            k=self.spec.k,
            n=self.spec.n,
            distances={str(t): d for t, d in self.distances.items()},
        )

    @classmethod
    def from_document(cls, document: ClassDistanceDocument) -> "ClassDistanceTable":
        spec = GraphSpec(document.k, document.n)
        return cls(
            spec,
            {parse_cycle_type(t, spec.n): d for t, d in document.distances.items()},
        )


@dataclass(frozen=True)
class ElementDistanceTable:
    """
    BFS distances for every element, stored as a flat uint8 array indexed by
    lexicographic rank. Non-vertices hold ``UNREACHED``.
    """

    spec: GraphSpec
    distances: npt.NDArray[np.uint8] = field(hash=False, compare=False)

    def __getitem__(self, g: Permutation) -> int:
        if g.degree != self.spec.n:
            msg = f"permutation of degree {g.degree} in a table of degree {self.spec.n}"
            raise PermutationError(msg)
        value = int(self.distances[lex_rank(to_row(g)[None, :])[0]])
        if value == UNREACHED:
            msg = f"{g} is not a vertex of {self.spec}"
            raise KeyError(msg)
        return value

    def __len__(self) -> int:
        return int((self.distances != UNREACHED).sum())

    @property
    def max_distance(self) -> int:
        return int(self.distances[self.distances != UNREACHED].max())

    def items(self) -> Iterator[tuple[Permutation, int]]:
        table = lex_permutations(self.spec.n)
        for rank in np.flatnonzero(self.distances != UNREACHED):
            yield from_row(table[rank]), int(self.distances[rank])

    def by_cycle_type(self) -> ClassDistanceTable:
        """
        Collapse to a class table.

        Raises:
            OracleConsistencyError: If two members of one class sit at different distances.
        """
        table = lex_permutations(self.spec.n)
        bounds: dict[tuple[int, ...], tuple[int, int]] = {}
        for start in range(0, table.shape[0], _TYPE_BLOCK):
            block = table[start : start + _TYPE_BLOCK]
            dist = self.distances[start : start + _TYPE_BLOCK]
            keep = dist != UNREACHED
            if not keep.any():
                continue
            counts = cycle_type_counts(block[keep])
            unique, inverse = np.unique(counts, axis=0, return_inverse=True)
            inverse = inverse.reshape(-1)
            lows = np.full(unique.shape[0], UNREACHED, dtype=np.int64)
            highs = np.zeros(unique.shape[0], dtype=np.int64)
            np.minimum.at(lows, inverse, dist[keep].astype(np.int64))
            np.maximum.at(highs, inverse, dist[keep].astype(np.int64))
            for key_row, low, high in zip(unique, lows, highs, strict=True):
                key = tuple(int(v) for v in key_row)
                old_low, old_high = bounds.get(key, (int(low), int(high)))
                bounds[key] = (min(old_low, int(low)), max(old_high, int(high)))

        distances: dict[CycleType, int] = {}
        for key, (low, high) in bounds.items():
            t = cycle_type_from_counts(np.asarray(key, dtype=np.intp))
            if low != high:
                msg = f"class {t} spans distances {low}..{high} in {self.spec}"
                raise OracleConsistencyError(msg)
            distances[t] = low
        return ClassDistanceTable(self.spec, distances)
