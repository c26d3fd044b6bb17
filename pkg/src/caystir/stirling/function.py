"""
Generalized Stirling functions.

A Stirling function f satisfies f(n, m) = f(n-1, m-1) + (n-1)·f(n-1, m) for
every n above its threshold t, with f(n, m) = 0 whenever m > n. It is fixed by
its row at n = t. Seed rows here are a finite map over [m_floor .. t] plus a
constant tail for every m < m_floor, which covers rows that saturate (a ball
that already fills the whole group).

Rows above t are memoized per function object. Each row keeps the same floor;
its tail is recomputed from the recursion at m = floor - 1 where both parents
lie in the tail region.
"""

import threading
from collections.abc import Mapping
from dataclasses import dataclass

import structlog

from caystir.exceptions import StirlingDomainError
from caystir.schemas import StirlingSeedDocument

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class _Row:
    n: int
    floor: int
    tail: int
    values: tuple[int, ...]

    def value(self, m: int) -> int:
        if m > self.n:
            return 0
        if m < self.floor:
            return self.tail
        return self.values[m - self.floor]


class StirlingFunction:
    """
    A Stirling function given by threshold, seed row and constant tail.

    Evaluation is exact (Python integers) and memoizing. Concurrent readers are
    safe once ``warm_up`` has materialized every row they will touch; row
    extension itself is serialized by an internal lock.
    """

    def __init__(
        self,
        threshold: int,
        seed: Mapping[int, int],
        tail: int = 0,
        m_floor: int | None = None,
    ) -> None:
        if threshold < 0:
            msg = f"threshold must be nonnegative, got {threshold}"
            raise StirlingDomainError(msg)
        if any(m > threshold for m in seed):
            msg = f"seed key {max(seed)} exceeds threshold {threshold}"
            raise StirlingDomainError(msg)
        floor = m_floor if m_floor is not None else min(seed, default=threshold + 1)
        if any(m < floor for m in seed):
            msg = f"seed key {min(seed)} lies below m_floor {floor}"
            raise StirlingDomainError(msg)

        self.threshold = threshold
        self.m_floor = floor
        self.tail = tail
        self.seed = {m: seed.get(m, 0) for m in range(floor, threshold + 1)}
        self._rows: dict[int, _Row] = {
            threshold: _Row(
                n=threshold,
                floor=floor,
                tail=tail,
                values=tuple(self.seed.values()),
            )
        }
        self._top = threshold
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return (
            f"StirlingFunction(threshold={self.threshold}, m_floor={self.m_floor}, "
            f"tail={self.tail}, rows={self._top - self.threshold + 1})"
        )

    def _extend(self, below: _Row) -> _Row:
        n = below.n + 1
        factor = n - 1
        values = tuple(
            below.value(m - 1) + factor * below.value(m)
            for m in range(below.floor, n + 1)
        )
        tail = below.value(below.floor - 2) + factor * below.value(below.floor - 1)
        return _Row(n=n, floor=below.floor, tail=tail, values=values)

    def warm_up(self, n: int) -> None:
        """Materialize every row up to n."""
        if n <= self._top:
            return
        with self._lock:
            row = self._rows[self._top]
            while row.n < n:
                row = self._extend(row)
                self._rows[row.n] = row
            self._top = max(self._top, n)
        logger.debug("stirling_warm_up", threshold=self.threshold, top=n)

    def _row(self, n: int) -> _Row:
        if n < self.threshold:
            msg = f"cannot evaluate at n={n} below threshold {self.threshold}"
            raise StirlingDomainError(msg)
        self.warm_up(n)
        return self._rows[n]

    def eval(self, n: int, m: int) -> int:
        """Exact f(n, m); zero whenever m > n."""
        row = self._row(n)
        return row.value(m)

    def eval_r(self, n: int, r: int) -> int:
        """f(n, n - r), the radius form; zero for r < 0."""
        row = self._row(n)
        if r < 0:
            return 0
        return row.value(n - r)

    def row(self, n: int) -> dict[int, int]:
        """Explicitly stored values of row n, keyed by m (the tail is implied below)."""
        row = self._row(n)
        return {m: row.value(m) for m in range(row.floor, n + 1)}

    def tail_at(self, n: int) -> int:
        return self._row(n).tail

    def check_recurrence(self, n: int) -> bool:
        """Recheck row n against row n-1 across the stored range and two tail cells."""
        if n <= self.threshold:
            msg = f"no recurrence to check at n={n} (threshold {self.threshold})"
            raise StirlingDomainError(msg)
        here, below = self._row(n), self._row(n - 1)
        return all(
            here.value(m) == below.value(m - 1) + (n - 1) * below.value(m)
            for m in range(here.floor - 2, n + 2)
        )

    def to_document(self) -> StirlingSeedDocument:
        return StirlingSeedDocument(
            threshold=self.threshold,
            m_floor=self.m_floor,
            tail=self.tail,
            seed=dict(self.seed),
        )

    @classmethod
    def from_document(cls, document: StirlingSeedDocument) -> "StirlingFunction":
        return cls(
            threshold=document.threshold,
            seed=document.seed,
            tail=document.tail,
            m_floor=document.m_floor,
        )

    def to_json(self) -> str:
        return self.to_document().model_dump_json()

    @classmethod
    def from_json(cls, payload: str) -> "StirlingFunction":
        return cls.from_document(StirlingSeedDocument.model_validate_json(payload))


def new_stirling(
    t: int, seed: Mapping[int, int], tail: int = 0, m_floor: int | None = None
) -> StirlingFunction:
    return StirlingFunction(t, seed, tail, m_floor)


def classical_stirling() -> StirlingFunction:
    """Unsigned Stirling numbers of the first kind: c(n, m) permutations with m cycles."""
    return StirlingFunction(1, {1: 1}, tail=0)
