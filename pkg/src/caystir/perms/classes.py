"""
Conjugacy-class machinery: canonical representatives, lazy enumeration and
seeded random sampling by cycle type.
"""

from collections import Counter
from collections.abc import Iterator
from itertools import islice, permutations

import numpy as np
import structlog

from caystir.exceptions import OracleCapError
from caystir.perms.cycle_type import CycleType, class_size
from caystir.perms.permutation import Permutation

logger = structlog.get_logger(__name__)

DEFAULT_MATERIALIZE_CAP = 1_000_000


def canonical_representative(t: CycleType) -> Permutation:
    """Cycles in decreasing length on consecutive points, e.g. 1^1 2^1 3^1 -> (1 2 3)(4 5)."""
    return Permutation.from_cycles(t.canonical_cycles(), t.degree)


def representative(t: CycleType, n: int | None = None) -> Permutation:
    """Canonical representative of t, re-padded to degree n when given."""
    return canonical_representative(t if n is None else t.with_degree(n))


def _fill(
    images: list[int], remaining: list[int], lengths: Counter[int]
) -> Iterator[tuple[int, ...]]:
    if not remaining:
        yield tuple(images)
        return
    first, rest = remaining[0], remaining[1:]
    for length in sorted(length for length, count in lengths.items() if count):
        lengths[length] -= 1
        for others in permutations(rest, length - 1):
            cycle = (first, *others)
            for a, b in zip(cycle, (*cycle[1:], first), strict=True):
                images[a - 1] = b
            used = set(others)
            yield from _fill(images, [p for p in rest if p not in used], lengths)
        lengths[length] += 1


def enumerate_class(
    t: CycleType, start: int = 0, stop: int | None = None
) -> Iterator[Permutation]:
    """
    Lazily yield every permutation of cycle type t exactly once.

    The order is canonical (the cycle through the smallest unused point is
    chosen first), so ``start``/``stop`` carve out reproducible index ranges for
    partitioned parallel iteration.
    """
    images = list(range(1, t.degree + 1))
    stream = _fill(images, list(range(1, t.degree + 1)), Counter(dict(t.multiplicities)))
    for found in islice(stream, start, stop):
        yield Permutation(found)


def materialize_class(t: CycleType, *, cap: int = DEFAULT_MATERIALIZE_CAP) -> list[Permutation]:
    """Collect a whole class into memory; refused above ``cap`` elements."""
    size = class_size(t)
    if size > cap:
        msg = f"class {t} has {size} elements, above the materialization cap {cap}"
        raise OracleCapError(msg)
    logger.debug("materialize_class", cycle_type=str(t), size=size)
    return list(enumerate_class(t))


def random_of_type(
    t: CycleType, seed: int | np.random.Generator | None = None
) -> Permutation:
    """Uniformly random member of the class t from a seedable generator."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    points = [int(p) + 1 for p in rng.permutation(t.degree)]
    cycles: list[tuple[int, ...]] = []
    offset = 0
    for length in t.partition:
        cycles.append(tuple(points[offset : offset + length]))
        offset += length
    return Permutation.from_cycles(cycles, t.degree)
