"""
Vectorized permutation batches.

Rows of a 2-D integer array are 0-based one-line permutations. These kernels
back the brute-force oracle: lexicographic ranking for the flat BFS distance
array, batch composition, cycle statistics, and the generator class H as rows.
Products keep the right-action convention, so ``apply_after(batch, h)`` is the
batch of products u·h.
"""

from collections.abc import Iterator
from functools import cache
from itertools import combinations, islice, permutations
from math import factorial

import numpy as np
import numpy.typing as npt

from caystir.perms.permutation import Permutation

IntArray = npt.NDArray[np.integer]

_INT8_MAX_DEGREE = 127


def row_dtype(n: int) -> type[np.integer]:
    return np.int8 if n <= _INT8_MAX_DEGREE else np.int16


def to_row(g: Permutation) -> npt.NDArray[np.intp]:
    return np.asarray(g.images, dtype=np.intp) - 1


def from_row(row: IntArray) -> Permutation:
    return Permutation(tuple(int(image) + 1 for image in row))


@cache
def lex_permutations(n: int) -> IntArray:
    """All n! permutations in lexicographic order; row index equals rank."""
    table = np.zeros((1, 1), dtype=row_dtype(n))
    for m in range(2, n + 1):
        blocks = []
        for first in range(m):
            shifted = table + (table >= first)
            lead = np.full((table.shape[0], 1), first, dtype=table.dtype)
            blocks.append(np.hstack([lead, shifted.astype(table.dtype)]))
        table = np.vstack(blocks)
    table.setflags(write=False)
    return table


def lex_permutation_blocks(n: int, prefix: int) -> Iterator[tuple[int, IntArray]]:
    """
    Stream Sym(n) in lexicographic order as (first rank, block) pairs.

    Each block fixes the first ``prefix`` images, so memory stays at
    (n - prefix)! rows per block.
    """
    tail = lex_permutations(n - prefix).astype(np.intp)
    width = tail.shape[0]
    for index, lead in enumerate(permutations(range(n), prefix)):
        remaining = np.array(sorted(set(range(n)) - set(lead)), dtype=np.intp)
        block = np.empty((width, n), dtype=np.intp)
        block[:, :prefix] = lead
        block[:, prefix:] = remaining[tail]
        yield index * width, block


def lex_rank(batch: IntArray) -> npt.NDArray[np.int64]:
    """Lexicographic rank of every row via its Lehmer code."""
    batch = np.asarray(batch)
    n = batch.shape[1]
    ranks = np.zeros(batch.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller = (batch[:, i + 1 :] < batch[:, i : i + 1]).sum(axis=1)
        ranks += smaller.astype(np.int64) * factorial(n - 1 - i)
    return ranks


def apply_after(batch: IntArray, h: IntArray) -> npt.NDArray[np.intp]:
    """Rows u·h: apply each row u, then h."""
    return np.asarray(h, dtype=np.intp)[np.asarray(batch, dtype=np.intp)]


def apply_before(x: IntArray, batch: IntArray) -> npt.NDArray[np.intp]:
    """Rows x·u: apply x, then each row u."""
    return np.asarray(batch, dtype=np.intp)[:, np.asarray(x, dtype=np.intp)]


def cycle_counts(batch: IntArray) -> npt.NDArray[np.intp]:
    """Number of cycles (fixed points included) of every row."""
    power = np.asarray(batch, dtype=np.intp)
    n = power.shape[1]
    points = np.arange(n, dtype=np.intp)
    # orbit minimum by doubling: after the loop, least covers P^0 .. P^(span-1)
    least = np.broadcast_to(points, power.shape).copy()
    span = 1
    while span < n:
        least = np.minimum(least, np.take_along_axis(least, power, axis=1))
        power = np.take_along_axis(power, power, axis=1)
        span *= 2
    return (least == points).sum(axis=1)


def cycle_type_counts(batch: IntArray) -> npt.NDArray[np.intp]:
    """Matrix whose entry [row, l] is the number of l-cycles of that row."""
    perms = np.asarray(batch, dtype=np.intp)
    rows, n = perms.shape
    points = np.arange(n, dtype=np.intp)
    length = np.zeros((rows, n), dtype=np.intp)
    current = perms
    for step in range(1, n + 1):
        length[(current == points) & (length == 0)] = step
        current = np.take_along_axis(perms, current, axis=1)
    counts = np.zeros((rows, n + 1), dtype=np.intp)
    for cycle_length in range(1, n + 1):
        counts[:, cycle_length] = (length == cycle_length).sum(axis=1) // cycle_length
    return counts


def is_involution(batch: IntArray) -> npt.NDArray[np.bool_]:
    perms = np.asarray(batch, dtype=np.intp)
    squared = np.take_along_axis(perms, perms, axis=1)
    return (squared == np.arange(perms.shape[1])).all(axis=1)


@cache
def perfect_matchings(size: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All perfect matchings of range(size) as position pairs."""

    def match(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for index, partner in enumerate(rest):
            for tail in match(rest[:index] + rest[index + 1 :]):
                yield ((first, partner), *tail)

    return tuple(match(tuple(range(size))))


def _k_transposition_rows(n: int, supports: IntArray, k: int) -> IntArray:
    count = supports.shape[0]
    rows = np.arange(count)
    blocks = []
    for matching in perfect_matchings(2 * k):
        block = np.tile(np.arange(n, dtype=row_dtype(n)), (count, 1))
        for a, b in matching:
            block[rows, supports[:, a]] = supports[:, b]
            block[rows, supports[:, b]] = supports[:, a]
        blocks.append(block)
    return np.vstack(blocks)


def iter_k_transposition_blocks(n: int, k: int, block: int = 50_000) -> Iterator[IntArray]:
    """Stream the class H of k-transpositions as row blocks."""
    supports = combinations(range(n), 2 * k)
    while True:
        chunk = list(islice(supports, block))
        if not chunk:
            return
        yield _k_transposition_rows(n, np.array(chunk, dtype=np.intp), k)


def k_transposition_array(n: int, k: int) -> IntArray:
    """The whole class H of k-transpositions as one array."""
    return np.vstack(list(iter_k_transposition_blocks(n, k)))
