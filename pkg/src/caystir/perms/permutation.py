"""
Exact permutation arithmetic.

Permutations are immutable one-line image tuples over {1..n}. Products use the
right-action convention throughout: ``compose(u, v)`` applies u first and then v,
so (1 2 3)·(2 3) = (1 3)(2). The degree is explicit and only ``embed`` changes it.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from caystir.exceptions import PermutationError
from caystir.perms.cycle_type import CycleType, Parity


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1..n} in one-line form.

    Attributes:
        images (tuple[int, ...]): images[i - 1] is the image of i
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.images:
            msg = "a permutation needs degree at least 1"
            raise PermutationError(msg)
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            msg = f"images are not a bijection of 1..{len(self.images)}: {self.images}"
            raise PermutationError(msg)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= n:
                    msg = f"point {point} outside 1..{n}"
                    raise PermutationError(msg)
                if point in seen:
                    msg = f"point {point} appears in more than one cycle"
                    raise PermutationError(msg)
                seen.add(point)
            for a, b in zip(cycle, [*cycle[1:], *cycle[:1]], strict=True):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * (self.degree + 1)
        found: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self(start)
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self(point)
            found.append(tuple(cycle))
        return tuple(found)

    @property
    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def __str__(self) -> str:
        moved = [cycle for cycle in self.cycles if len(cycle) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(map(str, cycle)) + ")" for cycle in moved)


def _check_degrees(u: Permutation, v: Permutation) -> None:
    if u.degree != v.degree:
        msg = f"degree mismatch: {u.degree} != {v.degree}"
        raise PermutationError(msg)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    return Permutation.from_cycles([(i, j)], n)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """
    Product u·v under the right action: apply u first, then v.

    Raises:
        PermutationError: If the degrees differ.
    """
    _check_degrees(u, v)
    return Permutation(tuple(v(image) for image in u.images))


def inverse(g: Permutation) -> Permutation:
    images = [0] * g.degree
    for point, image in enumerate(g.images, start=1):
        images[image - 1] = point
    return Permutation(tuple(images))


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """x⁻¹·g·x, which relabels the cycles of g through x."""
    return compose(compose(inverse(x), g), x)


def left_mul(x: Permutation, g: Permutation) -> Permutation:
    return compose(x, g)


def right_mul(g: Permutation, x: Permutation) -> Permutation:
    return compose(g, x)


def cycle_decomposition(g: Permutation) -> list[tuple[int, ...]]:
    """All cycles including fixed points, each led by its smallest point."""
    return list(g.cycles)


def cycle_count(g: Permutation) -> int:
    return len(g.cycles)


def cycle_type(g: Permutation) -> CycleType:
    return CycleType.from_partition(len(cycle) for cycle in g.cycles)


def support_size(g: Permutation) -> int:
    return sum(1 for point, image in enumerate(g.images, start=1) if point != image)


def parity(g: Permutation) -> Parity:
    return Parity.of_deficit(g.degree - cycle_count(g))


def is_k_transposition(g: Permutation, k: int) -> bool:
    if k < 1:
        msg = f"k must be at least 1, got {k}"
        raise PermutationError(msg)
    if g.degree < 2 * k:
        return False
    return cycle_type(g).is_k_transposition(k)


def embed(g: Permutation, n: int) -> Permutation:
    """Extend g to degree n by fixed points."""
    if n < g.degree:
        msg = f"cannot embed degree {g.degree} into degree {n}"
        raise PermutationError(msg)
    return Permutation(g.images + tuple(range(g.degree + 1, n + 1)))


def ins(g: Permutation, j: int) -> Permutation:
    """
    Insert the point n+1 after j in its cycle; j = 0 appends a fixed point.

    For j >= 1 this equals left multiplication of ``embed(g, n + 1)`` by the
    transposition (j, n+1).

    Raises:
        PermutationError: If j is outside 0..n.
    """
    n = g.degree
    if not 0 <= j <= n:
        msg = f"insertion position {j} outside 0..{n}"
        raise PermutationError(msg)
    images = [*g.images, n + 1]
    if j:
        images[j - 1] = n + 1
        images[n] = g(j)
    return Permutation(tuple(images))


def delete(g: Permutation) -> Permutation:
    """Remove the top point n from its cycle, giving a permutation of degree n-1."""
    n = g.degree
    if n < 2:  # noqa: PLR2004
        msg = "cannot delete the only point of a degree-1 permutation"
        raise PermutationError(msg)
    return Permutation(
        tuple(g(n) if image == n else image for image in g.images[:-1])
    )
