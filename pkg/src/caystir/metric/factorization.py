"""
Constructive factorizations into k-transpositions.

Every cycle is a product of two reflections of its point sequence. Pairing the
reflections cycle by cycle splits any permutation of even cycle deficit 2t into
two products of t disjoint transpositions each; t < k is topped up with shared
transpositions on fixed points, which cancel. Longer geodesics peel a few
splitting transpositions off g, factor the rest recursively, and absorb the
peeled part into the last generator.

Ties are broken deterministically: cycles in order of their smallest point,
padding on the smallest fixed points.
"""

from functools import reduce

import structlog

from caystir.exceptions import FactorizationError
from caystir.metric.graph import GraphSpec
from caystir.metric.spheres import sphere_radius
from caystir.perms import (
    Permutation,
    compose,
    cycle_count,
    embed,
    identity,
    is_k_transposition,
)

logger = structlog.get_logger(__name__)

Pair = tuple[int, int]

# reflection offsets (x-side) for even cycles, alternating; odd cycles use 2
_EVEN_OFFSETS = (1, 0)
_ODD_OFFSET = 2


def _reflection(cycle: tuple[int, ...], offset: int) -> list[Pair]:
    """Transpositions of the reflection i <-> offset - i on the cycle's positions."""
    length = len(cycle)
    pairs: list[Pair] = []
    for i in range(length):
        j = (offset - i) % length
        if i < j:
            pairs.append((cycle[i], cycle[j]))
    return pairs


def _split_cycles(g: Permutation) -> tuple[list[Pair], list[Pair]]:
    """Disjoint transpositions x, y with x·y = g, each of size (n - |g|) / 2."""
    left: list[Pair] = []
    right: list[Pair] = []
    even_seen = 0
    for cycle in g.cycles:
        if len(cycle) % 2 == 0:
            offset = _EVEN_OFFSETS[even_seen % 2]
            even_seen += 1
        else:
            offset = _ODD_OFFSET
        left.extend(_reflection(cycle, offset))
        right.extend(_reflection(cycle, offset + 1))
    return left, right


def splitting_transpositions(g: Permutation) -> list[Pair]:
    """Disjoint transpositions each of which lowers the cycle deficit of g by one."""
    return [pair for cycle in g.cycles if len(cycle) > 1 for pair in _reflection(cycle, 1)]


def _padding(g: Permutation, count: int) -> list[Pair]:
    fixed = [point for point in range(1, g.degree + 1) if g(point) == point]
    if len(fixed) < 2 * count:
        msg = f"need {2 * count} fixed points for padding, {g} has {len(fixed)}"
        raise FactorizationError(msg)
    return [(fixed[2 * i], fixed[2 * i + 1]) for i in range(count)]


def _two_factors(g: Permutation, k: int) -> tuple[Permutation, Permutation]:
    n = g.degree
    deficit = n - cycle_count(g)
    if deficit % 2 or deficit > 2 * k:
        msg = f"cycle deficit {deficit} of {g} is not an even value in 0..{2 * k}"
        raise FactorizationError(msg)
    left, right = _split_cycles(g)
    pads = _padding(g, k - deficit // 2)
    x = Permutation.from_cycles(left + pads, n)
    y = Permutation.from_cycles(right + pads, n)
    return x, y


def factor_two_k_transpositions(
    g: Permutation, n: int, k: int
) -> tuple[Permutation, Permutation]:
    """
    Write g as x·y with x and y both k-transpositions.

    Args:
        g: Permutation with n - |g| = 2t for some 1 <= t <= k.
        n: Degree to work in (g is embedded if smaller).
        k: Size of the generators.

    Returns:
        tuple[Permutation, Permutation]: x and y with compose(x, y) == g.

    Raises:
        FactorizationError: If the cycle-count condition fails or there are too
            few fixed points for the padding transpositions.
    """
    g = embed(g, n)
    deficit = n - cycle_count(g)
    if deficit == 0:
        msg = "the identity has no factorization into two distinct-support generators here"
        raise FactorizationError(msg)
    x, y = _two_factors(g, k)
    logger.debug("factor_two", g=str(g), x=str(x), y=str(y))
    return x, y


def _cut_generator(g: Permutation, k: int) -> Permutation:
    """A generator h with g·h of even deficit at most 2k (g of odd deficit <= 3k)."""
    deficit = g.degree - cycle_count(g)
    splits = splitting_transpositions(g)
    used = min(k, len(splits), (deficit + k) // 2)
    pairs = splits[:used] + _padding(g, k - used)
    return Permutation.from_cycles(pairs, g.degree)


def _peel_size(spec: GraphSpec, deficit: int, radius: int) -> int:
    k = spec.k
    if k % 2 == 0:
        return deficit - (radius - 1) * k
    if deficit % 2 == 0:
        band = radius // 2 - 1
        return max(1, deficit - (2 * band + 1) * k)
    band = (radius - 3) // 2
    return max(1, deficit - 2 * (band + 1) * k)


def _factor(spec: GraphSpec, g: Permutation, radius: int) -> list[Permutation]:
    k = spec.k
    if radius == 0:
        return []
    if radius == 1:
        return [g]
    if radius == 2:  # noqa: PLR2004
        return list(_two_factors(g, k))

    deficit = spec.n - cycle_count(g)
    if radius == 3 and k % 2 and deficit % 2:  # noqa: PLR2004
        h = _cut_generator(g, k)
        return [*_two_factors(compose(g, h), k), h]

    size = _peel_size(spec, deficit, radius)
    peeled = Permutation.from_cycles(splitting_transpositions(g)[:size], spec.n)
    rest = compose(g, peeled)
    if sphere_radius(spec, rest).radius != radius - 1:
        msg = f"peeling {size} transpositions from {g} did not reach radius {radius - 1}"
        raise FactorizationError(msg)
    factors = _factor(spec, rest, radius - 1)
    closing = compose(factors[-1], peeled)
    return [*factors[:-1], *_two_factors(closing, k)]


def geodesic_factorization(spec: GraphSpec, g: Permutation) -> list[Permutation]:
    """
    Shortest product of k-transpositions equal to g.

    The list has exactly sphere_radius(spec, g) entries; composing them left to
    right gives g.

    Raises:
        FactorizationError: If g is not a vertex of the graph.
        AnalyticRangeError: If (k, n) is outside the analytic range.
    """
    radius = sphere_radius(spec, g).radius
    if radius is None:
        msg = f"{g} is not a vertex of {spec}"
        raise FactorizationError(msg)

    if spec.k == 1:
        factors = [
            Permutation.from_cycles([(cycle[0], point)], spec.n)
            for cycle in g.cycles
            for point in cycle[1:]
        ]
    else:
        factors = _factor(spec, g, radius)

    product = reduce(compose, factors, identity(spec.n))
    if product != g or len(factors) != radius:
        msg = f"factorization of {g} failed its product or length check"
        raise FactorizationError(msg)
    if not all(is_k_transposition(h, spec.k) for h in factors):
        msg = f"factorization of {g} produced a non-generator"
        raise FactorizationError(msg)
    return factors
