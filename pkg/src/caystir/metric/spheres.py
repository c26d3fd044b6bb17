"""
Analytic spheres, balls and diameters of Γᵏₙ.

Every rule depends only on the cycle deficit c = n - |g| (the transposition
distance of g) and on whether g itself is a generator:

  k = 1         radius c
  k even        c <= 2k: 1 on H, else 2; beyond: ceil(c / k)
  k odd >= 3    c even: 2·ceil(c / 2k); c odd: 1 on H, else
                max(3, 2·ceil((c - k) / 2k) + 1)

Odd permutations are not vertices when k is even. The k = 2 rule holds from
n = 5, larger even or odd k from n = 4k.
"""

from dataclasses import dataclass
from functools import cache

import structlog

from caystir.exceptions import AnalyticRangeError, PermutationError
from caystir.metric.graph import GraphSpec, VertexGroup
from caystir.perms import (
    CycleType,
    Permutation,
    class_size,
    compose,
    cycle_type,
    inverse,
    partitions_of,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SphereAssignment:
    """
    Radius of a permutation's sphere, or ``None`` when it is not a vertex.

    Attributes:
        radius (int | None): Distance from the identity
        clause (str): Which rule of the sphere description decided it
    """

    radius: int | None
    clause: str = ""

    @property
    def is_vertex(self) -> bool:
        return self.radius is not None

    def __str__(self) -> str:
        return "not-a-vertex" if self.radius is None else str(self.radius)


NOT_A_VERTEX = SphereAssignment(None, "parity mismatch")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_analytic(spec: GraphSpec) -> None:
    if not spec.analytic_valid:
        msg = (
            f"analytic spheres need n >= {spec.analytic_floor} for k={spec.k}; "
            f"got n={spec.n}, use the oracle"
        )
        raise AnalyticRangeError(msg)


def assign_deficit(spec: GraphSpec, deficit: int, *, in_h: bool) -> SphereAssignment:
    """Sphere of any vertex with cycle deficit ``deficit``; ``in_h`` marks generators."""
    k = spec.k
    if k == 1:
        return SphereAssignment(deficit, "k=1: radius equals the cycle deficit")
    if spec.group is VertexGroup.ALT and deficit % 2:
        return NOT_A_VERTEX
    if deficit == 0:
        return SphereAssignment(0, "identity")
    if in_h:
        return SphereAssignment(1, "generator class H")

    if k % 2 == 0:
        if deficit <= 2 * k:
            clause = (
                "k=2: 3-cycle"
                if deficit == 2 and k == 2  # noqa: PLR2004
                else "k even: deficit at most 2k outside H"
            )
            return SphereAssignment(2, clause)
        return SphereAssignment(_ceil_div(deficit, k), "k even: ceil(deficit / k)")

    if deficit % 2 == 0:
        return SphereAssignment(
            2 * _ceil_div(deficit, 2 * k), "k odd, even deficit: 2 ceil(deficit / 2k)"
        )
    radius = max(3, 2 * _ceil_div(deficit - k, 2 * k) + 1)
    if radius > 3:  # noqa: PLR2004
        clause = "k odd, odd deficit: 2 ceil((deficit - k) / 2k) + 1"
    else:
        clause = "k odd, odd deficit at most 3k outside H"
    return SphereAssignment(radius, clause)


@cache
def radius_table(spec: GraphSpec) -> tuple[int | None, ...]:
    """Radius of a non-generator vertex indexed by its cycle deficit 0..n-1."""
    _require_analytic(spec)
    return tuple(assign_deficit(spec, c, in_h=False).radius for c in range(spec.n))


def type_radius(spec: GraphSpec, t: CycleType) -> SphereAssignment:
    """Sphere of the class t (a class function of the vertex)."""
    _require_analytic(spec)
    if t.degree != spec.n:
        msg = f"cycle type of degree {t.degree} in a graph on degree {spec.n}"
        raise PermutationError(msg)
    return assign_deficit(spec, t.deficit, in_h=t.is_k_transposition(spec.k))


def sphere_radius(spec: GraphSpec, g: Permutation) -> SphereAssignment:
    """
    Distance from the identity to g, read off its cycle type.

    Raises:
        AnalyticRangeError: If the closed form does not cover (k, n).
        PermutationError: If g has the wrong degree.
    """
    if g.degree != spec.n:
        msg = f"permutation of degree {g.degree} in a graph on degree {spec.n}"
        raise PermutationError(msg)
    return type_radius(spec, cycle_type(g))


def distance(spec: GraphSpec, u: Permutation, v: Permutation) -> SphereAssignment:
    """d(u, v) = radius of u⁻¹v, by left-translation invariance."""
    return sphere_radius(spec, compose(inverse(u), v))


@cache
def sphere_sizes(spec: GraphSpec) -> dict[int, int]:
    """Sphere sizes by radius, summed from class sizes."""
    sizes: dict[int, int] = {}
    for t in partitions_of(spec.n):
        radius = type_radius(spec, t).radius
        if radius is not None:
            sizes[radius] = sizes.get(radius, 0) + class_size(t)
    logger.debug("sphere_sizes", k=spec.k, n=spec.n, radii=len(sizes))
    return dict(sorted(sizes.items()))


def sphere_size(spec: GraphSpec, r: int) -> int:
    return sphere_sizes(spec).get(r, 0)


def ball_size(spec: GraphSpec, r: int) -> int:
    return sum(size for radius, size in sphere_sizes(spec).items() if radius <= r)


def diameter(spec: GraphSpec) -> int:
    """
    Closed-form diameter.

    k = 1 gives n - 1, even k gives ceil((n - 2) / k), and odd k >= 3 takes the
    larger of the even-deficit and odd-deficit extremes for the parity of n.
    """
    _require_analytic(spec)
    n, k = spec.n, spec.k
    if k == 1:
        return n - 1
    if k % 2 == 0:
        return _ceil_div(n - 2, k)
    if n % 2 == 0:
        return max(2 * _ceil_div(n - 2, 2 * k), 2 * _ceil_div(n - k - 1, 2 * k) + 1)
    return max(2 * _ceil_div(n - k - 2, 2 * k) + 1, 2 * _ceil_div(n - 1, 2 * k))
