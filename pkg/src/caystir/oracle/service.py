"""
Brute-Force Oracle Module

Independent ground truth for every analytic claim in the package. The oracle
runs breadth-first search over whole groups (element level) or over cycle types
(class level), and counts Φ, I_g and the mixed-parity intersections directly by
enumerating Sym(n). It never consults the closed-form sphere description except
when ``phi_direct`` is explicitly asked for analytic membership.

All permutation work is vectorized through ``caystir.perms.arrays``; counting
loops stream Sym(n) in lexicographic blocks so memory stays bounded.
"""

import threading
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from math import factorial

import numpy as np
import numpy.typing as npt
import structlog

from caystir.exceptions import OracleCapError, PermutationError, SeedInfeasibleError
from caystir.metric import GraphSpec, radius_table
from caystir.oracle.cache import SeedCache
from caystir.oracle.seeds import SeedRow, seed_key, seed_threshold
from caystir.oracle.tables import (
    UNREACHED,
    ClassDistanceTable,
    ElementDistanceTable,
    cycle_type_from_counts,
)
from caystir.perms import (
    CycleType,
    Parity,
    Permutation,
    class_size,
    cycle_type,
    inverse,
    partitions_of,
    representative,
)
from caystir.perms.arrays import (
    apply_after,
    apply_before,
    cycle_counts,
    cycle_type_counts,
    is_involution,
    k_transposition_array,
    lex_permutation_blocks,
    lex_permutations,
    lex_rank,
    to_row,
)
from caystir.schemas import SeedKind
from caystir.settings import settings

logger = structlog.get_logger(__name__)

_BLOCK_DEGREE = 8
_CLASS_BLOCK = 100_000


def _prefix(n: int) -> int:
    return max(0, n - _BLOCK_DEGREE)


def _ranks_after(batch: npt.NDArray[np.intp], h: npt.NDArray[np.intp]) -> npt.NDArray[np.int64]:
    return lex_rank(apply_after(batch, h))


class BruteForceOracle:
    """
    Exact brute-force computations with configurable caps.

    Args:
        element_cap: Largest vertex-group order for element BFS.
        enumeration_cap: Largest degree for full Sym(n) enumeration.
        class_budget: Largest |H| * p(n) for class BFS.
        threads: Worker threads for BFS expansion.
        cache: Optional on-disk seed-row cache.
    """

    def __init__(  # noqa: PLR0913
        self,
        *,
        element_cap: int = settings.oracle_element_cap,
        enumeration_cap: int = settings.oracle_enumeration_cap,
        class_budget: int = settings.oracle_class_budget,
        threads: int = settings.threads,
        cache: SeedCache | None = None,
    ) -> None:
        self.element_cap = element_cap
        self.enumeration_cap = enumeration_cap
        self.class_budget = class_budget
        self.threads = threads
        self.cache = cache
        self.logger = logger.bind(service="oracle")
        self._lock = threading.Lock()
        self._element_tables: dict[GraphSpec, ElementDistanceTable] = {}
        self._class_tables: dict[GraphSpec, ClassDistanceTable] = {}
        self._joint: dict[tuple[int, ...], npt.NDArray[np.int64]] = {}

    # ------------------------------------------------------------------ caps

    def element_feasible(self, spec: GraphSpec) -> bool:
        return spec.order <= self.element_cap

    def enumeration_feasible(self, n: int) -> bool:
        return n <= self.enumeration_cap

    def _require_enumeration(self, n: int) -> None:
        if not self.enumeration_feasible(n):
            msg = f"enumerating Sym({n}) exceeds the enumeration cap {self.enumeration_cap}"
            raise OracleCapError(msg)

    def _map[T, R](self, func: Callable[[T], R], items: Iterable[T]) -> list[R]:
        if self.threads == 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(func, items))

    # ---------------------------------------------------------- element BFS

    def element_bfs(self, spec: GraphSpec) -> ElementDistanceTable:
        """
        Exact distances from e over the whole vertex group.

        Raises:
            OracleCapError: If the group order exceeds the element cap.
        """
        with self._lock:
            cached = self._element_tables.get(spec)
        if cached is not None:
            return cached
        if not self.element_feasible(spec):
            msg = f"{spec} has order {spec.order}, above the element cap {self.element_cap}"
            raise OracleCapError(msg)

        n = spec.n
        everything = lex_permutations(n)
        distances = np.full(everything.shape[0], UNREACHED, dtype=np.uint8)
        generators = k_transposition_array(n, spec.k).astype(np.intp)
        frontier = np.arange(n, dtype=np.intp)[None, :]
        distances[lex_rank(frontier)] = 0
        level = 0
        while frontier.shape[0]:
            ranks_for = partial(_ranks_after, frontier)
            reached: list[npt.NDArray[np.int64]] = []
            step = max(1, self.threads) * 4
            for start in range(0, generators.shape[0], step):
                chunk = list(generators[start : start + step])
                for ranks in self._map(ranks_for, chunk):
                    fresh = ranks[distances[ranks] == UNREACHED]
                    distances[fresh] = level + 1
                    reached.append(fresh)
            level += 1
            new_ranks = np.concatenate(reached) if reached else np.empty(0, np.int64)
            frontier = everything[new_ranks].astype(np.intp)
            self.logger.debug(
                "element_bfs_level", k=spec.k, n=n, level=level, frontier=frontier.shape[0]
            )

        table = ElementDistanceTable(spec, distances)
        self.logger.info(
            "element_bfs_done",
            k=spec.k,
            n=n,
            vertices=len(table),
            diameter=table.max_distance,
        )
        with self._lock:
            self._element_tables[spec] = table
        return table

    # ------------------------------------------------------------ class BFS

    def class_bfs(self, spec: GraphSpec) -> ClassDistanceTable:
        """
        Distances by cycle type, expanding one canonical representative per class.

        Raises:
            OracleCapError: If |H| times the number of classes exceeds the budget.
        """
        with self._lock:
            cached = self._class_tables.get(spec)
        if cached is not None:
            return cached
        types = partitions_of(spec.n)
        work = spec.generator_count * len(types)
        if work > self.class_budget:
            msg = (
                f"class BFS on {spec} needs {work} products, "
                f"above the budget {self.class_budget}"
            )
            raise OracleCapError(msg)

        generators = k_transposition_array(spec.n, spec.k)

        def successors(t: CycleType) -> set[tuple[int, ...]]:
            rep = to_row(representative(t))
            found: set[tuple[int, ...]] = set()
            for start in range(0, generators.shape[0], _CLASS_BLOCK):
                products = apply_before(rep, generators[start : start + _CLASS_BLOCK])
                unique = np.unique(cycle_type_counts(products), axis=0)
                found.update(tuple(int(v) for v in row) for row in unique)
            return found

        distances: dict[CycleType, int] = {CycleType.identity(spec.n): 0}
        frontier = [CycleType.identity(spec.n)]
        level = 0
        while frontier:
            level += 1
            reached: list[CycleType] = []
            for found in self._map(successors, frontier):
                for key in sorted(found):
                    t = cycle_type_from_counts(np.asarray(key, dtype=np.intp))
                    if t not in distances:
                        distances[t] = level
                        reached.append(t)
            frontier = reached
            self.logger.debug(
                "class_bfs_level", k=spec.k, n=spec.n, level=level, classes=len(reached)
            )

        table = ClassDistanceTable(spec, distances)
        self.logger.info(
            "class_bfs_done",
            k=spec.k,
            n=spec.n,
            classes=len(table),
            diameter=table.max_distance,
        )
        with self._lock:
            self._class_tables[spec] = table
        return table

    # ------------------------------------------------------------- counting

    def _deficit_joint(self, g: Permutation) -> npt.NDArray[np.int64]:
        """Counts of x in Sym(n) by (deficit of x, deficit of x·g⁻¹)."""
        key = g.images
        with self._lock:
            cached = self._joint.get(key)
        if cached is not None:
            return cached
        n = g.degree
        self._require_enumeration(n)
        ginv = to_row(inverse(g))
        joint = np.zeros(n * n, dtype=np.int64)
        for _, block in lex_permutation_blocks(n, _prefix(n)):
            left = n - cycle_counts(block)
            right = n - cycle_counts(apply_after(block, ginv))
            joint += np.bincount(left * n + right, minlength=n * n)
        result = joint.reshape(n, n)
        with self._lock:
            self._joint[key] = result
        return result

    def i_g_direct(self, n: int, r: int, g: Permutation) -> int:
        """
        |B¹_r ∩ Z_r g| by enumeration of Sym(n).

        Raises:
            OracleCapError: If n exceeds the enumeration cap.
        """
        if g.degree != n:
            msg = f"permutation of degree {g.degree}, expected {n}"
            raise PermutationError(msg)
        if r < 0:
            return 0
        joint = self._deficit_joint(g)
        deficits = np.arange(n)
        rows = deficits <= r
        cols = (deficits <= r) & (deficits % 2 == r % 2)
        return int(joint[np.ix_(rows, cols)].sum())

    def cross_direct(self, n: int, a: int, b: int, g: Permutation) -> int:
        """|Z_a ∩ Z_b g| by enumeration of Sym(n)."""
        if g.degree != n:
            msg = f"permutation of degree {g.degree}, expected {n}"
            raise PermutationError(msg)
        if a < 0 or b < 0:
            return 0
        joint = self._deficit_joint(g)
        deficits = np.arange(n)
        rows = (deficits <= a) & (deficits % 2 == a % 2)
        cols = (deficits <= b) & (deficits % 2 == b % 2)
        return int(joint[np.ix_(rows, cols)].sum())

    def phi_direct_profile(
        self, spec: GraphSpec, g: Permutation, *, analytic: bool = False
    ) -> list[int]:
        """
        Φ(spec; r, g) for r = 0, 1, ... until it reaches the group order.

        With ``analytic`` the distances come from the closed-form sphere
        description, streamed over Sym(n) without a BFS array.
        """
        if g.degree != spec.n:
            msg = f"permutation of degree {g.degree} in a graph on degree {spec.n}"
            raise PermutationError(msg)
        ginv = to_row(inverse(g))
        histogram = np.zeros(UNREACHED + 1, dtype=np.int64)

        if analytic:
            self._require_enumeration(spec.n)
            for _, block in lex_permutation_blocks(spec.n, _prefix(spec.n)):
                near = self._analytic_distances(spec, block)
                far = self._analytic_distances(spec, apply_after(block, ginv))
                histogram += np.bincount(np.maximum(near, far), minlength=UNREACHED + 1)
        else:
            table = self.element_bfs(spec)
            everything = lex_permutations(spec.n)
            for start in range(0, everything.shape[0], _CLASS_BLOCK):
                block = everything[start : start + _CLASS_BLOCK]
                near = table.distances[start : start + block.shape[0]]
                far = table.distances[lex_rank(apply_after(block, ginv))]
                histogram += np.bincount(np.maximum(near, far), minlength=UNREACHED + 1)

        cumulative = np.cumsum(histogram[:UNREACHED])
        profile: list[int] = []
        for value in cumulative:
            profile.append(int(value))
            if value == spec.order:
                break
        return profile

    @staticmethod
    def _analytic_distances(spec: GraphSpec, block: npt.NDArray[np.intp]) -> npt.NDArray[np.intp]:
        lookup = np.array(
            [UNREACHED if r is None else r for r in radius_table(spec)], dtype=np.intp
        )
        deficits = spec.n - cycle_counts(block)
        distances = lookup[deficits]
        generators = is_involution(block) & (deficits == spec.k)
        distances[generators] = 1
        return distances

    def phi_direct(
        self, spec: GraphSpec, r: int, g: Permutation, *, analytic: bool = False
    ) -> int:
        """
        |B_r(e) ∩ B_r(g)|, counting x with d(e, x) <= r and d(e, x·g⁻¹) <= r.

        Raises:
            OracleCapError: If neither the BFS nor the enumeration route is within caps.
        """
        if r < 0:
            return 0
        profile = self.phi_direct_profile(spec, g, analytic=analytic)
        return profile[min(r, len(profile) - 1)]

    # ------------------------------------------------------------ seed rows

    def seed_row(self, g_type: CycleType, kind: SeedKind, offset: int = 0) -> SeedRow:
        """
        Brute-force row of the class ``g_type`` at its threshold t = max(s, 2).

        Raises:
            SeedInfeasibleError: If t exceeds the enumeration cap.
        """
        t = seed_threshold(g_type)
        base = g_type.with_degree(t)
        if self.cache is not None:
            hit = self.cache.get(seed_key(base, kind, offset))
            if hit is not None:
                return hit
        if t > self.enumeration_cap:
            msg = (
                f"class {g_type.support_key} needs Sym({t}), "
                f"above the enumeration cap {self.enumeration_cap}"
            )
            raise SeedInfeasibleError(msg)

        g = representative(base)
        half = factorial(t) // 2
        match kind:
            case SeedKind.PHI_K1:
                spec = GraphSpec(1, t)
                profile = self.phi_direct_profile(spec, g, analytic=not self.element_feasible(spec))
                row = {r: profile[min(r, len(profile) - 1)] for r in range(t)}
                tail = factorial(t)
            case SeedKind.I_ROW:
                row = {r: self.i_g_direct(t, r, g) for r in range(2 * (t - 1) + 1)}
                tail = half
            case SeedKind.CROSS_ROW:
                span = t - 1 + max(offset, 0)
                row = {r: self.cross_direct(t, r, r - offset, g) for r in range(span + 1)}
                compatible = (offset % 2 == 0) == (cycle_type(g).parity is Parity.EVEN)
                tail = half if compatible else 0

        seed = SeedRow(g_type=base, t=t, kind=kind, row=row, tail=tail, offset=offset)
        seed.check()
        self.logger.debug("seed_row", key=seed.key, t=t)
        if self.cache is not None:
            self.cache.put(seed)
        return seed

    # ------------------------------------------------------------ helpers

    @staticmethod
    def class_sizes_by_distance(table: ClassDistanceTable) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for t, d in table.distances.items():
            sizes[d] = sizes.get(d, 0) + class_size(t)
        return dict(sorted(sizes.items()))
