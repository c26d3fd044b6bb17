"""
Phi Engine Module

Exact metric intersection numbers Φ(Γᵏₙ; r, g) = |B_r(e) ∩ B_r(g)| for
arbitrary n, assembled from Stirling functions seeded by brute-force rows at
the small threshold t = max(s, 2):

  k = 1         Φ = phi-k1 row continued to n, every r
  k even        Φ = I_g(n, rk)                        (r >= 2, n > max(s, 4k))
  k odd >= 3    even g: Φ = I_g(n, rk) + I_g(n, (r-1)k)
                odd g:  Φ = 2·|Z_rk ∩ Z_(r-1)k g|      (r >= 3, n > max(s, 4k))

k = 2 uses the threshold max(s, 4). Radii 0 and 1 are counted by scanning the
generator class. Odd k at r = 2 has no cycle-count description of B_2 and is
answered only by the oracle.
"""

import threading
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import structlog

from caystir.exceptions import (
    BelowThresholdError,
    CaystirError,
    ExactValueUnavailableError,
    OracleCapError,
    PermutationError,
    QueryError,
    SeedInfeasibleError,
    UnsupportedRegimeError,
)
from caystir.metric import GraphSpec, diameter
from caystir.oracle import BruteForceOracle, seed_key
from caystir.perms import CycleType, Parity, Permutation, cycle_type, partitions_of, representative
from caystir.perms.arrays import (
    apply_after,
    cycle_counts,
    is_involution,
    iter_k_transposition_blocks,
    to_row,
)
from caystir.perms.permutation import inverse
from caystir.schemas import PhiRowDocument, PhiTableDocument, Regime, SeedKind
from caystir.settings import settings
from caystir.stirling import StirlingFunction

logger = structlog.get_logger(__name__)

_K2_THRESHOLD = 4
_ODD_K_FIRST_ANALYTIC_RADIUS = 3


@dataclass(frozen=True)
class PhiQuery:
    """
    A request for Φ(spec; r, g) with g reduced to its class.

    Attributes:
        spec (GraphSpec): The graph
        r (int): Radius
        g_type (CycleType): Class of the centre offset, at degree spec.n
    """

    spec: GraphSpec
    r: int
    g_type: CycleType

    def __post_init__(self) -> None:
        if self.r < 0:
            msg = f"radius must be nonnegative, got {self.r}"
            raise QueryError(msg)
        if self.g_type.degree != self.spec.n:
            msg = f"cycle type {self.g_type} does not have degree {self.spec.n}"
            raise PermutationError(msg)
        if not self.spec.admits(self.g_type):
            msg = f"class {self.g_type} is not in the vertex group of {self.spec}"
            raise PermutationError(msg)

    @classmethod
    def create(cls, spec: GraphSpec, r: int, g: Permutation | CycleType) -> "PhiQuery":
        """Build a query from an element or a class of any degree up to n."""
        t = cycle_type(g) if isinstance(g, Permutation) else g
        return cls(spec, r, t.with_degree(spec.n))


@dataclass(frozen=True)
class PhiResult:
    value: int
    regime: Regime


@dataclass(frozen=True)
class PhiRow:
    r: int
    value: int | None
    regime: Regime
    note: str = ""


@dataclass(frozen=True)
class PhiTable:
    spec: GraphSpec
    g_type: CycleType
    rows: tuple[PhiRow, ...]

    def as_dict(self) -> dict[int, int | None]:
        return {row.r: row.value for row in self.rows}

    def to_document(self) -> PhiTableDocument:
        return PhiTableDocument(
            k=self.spec.k,
            n=self.spec.n,
            g_type=str(self.g_type),
            rows=[
                PhiRowDocument(r=row.r, phi=row.value, regime=row.regime, note=row.note)
                for row in self.rows
            ],
        )


@dataclass(frozen=True)
class ReconstructionResult:
    value: int
    argmax: tuple[CycleType, ...]


class PhiEngine:
    """
    Assembles Φ from seeded Stirling functions, scans and oracle fallbacks.

    Args:
        oracle: Brute-force oracle used for seed rows and fallbacks.
        h_scan_budget: Largest generator class the radius-one scan will walk.
        threads: Worker threads for table and class sweeps.
    """

    def __init__(
        self,
        oracle: BruteForceOracle,
        *,
        h_scan_budget: int = settings.h_scan_budget,
        threads: int = settings.threads,
    ) -> None:
        self.oracle = oracle
        self.h_scan_budget = h_scan_budget
        self.threads = threads
        self.logger = logger.bind(service="phi_engine")
        self._functions: dict[str, StirlingFunction] = {}
        self._lock = threading.Lock()

    def _map[T, R](self, func: Callable[[T], R], items: Iterable[T]) -> list[R]:
        if self.threads == 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(func, items))

    def stirling_for(
        self, g_type: CycleType, kind: SeedKind, offset: int = 0
    ) -> StirlingFunction:
        """
        Stirling function continuing the seed row of ``g_type`` to every n >= t.

        Raises:
            SeedInfeasibleError: If the class support exceeds the enumeration cap.
        """
        base = g_type.with_degree(max(g_type.support_size, 2))
        key = seed_key(base, kind, offset)
        with self._lock:
            cached = self._functions.get(key)
        if cached is not None:
            return cached
        function = self.oracle.seed_row(base, kind, offset).to_stirling()
        with self._lock:
            self._functions.setdefault(key, function)
            return self._functions[key]

    # ------------------------------------------------------------------ phi

    def phi(self, query: PhiQuery, *, force_oracle: bool = False) -> PhiResult:
        """
        Exact Φ(spec; r, g) with the regime that produced it.

        Raises:
            UnsupportedRegimeError: If no exact route exists (odd k, r = 2 above
                the oracle caps).
            BelowThresholdError: If n is too small for the analytic route and the
                oracle is infeasible.
            OracleCapError: If the oracle was forced or needed but is over its caps.
        """
        if force_oracle:
            return self._oracle(query)
        try:
            result = self._analytic(query)
        except SeedInfeasibleError:
            if self.oracle.element_feasible(query.spec):
                return self._oracle(query)
            raise
        self.logger.debug(
            "phi",
            k=query.spec.k,
            n=query.spec.n,
            r=query.r,
            g_type=str(query.g_type),
            regime=result.regime.value,
        )
        return result

    def _oracle(self, query: PhiQuery) -> PhiResult:
        g = representative(query.g_type)
        value = self.oracle.phi_direct(query.spec, query.r, g)
        return PhiResult(value, Regime.ORACLE)

    def _fallback(self, query: PhiQuery, error: type[CaystirError], reason: str) -> PhiResult:
        if self.oracle.element_feasible(query.spec):
            return self._oracle(query)
        raise error(reason)

    def _analytic(self, query: PhiQuery) -> PhiResult:
        spec, r, g_type = query.spec, query.r, query.g_type
        n, k, s = spec.n, spec.k, g_type.support_size

        if k == 1:
            function = self.stirling_for(g_type, SeedKind.PHI_K1)
            return PhiResult(function.eval_r(n, r), Regime.ANALYTIC_RECURSION)
        if r <= 1:
            return self._scan(query)
        if not spec.analytic_valid:
            reason = f"{spec} is outside analytic validity (n < {spec.analytic_floor})"
            return self._fallback(query, UnsupportedRegimeError, reason)

        threshold = max(s, _K2_THRESHOLD if k == 2 else 4 * k)
        if k % 2 and r < _ODD_K_FIRST_ANALYTIC_RADIUS:
            reason = (
                f"odd k={k} at r=2: the ball contains the bare generator class, "
                "which no cycle-count recursion describes"
            )
            return self._fallback(query, UnsupportedRegimeError, reason)
        if n <= threshold:
            reason = f"n={n} is at or below the analytic threshold {threshold} for {g_type}"
            return self._fallback(query, BelowThresholdError, reason)

        if k % 2 == 0:
            function = self.stirling_for(g_type, SeedKind.I_ROW)
            return PhiResult(function.eval_r(n, r * k), Regime.ANALYTIC_RECURSION)
        if g_type.parity is Parity.EVEN:
            function = self.stirling_for(g_type, SeedKind.I_ROW)
            value = function.eval_r(n, r * k) + function.eval_r(n, (r - 1) * k)
        else:
            function = self.stirling_for(g_type, SeedKind.CROSS_ROW, offset=k)
            value = 2 * function.eval_r(n, r * k)
        return PhiResult(value, Regime.ANALYTIC_RECURSION)

    def _scan(self, query: PhiQuery) -> PhiResult:
        """Count x in B_r = {e} ∪ H (r = 1) or {e} (r = 0) with x·g⁻¹ in B_r."""
        spec, g_type = query.spec, query.g_type
        if query.r == 0:
            return PhiResult(int(g_type.is_identity), Regime.H_SCAN)
        generators = spec.generator_count
        if g_type.is_identity:
            return PhiResult(1 + generators, Regime.H_SCAN)
        if generators > self.h_scan_budget:
            reason = f"|H| = {generators} exceeds the scan budget {self.h_scan_budget}"
            return self._fallback(query, UnsupportedRegimeError, reason)

        n, k = spec.n, spec.k
        ginv = to_row(inverse(representative(g_type)))
        count = int(g_type.is_k_transposition(k))
        for block in iter_k_transposition_blocks(n, k):
            products = apply_after(block, ginv)
            deficits = n - cycle_counts(products)
            inside = (deficits == 0) | (is_involution(products) & (deficits == k))
            count += int(inside.sum())
        return PhiResult(count, Regime.H_SCAN)

    # -------------------------------------------------------------- sweeps

    def _table_radius(self, spec: GraphSpec) -> int:
        if spec.analytic_valid:
            return diameter(spec)
        return self.oracle.element_bfs(spec).max_distance

    def phi_table(
        self, spec: GraphSpec, g_type: CycleType, *, force_oracle: bool = False
    ) -> PhiTable:
        """Φ for r = 0..diameter; cells without an exact route are marked unsupported."""
        query_type = g_type.with_degree(spec.n)

        def row(r: int) -> PhiRow:
            try:
                result = self.phi(PhiQuery(spec, r, query_type), force_oracle=force_oracle)
            except (UnsupportedRegimeError, OracleCapError) as e:
                return PhiRow(r, None, Regime.UNSUPPORTED, str(e))
            return PhiRow(r, result.value, result.regime)

        rows = tuple(self._map(row, range(self._table_radius(spec) + 1)))
        return PhiTable(spec, query_type, rows)

    def reconstruction_number(
        self, spec: GraphSpec, r: int, *, force_oracle: bool = False
    ) -> ReconstructionResult:
        """
        max Φ(spec; r, g) over nonidentity classes g of the vertex group.

        Raises:
            ExactValueUnavailableError: If some class has no exact route.
        """
        classes = [t for t in partitions_of(spec.n) if spec.admits(t) and not t.is_identity]

        def value(t: CycleType) -> int | str:
            try:
                return self.phi(PhiQuery(spec, r, t), force_oracle=force_oracle).value
            except (UnsupportedRegimeError, OracleCapError) as e:
                return str(e)

        values = self._map(value, classes)
        missing = [
            f"{t}: {v}" for t, v in zip(classes, values, strict=True) if isinstance(v, str)
        ]
        if missing:
            msg = f"exact N unavailable for {spec}, r={r}: " + "; ".join(missing)
            raise ExactValueUnavailableError(msg)
        exact = [v for v in values if isinstance(v, int)]
        best = max(exact)
        argmax = tuple(t for t, v in zip(classes, exact, strict=True) if v == best)
        self.logger.info(
            "reconstruction_number",
            k=spec.k,
            n=spec.n,
            r=r,
            value=best,
            classes=len(argmax),
        )
        return ReconstructionResult(best, argmax)
