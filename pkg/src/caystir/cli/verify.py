"""
Verification suites.

Every suite pits two independent computations against each other (closed forms
against breadth-first search, seeded recursions against enumeration, algebraic
identities against direct evaluation) and tallies the outcome into a
VerifyReport. A failed comparison is report content, never an exception.
"""

import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import partial, reduce
from math import factorial

import numpy as np
import structlog

from caystir.cli.runtime import Runtime
from caystir.exceptions import CaystirError, PermutationError
from caystir.metric import (
    GraphSpec,
    assign_deficit,
    ball_size,
    diameter,
    factor_two_k_transpositions,
    geodesic_factorization,
    sphere_radius,
    type_radius,
)
from caystir.perms import (
    CycleType,
    Parity,
    Permutation,
    compose,
    conjugate,
    delete,
    embed,
    identity,
    ins,
    inverse,
    is_k_transposition,
    left_mul,
    parse_permutation,
    partitions_of,
    random_of_type,
    representative,
    transposition,
)
from caystir.perms.arrays import cycle_counts, from_row, lex_permutations
from caystir.phi import PhiQuery
from caystir.schemas import SeedKind, VerifyReport
from caystir.stirling import classical_stirling

logger = structlog.get_logger(__name__)

_MAX_FAILURES = 20
_RANDOM_CASES = 1000
_TWO_FACTOR_CASES = 200
_GEODESIC_CASES = 500
_MAX_DEGREE = 40
_SMALL_SUPPORT = 6


@dataclass
class _Tally:
    checks: int = 0
    cases: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, what: str) -> None:  # noqa: FBT001
        self.checks += 1
        if ok:
            return
        self.failed += 1
        if len(self.failures) < _MAX_FAILURES:
            self.failures.append(what)

    def fail(self, what: str) -> None:
        self.expect(False, what)  # noqa: FBT003


Suite = Callable[[Runtime, _Tally], None]


def _rng(runtime: Runtime) -> np.random.Generator:
    return np.random.default_rng(runtime.config.seed)


def _random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return from_row(rng.permutation(n))


def _radius(spec: GraphSpec, g: Permutation) -> int:
    radius = sphere_radius(spec, g).radius
    if radius is None:
        msg = f"{g} is not a vertex of {spec}"
        raise PermutationError(msg)
    return radius


def _classes(spec: GraphSpec, *, max_support: int | None = None) -> Iterator[CycleType]:
    for t in partitions_of(spec.n):
        if not spec.admits(t):
            continue
        if max_support is not None and t.support_size > max_support:
            continue
        yield t


# ------------------------------------------------------------- perm calculus


def _stirling_classical(runtime: Runtime, tally: _Tally) -> None:
    function = classical_stirling()
    for n in range(1, 9):
        counts = np.bincount(cycle_counts(lex_permutations(n)), minlength=n + 1)
        for m in range(n + 1):
            tally.expect(function.eval(n, m) == int(counts[m]), f"c({n}, {m})")
        tally.cases += factorial(n)
    for n in range(1, 21):
        tally.expect(sum(function.row(n).values()) == factorial(n), f"row sum at n={n}")


def _insertion_identities(runtime: Runtime, tally: _Tally) -> None:
    rng = _rng(runtime)
    for _ in range(_RANDOM_CASES):
        n = int(rng.integers(1, 9))
        u = _random_permutation(rng, n)
        v = _random_permutation(rng, n)
        j = int(rng.integers(0, n + 1))
        tally.expect(
            ins(compose(u, v), j) == compose(ins(u, j), ins(v, 0)),
            f"insertion of a product, u={u}, v={v}, j={j}",
        )
        if j:
            shifted = left_mul(transposition(j, n + 1, n + 1), embed(u, n + 1))
            tally.expect(ins(u, j) == shifted, f"insertion as a transposition, u={u}, j={j}")
        tally.expect(delete(ins(u, j)) == u, f"delete after insert, u={u}, j={j}")
        tally.cases += 1

    # images of the insertion maps partition Sym(n + 1)
    images: dict[Permutation, int] = {}
    for row in lex_permutations(4):
        g = from_row(row)
        for j in range(5):
            x = ins(g, j)
            tally.expect(x not in images, f"ins_{j}({g}) collides with ins_{images.get(x)}")
            tally.expect(delete(x) == g, f"delete after ins_{j} on {g}")
            images[x] = j
        tally.cases += 1
    tally.expect(len(images) == factorial(5), "insertion images cover Sym(5)")


def _deletion_shift(runtime: Runtime, tally: _Tally) -> None:
    """
    radius(v) - radius(del v) on Γ¹ is 1 exactly when v moves n + 1 and 0 when
    it fixes n + 1; (1, n + 1) has radius 1 and deletes to the identity. The
    shift is also unchanged by right multiplication with g fixing n + 1.
    """
    rng = _rng(runtime)
    for _ in range(_RANDOM_CASES):
        n = int(rng.integers(2, 10))
        big, small = GraphSpec(1, n + 1), GraphSpec(1, n)
        v = _random_permutation(rng, n + 1)
        g = embed(_random_permutation(rng, n), n + 1)
        vg = compose(v, g)
        shift = _radius(big, v) - _radius(small, delete(v))
        shifted = _radius(big, vg) - _radius(small, delete(vg))
        tally.expect(shift == shifted, f"shift differs for v={v}, g={g}")
        tally.expect(shift == int(v(n + 1) != n + 1), f"shift {shift} for v={v}")
        tally.cases += 1


# --------------------------------------------------------------- spheres


def _spheres_elements(k: int, degrees: range, runtime: Runtime, tally: _Tally) -> None:
    for n in degrees:
        spec = GraphSpec(k, n)
        try:
            table = runtime.oracle.element_bfs(spec).by_cycle_type()
        except CaystirError as e:
            tally.fail(f"{spec}: {e}")
            continue
        for t, d in table.distances.items():
            tally.expect(type_radius(spec, t).radius == d, f"{spec}: {t} at BFS distance {d}")
        tally.expect(len(table) == sum(1 for _ in _classes(spec)), f"{spec}: class coverage")
        tally.expect(table.max_distance == diameter(spec), f"{spec}: diameter")
        tally.cases += spec.order


def _spheres_classes(k: int, n: int, runtime: Runtime, tally: _Tally) -> None:
    spec = GraphSpec(k, n)
    table = runtime.oracle.class_bfs(spec)
    for t, d in table.distances.items():
        tally.expect(type_radius(spec, t).radius == d, f"{spec}: {t} at BFS distance {d}")
    tally.expect(len(table) == sum(1 for _ in _classes(spec)), f"{spec}: class coverage")
    tally.expect(table.max_distance == diameter(spec), f"{spec}: diameter")
    tally.cases += len(table)


def _non_isometry(runtime: Runtime, tally: _Tally) -> None:
    spec = GraphSpec(3, 6)
    table = runtime.oracle.element_bfs(spec)
    g = parse_permutation("(1 2 3 4 5)", degree=6)
    tally.expect(table[g] == 4, f"{g} at BFS distance {table[g]}")  # noqa: PLR2004
    closed_form = assign_deficit(spec, 4, in_h=False).radius
    tally.expect(closed_form != table[g], "large-n sphere rule unexpectedly holds at n=6")
    tally.cases += spec.order


# -------------------------------------------------------------- counting


def _ig_recursion(runtime: Runtime, tally: _Tally) -> None:
    oracle = runtime.oracle
    for n in range(3, 9):
        for t in partitions_of(n - 1):
            small = representative(t)
            g = embed(small, n)
            for r in range(2 * n + 1):
                expected = oracle.i_g_direct(n - 1, r, small) + (n - 1) * oracle.i_g_direct(
                    n - 1, r - 1, small
                )
                tally.expect(oracle.i_g_direct(n, r, g) == expected, f"I at n={n}, r={r}, {t}")
            tally.cases += 1


def _phi_against_oracle(
    k: int, degrees: range, first_radius: int, runtime: Runtime, tally: _Tally
) -> None:
    for n in degrees:
        spec = GraphSpec(k, n)
        for t in _classes(spec, max_support=_SMALL_SUPPORT):
            profile = runtime.oracle.phi_direct_profile(spec, representative(t))
            for r in range(first_radius, diameter(spec) + 1):
                value = runtime.engine.phi(PhiQuery(spec, r, t)).value
                direct = profile[min(r, len(profile) - 1)]
                tally.expect(value == direct, f"{spec}: phi({r}, {t}) = {value}, BFS {direct}")
            tally.cases += 1


def _ig_phi_bridge(runtime: Runtime, tally: _Tally) -> None:
    oracle = runtime.oracle
    for n in range(5, 9):
        spec = GraphSpec(2, n)
        for t in _classes(spec):
            g = representative(t)
            profile = oracle.phi_direct_profile(spec, g)
            for r in range(2, diameter(spec) + 1):
                bridge = oracle.i_g_direct(n, 2 * r, g)
                direct = profile[min(r, len(profile) - 1)]
                tally.expect(bridge == direct, f"n={n}, r={r}, {t}: I={bridge}, phi={direct}")
            tally.cases += 1


def _phi_large_k(runtime: Runtime, tally: _Tally) -> None:
    engine = runtime.engine
    for k in (3, 4, 5):
        for n in range(4 * k + 1, 31):
            spec = GraphSpec(k, n)
            top = diameter(spec)
            centre = CycleType.identity(n)
            for r in range(3, top + 2):
                value = engine.phi(PhiQuery(spec, r, centre)).value
                tally.expect(value == ball_size(spec, r), f"{spec}: phi({r}, e) vs ball")
            for t in _classes(spec, max_support=_SMALL_SUPPORT):
                for r in (top, top + 1):
                    value = engine.phi(PhiQuery(spec, r, t)).value
                    tally.expect(value == spec.order, f"{spec}: saturation of {t} at r={r}")
                tally.cases += 1

    for t in _classes(GraphSpec(3, _SMALL_SUPPORT)):
        if t.is_identity:
            continue
        if t.parity is Parity.EVEN:
            function = engine.stirling_for(t, SeedKind.I_ROW)
        else:
            function = engine.stirling_for(t, SeedKind.CROSS_ROW, offset=3)
        for n in range(13, 33):
            tally.expect(function.check_recurrence(n), f"recurrence of {t} at n={n}")

    rng = _rng(runtime)
    spec = GraphSpec(3, 7)
    for t in _classes(spec):
        g = random_of_type(t, rng)
        profile = runtime.oracle.phi_direct_profile(spec, g)
        inverted = runtime.oracle.phi_direct_profile(spec, inverse(g))
        tally.expect(inverted == profile, f"inverse of {g}")
        for _ in range(20):
            x = _random_permutation(rng, spec.n)
            tally.expect(
                runtime.oracle.phi_direct_profile(spec, conjugate(g, x)) == profile,
                f"conjugate of {g} by {x}",
            )
        tally.cases += 1


def _cross_row_continuation(runtime: Runtime, tally: _Tally) -> None:
    for t in _classes(GraphSpec(1, _SMALL_SUPPORT)):
        if t.is_identity:
            continue
        for offset in (1, 2, 3):
            function = runtime.engine.stirling_for(t, SeedKind.CROSS_ROW, offset)
            for n in range(max(t.support_size, 2) + 1, 10):
                g = representative(t, n)
                for a in range(2 * n + offset):
                    direct = runtime.oracle.cross_direct(n, a, a - offset, g)
                    value = function.eval_r(n, a)
                    tally.expect(value == direct, f"K of {t} at n={n}, a={a}, d={offset}")
            tally.cases += 1


def _reconstruction_k1(runtime: Runtime, tally: _Tally) -> None:
    for n in range(5, 9):
        spec = GraphSpec(1, n)
        three_cycle = CycleType.from_partition([3]).with_degree(n)
        for r in range(n):
            result = runtime.engine.reconstruction_number(spec, r)
            tally.expect(three_cycle in result.argmax, f"n={n}, r={r}: argmax {result.argmax}")
            tally.cases += 1


# ---------------------------------------------------------- factorization


def _random_cycle_type(rng: np.random.Generator, n: int) -> CycleType:
    lengths: list[int] = []
    remaining = n
    while remaining:
        length = int(rng.integers(1, remaining + 1))
        lengths.append(length)
        remaining -= length
    return CycleType.from_partition(lengths)


def _check_geodesic(spec: GraphSpec, g: Permutation, tally: _Tally) -> None:
    try:
        factors = geodesic_factorization(spec, g)
    except CaystirError as e:
        tally.fail(f"{spec}: {g}: {e}")
        return
    product = reduce(compose, factors, identity(spec.n))
    tally.expect(product == g, f"{spec}: product of factors of {g}")
    tally.expect(len(factors) == _radius(spec, g), f"{spec}: length for {g}")


def _factorization(runtime: Runtime, tally: _Tally) -> None:
    rng = _rng(runtime)
    for _ in range(_TWO_FACTOR_CASES):
        k = int(rng.integers(1, 9))
        t = int(rng.integers(1, k + 1))
        lengths: list[int] = []
        remaining = 2 * t
        while remaining:
            d = int(rng.integers(1, remaining + 1))
            lengths.append(d + 1)
            remaining -= d
        floor = max(2 * k, sum(lengths) + 2 * (k - t))
        n = int(rng.integers(floor, _MAX_DEGREE + 1))
        g = random_of_type(CycleType.from_partition(lengths).with_degree(n), rng)
        try:
            x, y = factor_two_k_transpositions(g, n, k)
        except CaystirError as e:
            tally.fail(f"k={k}: {g}: {e}")
            continue
        tally.expect(is_k_transposition(x, k) and is_k_transposition(y, k), f"k={k}: {x}, {y}")
        tally.expect(compose(x, y) == g, f"k={k}: {x}·{y} != {g}")
        tally.cases += 1

    for k, degrees in ((1, range(2, 9)), (2, range(5, 9))):
        for n in degrees:
            spec = GraphSpec(k, n)
            for t in _classes(spec):
                _check_geodesic(spec, representative(t), tally)
                tally.cases += 1

    for _ in range(_GEODESIC_CASES):
        k = int(rng.integers(3, 6))
        spec = GraphSpec(k, int(rng.integers(4 * k, _MAX_DEGREE + 1)))
        t = _random_cycle_type(rng, spec.n)
        while not spec.admits(t):
            t = _random_cycle_type(rng, spec.n)
        _check_geodesic(spec, random_of_type(t, rng), tally)
        tally.cases += 1


SUITES: dict[str, Suite] = {
    "stirling-classical": _stirling_classical,
    "insertion-identities": _insertion_identities,
    "deletion-shift": _deletion_shift,
    "spheres-k1": partial(_spheres_elements, 1, range(2, 9)),
    "spheres-k2": partial(_spheres_elements, 2, range(5, 9)),
    "spheres-k3-n12": partial(_spheres_classes, 3, 12),
    "spheres-k3-n13": partial(_spheres_classes, 3, 13),
    "spheres-k3-n14": partial(_spheres_classes, 3, 14),
    "spheres-k4-n16": partial(_spheres_classes, 4, 16),
    "ig-recursion": _ig_recursion,
    "phi-k1": partial(_phi_against_oracle, 1, range(2, 9), 0),
    "phi-k2": partial(_phi_against_oracle, 2, range(5, 9), 2),
    "ig-phi-bridge": _ig_phi_bridge,
    "phi-large-k": _phi_large_k,
    "cross-row": _cross_row_continuation,
    "factorization": _factorization,
    "reconstruction-k1": _reconstruction_k1,
    "non-isometry-k3-n6": _non_isometry,
}


def run_suite(name: str, runtime: Runtime) -> VerifyReport:
    """Run one suite and time it; errors raised inside a suite count as a failed check."""
    suite = SUITES[name]
    tally = _Tally()
    started = time.perf_counter()
    try:
        suite(runtime, tally)
    except CaystirError as e:
        logger.error("verify_suite_failed", suite=name, error=str(e))
        tally.fail(f"aborted: {e}")
    seconds = round(time.perf_counter() - started, 3)
    report = VerifyReport(
        suite=name,
        passed=tally.failed == 0,
        checks=tally.checks,
        cases=tally.cases,
        seconds=seconds,
        failures=tally.failures,
    )
    logger.info("verify_suite", suite=name, passed=report.passed, checks=report.checks)
    return report
