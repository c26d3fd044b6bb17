from math import factorial

import numpy as np
import pytest

from caystir.exceptions import OracleCapError, SeedInfeasibleError
from caystir.metric import GraphSpec, ball_size, diameter, type_radius
from caystir.oracle import (
    BruteForceOracle,
    ClassDistanceTable,
    SeedCache,
    seed_key,
    seed_threshold,
)
from caystir.perms import (
    CycleType,
    conjugate,
    identity,
    inverse,
    parse_cycle_type,
    parse_permutation,
    partitions_of,
    random_of_type,
    representative,
)
from caystir.perms.arrays import from_row
from caystir.schemas import SeedKind


def test_element_bfs_k1() -> None:
    table = BruteForceOracle().element_bfs(GraphSpec(1, 4))
    assert table.max_distance == 3
    assert table[identity(4)] == 0
    assert table[parse_permutation("(1 2 3 4)", degree=4)] == 3
    assert len(table) == 24


def test_element_bfs_alternating() -> None:
    table = BruteForceOracle().element_bfs(GraphSpec(2, 5))
    assert len(table) == 60
    assert table.max_distance == 2


def test_element_bfs_cap() -> None:
    with pytest.raises(OracleCapError, match="element cap"):
        BruteForceOracle(element_cap=100).element_bfs(GraphSpec(1, 6))


@pytest.mark.parametrize(("k", "n"), [(1, 6), (2, 6), (2, 7), (3, 7), (1, 8)])
def test_element_and_class_bfs_agree(k: int, n: int) -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(k, n)
    assert oracle.element_bfs(spec).by_cycle_type().distances == oracle.class_bfs(spec).distances


@pytest.mark.parametrize(("k", "n"), [(1, 8), (2, 5), (2, 8)])
def test_element_bfs_matches_closed_form(k: int, n: int) -> None:
    spec = GraphSpec(k, n)
    table = BruteForceOracle().element_bfs(spec).by_cycle_type()
    for t, d in table.distances.items():
        assert type_radius(spec, t).radius == d
    assert table.max_distance == diameter(spec)


def test_element_bfs_translation_invariance(rng: np.random.Generator) -> None:
    spec = GraphSpec(3, 7)
    table = BruteForceOracle().element_bfs(spec)
    for _ in range(50):
        g, x = (from_row(rng.permutation(7)) for _ in range(2))
        assert table[conjugate(g, x)] == table[g]
        assert table[inverse(g)] == table[g]


def test_non_isometry_below_four_k() -> None:
    table = BruteForceOracle().element_bfs(GraphSpec(3, 6))
    assert table[parse_permutation("(1 2 3 4 5)", degree=6)] == 4


def test_class_bfs_k3_n12() -> None:
    spec = GraphSpec(3, 12)
    table = BruteForceOracle().class_bfs(spec)
    assert len(table) == 77
    assert table[CycleType.identity(12)] == 0
    assert table[parse_cycle_type("2^1", degree=12)] == 3
    assert all(type_radius(spec, t).radius == d for t, d in table.distances.items())
    assert table.max_distance == diameter(spec)


@pytest.mark.slow
@pytest.mark.parametrize(("k", "n"), [(3, 13), (3, 14), (4, 16)])
def test_class_bfs_large(k: int, n: int) -> None:
    spec = GraphSpec(k, n)
    table = BruteForceOracle().class_bfs(spec)
    assert all(type_radius(spec, t).radius == d for t, d in table.distances.items())
    assert table.max_distance == diameter(spec)


def test_class_bfs_budget() -> None:
    with pytest.raises(OracleCapError, match="budget"):
        BruteForceOracle(class_budget=1000).class_bfs(GraphSpec(3, 12))


def test_class_table_document_round_trip() -> None:
    table = BruteForceOracle().class_bfs(GraphSpec(2, 6))
    restored = ClassDistanceTable.from_document(table.to_document())
    assert restored == table


def test_phi_direct_small_cases() -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(1, 3)
    assert oracle.phi_direct(spec, 1, parse_permutation("(1 2)", degree=3)) == 2
    assert oracle.phi_direct(spec, 0, parse_permutation("(1 2)", degree=3)) == 0
    assert oracle.phi_direct(spec, -1, identity(3)) == 0


@pytest.mark.parametrize(("k", "n"), [(1, 6), (2, 6), (3, 7)])
def test_phi_direct_of_identity_is_ball_size(k: int, n: int) -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(k, n)
    table = oracle.element_bfs(spec)
    for r in range(table.max_distance + 2):
        expected = sum(1 for _, d in table.items() if d <= r)
        assert oracle.phi_direct(spec, r, identity(n)) == expected


def test_phi_direct_saturates() -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(2, 7)
    for t in partitions_of(7):
        if spec.admits(t):
            assert oracle.phi_direct(spec, diameter(spec), representative(t)) == spec.order


def test_phi_direct_analytic_membership_matches_bfs() -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(2, 6)
    for t in partitions_of(6):
        if spec.admits(t):
            g = representative(t)
            assert oracle.phi_direct_profile(spec, g, analytic=True) == oracle.phi_direct_profile(
                spec, g
            )
    assert oracle.phi_direct(spec, 2, identity(6), analytic=True) == ball_size(spec, 2)


def test_phi_direct_symmetry(rng: np.random.Generator) -> None:
    oracle = BruteForceOracle()
    spec = GraphSpec(3, 7)
    for t in [parse_cycle_type("3^1 2^1", degree=7), parse_cycle_type("4^1", degree=7)]:
        g = random_of_type(t, rng)
        profile = oracle.phi_direct_profile(spec, g)
        assert oracle.phi_direct_profile(spec, inverse(g)) == profile
        for _ in range(20):
            x = from_row(rng.permutation(7))
            assert oracle.phi_direct_profile(spec, conjugate(g, x)) == profile


def test_i_g_direct_examples() -> None:
    oracle = BruteForceOracle()
    swap = parse_permutation("(1 2)", degree=2)
    assert oracle.i_g_direct(2, 0, swap) == 0
    assert oracle.i_g_direct(2, 1, swap) == 1
    assert [oracle.i_g_direct(4, r, identity(4)) for r in range(4)] == [1, 6, 12, 12]
    g = parse_permutation("(1 2 3)", degree=6)
    for r in (5, 6, 9):
        assert oracle.i_g_direct(6, r, g) == factorial(6) // 2


def test_i_g_recursion() -> None:
    oracle = BruteForceOracle()
    for n in range(3, 8):
        for t in partitions_of(n - 1):
            small = representative(t)
            g = representative(t, n)
            for r in range(2 * n + 1):
                expected = oracle.i_g_direct(n - 1, r, small) + (n - 1) * oracle.i_g_direct(
                    n - 1, r - 1, small
                )
                assert oracle.i_g_direct(n, r, g) == expected


def test_i_g_bridges_to_phi_for_k2() -> None:
    oracle = BruteForceOracle()
    for n in (5, 6, 7):
        spec = GraphSpec(2, n)
        for t in partitions_of(n):
            if not spec.admits(t):
                continue
            g = representative(t)
            for r in range(2, diameter(spec) + 1):
                assert oracle.i_g_direct(n, 2 * r, g) == oracle.phi_direct(spec, r, g)


def test_cross_direct_is_symmetric() -> None:
    oracle = BruteForceOracle()
    g = parse_permutation("(1 2)(3 4 5)", degree=6)
    for a in range(6):
        for b in range(6):
            assert oracle.cross_direct(6, a, b, g) == oracle.cross_direct(6, b, a, g)


def test_enumeration_cap() -> None:
    with pytest.raises(OracleCapError, match="enumeration cap"):
        BruteForceOracle(enumeration_cap=5).i_g_direct(6, 2, identity(6))


def test_seed_row_examples(oracle: BruteForceOracle) -> None:
    row = oracle.seed_row(CycleType.identity(2), SeedKind.I_ROW)
    assert row.t == 2
    assert row.row == {0: 1, 1: 1, 2: 1}
    assert row.tail == 1

    row = oracle.seed_row(parse_cycle_type("2^1"), SeedKind.PHI_K1)
    assert row.t == 2
    assert row.row == {0: 0, 1: 2}
    assert row.tail == 2


def test_seed_rows_increase(oracle: BruteForceOracle) -> None:
    for t in partitions_of(5):
        values = list(oracle.seed_row(t, SeedKind.PHI_K1).row.values())
        assert values == sorted(values)


def test_seed_row_threshold_and_key() -> None:
    t = parse_cycle_type("1^4 2^1 3^1")
    assert seed_threshold(t) == 5
    assert seed_threshold(CycleType.identity(7)) == 2
    assert seed_key(t, SeedKind.I_ROW) == "i-row__2^1_3^1"
    assert seed_key(t, SeedKind.CROSS_ROW, 3) == "cross-row+3__2^1_3^1"


def test_seed_row_cache(oracle: BruteForceOracle, seed_cache: SeedCache) -> None:
    t = parse_cycle_type("3^1")
    computed = oracle.seed_row(t, SeedKind.I_ROW)
    assert seed_cache.keys() == ["i-row__3^1"]
    offline = BruteForceOracle(enumeration_cap=2, cache=seed_cache)
    assert offline.seed_row(t, SeedKind.I_ROW) == computed
    assert seed_cache.clear() == 1
    assert seed_cache.keys() == []


def test_seed_row_infeasible() -> None:
    with pytest.raises(SeedInfeasibleError, match="enumeration cap"):
        BruteForceOracle(enumeration_cap=3).seed_row(parse_cycle_type("4^1"), SeedKind.I_ROW)


def test_cross_row_tail_tracks_parity(oracle: BruteForceOracle) -> None:
    odd = oracle.seed_row(parse_cycle_type("2^1"), SeedKind.CROSS_ROW, 3)
    assert odd.tail == 1
    even = oracle.seed_row(parse_cycle_type("3^1"), SeedKind.CROSS_ROW, 3)
    assert even.tail == 0
