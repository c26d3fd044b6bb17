from math import factorial

import pytest

from caystir.exceptions import AnalyticRangeError, GraphSpecError, PermutationError
from caystir.metric import (
    GraphSpec,
    VertexGroup,
    ball_size,
    diameter,
    distance,
    radius_table,
    sphere_radius,
    sphere_size,
    sphere_sizes,
    type_radius,
)
from caystir.perms import (
    CycleType,
    compose,
    delete,
    parse_cycle_type,
    parse_permutation,
    partitions_of,
    transposition,
)
from caystir.perms.arrays import from_row, lex_permutations


@pytest.mark.parametrize(("k", "n"), [(0, 4), (3, 5), (2, 4)])
def test_graph_spec_rejects(k: int, n: int) -> None:
    with pytest.raises(GraphSpecError):
        GraphSpec(k, n)


def test_graph_spec_properties() -> None:
    spec = GraphSpec(2, 6)
    assert spec.group is VertexGroup.ALT
    assert spec.order == factorial(6) // 2
    assert spec.generator_count == 45
    assert GraphSpec(3, 12).group is VertexGroup.SYM
    assert not GraphSpec(3, 11).analytic_valid
    assert GraphSpec(3, 12).analytic_valid


@pytest.mark.parametrize(
    ("k", "n", "g", "expected"),
    [
        (3, 12, "(1 2)", 3),
        (1, 5, "(1 2 3)", 2),
        (2, 5, "(1 2 3)", 2),
        (2, 5, "(1 2)(3 4)", 1),
        (2, 8, "(1 2 3 4)(5 6)", 2),
        (2, 8, "(1 2 3 4 5 6 7)", 3),
        (3, 12, "(1 2)(3 4)(5 6)", 1),
        (3, 12, "(1 2 3)", 2),
        (3, 12, "(1 2 3 4 5 6 7 8 9 10 11 12)", 5),
        (4, 16, "(1 2 3)", 2),
        (4, 16, "(1 2)(3 4)(5 6)(7 8)", 1),
    ],
)
def test_sphere_radius(k: int, n: int, g: str, expected: int) -> None:
    assert sphere_radius(GraphSpec(k, n), parse_permutation(g, degree=n)).radius == expected


def test_odd_permutations_are_not_vertices_for_even_k() -> None:
    assignment = sphere_radius(GraphSpec(2, 5), parse_permutation("(1 2)", degree=5))
    assert not assignment.is_vertex
    assert str(assignment) == "not-a-vertex"


@pytest.mark.parametrize(
    ("k", "n", "g", "radius", "clause"),
    [
        (1, 4, "(1 2 3)", 2, "k=1: radius equals the cycle deficit"),
        (2, 7, "(1 2 3)", 2, "k=2: 3-cycle"),
        (2, 9, "(1 2)(3 4)", 1, "generator class H"),
        (4, 16, "(1 2 3)", 2, "k even: deficit at most 2k outside H"),
        (4, 16, "(1 2 3 4 5 6 7 8 9 10 11)", 3, "k even: ceil(deficit / k)"),
        (3, 12, "(1 2 3)", 2, "k odd, even deficit: 2 ceil(deficit / 2k)"),
        (3, 12, "(1 2)", 3, "k odd, odd deficit at most 3k outside H"),
        (
            3,
            12,
            "(1 2 3 4 5 6 7 8 9 10 11 12)",
            5,
            "k odd, odd deficit: 2 ceil((deficit - k) / 2k) + 1",
        ),
    ],
)
def test_clause_names_the_rule(k: int, n: int, g: str, radius: int, clause: str) -> None:
    assignment = sphere_radius(GraphSpec(k, n), parse_permutation(g, degree=n))
    assert assignment.radius == radius
    assert assignment.clause == clause


def test_analytic_range() -> None:
    with pytest.raises(AnalyticRangeError, match="use the oracle"):
        sphere_radius(GraphSpec(3, 6), parse_permutation("(1 2)", degree=6))


def test_degree_mismatch() -> None:
    with pytest.raises(PermutationError, match="degree 4"):
        sphere_radius(GraphSpec(1, 5), parse_permutation("(1 2)", degree=4))


def test_distance_is_left_invariant() -> None:
    spec = GraphSpec(3, 12)
    u = parse_permutation("(1 2 3 4)(5 6)", degree=12)
    v = parse_permutation("(2 7 9)", degree=12)
    x = parse_permutation("(1 12 5)(3 8)", degree=12)
    assert distance(spec, u, v) == distance(spec, compose(x, u), compose(x, v))


def test_sphere_sizes_k2_n5() -> None:
    assert sphere_sizes(GraphSpec(2, 5)) == {0: 1, 1: 15, 2: 44}


@pytest.mark.parametrize(
    ("k", "n", "expected"),
    [(1, 6, 5), (2, 5, 2), (2, 8, 3), (3, 12, 5), (3, 13, 5), (3, 14, 5), (4, 16, 4), (5, 20, 5)],
)
def test_diameter(k: int, n: int, expected: int) -> None:
    spec = GraphSpec(k, n)
    assert diameter(spec) == expected
    assert max(sphere_sizes(spec)) == expected


@pytest.mark.parametrize(("k", "n"), [(1, 7), (2, 9), (3, 12), (3, 15), (4, 17), (5, 21)])
def test_spheres_partition_the_group(k: int, n: int) -> None:
    spec = GraphSpec(k, n)
    assert sum(sphere_sizes(spec).values()) == spec.order
    top = diameter(spec)
    assert ball_size(spec, top) == spec.order
    assert ball_size(spec, top - 1) < spec.order
    assert sphere_size(spec, top + 1) == 0


def test_radius_table() -> None:
    assert radius_table(GraphSpec(1, 4)) == (0, 1, 2, 3)
    assert radius_table(GraphSpec(2, 5)) == (0, None, 2, None, 2)


def test_generators_sit_on_the_unit_sphere() -> None:
    for k, n in [(1, 4), (2, 6), (3, 12), (4, 16)]:
        spec = GraphSpec(k, n)
        assert type_radius(spec, spec.generator_type).radius == 1
        assert sphere_size(spec, 1) == spec.generator_count


def test_type_radius_is_a_class_function() -> None:
    spec = GraphSpec(3, 13)
    radii = {t: type_radius(spec, t).radius for t in partitions_of(13)}
    assert radii[CycleType.identity(13)] == 0
    assert radii[parse_cycle_type("2^1", degree=13)] == 3
    assert set(radii.values()) == {0, 1, 2, 3, 4, 5}


@pytest.mark.parametrize("n", range(2, 6))
def test_deletion_shift_is_one_exactly_when_the_top_point_moves(n: int) -> None:
    big, small = GraphSpec(1, n + 1), GraphSpec(1, n)
    top = transposition(1, n + 1, n + 1)
    assert sphere_radius(big, top).radius == 1
    assert sphere_radius(small, delete(top)).radius == 0
    for row in lex_permutations(n + 1):
        x = from_row(row)
        before = sphere_radius(big, x).radius
        after = sphere_radius(small, delete(x)).radius
        assert before is not None
        assert after is not None
        assert before - after == int(x(n + 1) != n + 1)
