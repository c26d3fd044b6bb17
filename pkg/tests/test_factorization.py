from functools import reduce

import numpy as np
import pytest

from caystir.exceptions import FactorizationError
from caystir.metric import (
    GraphSpec,
    factor_two_k_transpositions,
    geodesic_factorization,
    sphere_radius,
    splitting_transpositions,
)
from caystir.perms import (
    CycleType,
    Permutation,
    compose,
    cycle_count,
    identity,
    is_k_transposition,
    parse_permutation,
    partitions_of,
    random_of_type,
    transposition,
)


def p(text: str, n: int) -> Permutation:
    return parse_permutation(text, degree=n)


def product(factors: list[Permutation], n: int) -> Permutation:
    return reduce(compose, factors, identity(n))


@pytest.mark.parametrize(
    ("g", "n", "k", "x", "y"),
    [
        ("(1 2 3 4)(5 6)", 8, 2, "(1 2)(3 4)", "(1 3)(5 6)"),
        ("(1 5 2 3 4)", 5, 2, "(1 2)(3 4)", "(1 3)(2 5)"),
    ],
)
def test_two_factor_examples(g: str, n: int, k: int, x: str, y: str) -> None:
    assert factor_two_k_transpositions(p(g, n), n, k) == (p(x, n), p(y, n))


def test_two_factor_pads_with_fixed_points() -> None:
    g = p("(1 2 3)", 9)
    x, y = factor_two_k_transpositions(g, 9, 3)
    assert is_k_transposition(x, 3)
    assert is_k_transposition(y, 3)
    assert compose(x, y) == g


def test_two_factor_embeds_smaller_degree() -> None:
    x, y = factor_two_k_transpositions(p("(1 2 3)", 3), 6, 2)
    assert compose(x, y) == p("(1 2 3)", 6)


@pytest.mark.parametrize(
    ("g", "n", "k"),
    [("()", 4, 1), ("(1 2 3 4 5)", 5, 1), ("(1 2)", 4, 1), ("(1 2 3)", 4, 2)],
)
def test_two_factor_preconditions(g: str, n: int, k: int) -> None:
    with pytest.raises(FactorizationError):
        factor_two_k_transpositions(p(g, n), n, k)


def test_two_factor_random_cases(rng: np.random.Generator) -> None:
    for _ in range(200):
        k = int(rng.integers(1, 9))
        t = int(rng.integers(1, k + 1))
        lengths: list[int] = []
        remaining = 2 * t
        while remaining:
            d = int(rng.integers(1, remaining + 1))
            lengths.append(d + 1)
            remaining -= d
        n = int(rng.integers(max(2 * k, sum(lengths) + 2 * (k - t)), 41))
        g = random_of_type(CycleType.from_partition(lengths).with_degree(n), rng)
        x, y = factor_two_k_transpositions(g, n, k)
        assert is_k_transposition(x, k)
        assert is_k_transposition(y, k)
        assert compose(x, y) == g


def test_splitting_transpositions_lower_the_deficit() -> None:
    g = p("(1 2 3 4)(5 6 7)(8 9)", 10)
    for a, b in splitting_transpositions(g):
        assert cycle_count(compose(g, transposition(a, b, 10))) == cycle_count(g) + 1


def test_geodesic_examples() -> None:
    spec = GraphSpec(3, 12)
    factors = geodesic_factorization(spec, p("(1 2)", 12))
    assert len(factors) == 3
    assert all(is_k_transposition(h, 3) for h in factors)
    assert product(factors, 12) == p("(1 2)", 12)
    assert geodesic_factorization(spec, identity(12)) == []


def test_geodesic_k1_is_a_star_product() -> None:
    assert geodesic_factorization(GraphSpec(1, 5), p("(1 2 3)", 5)) == [
        p("(1 2)", 5),
        p("(1 3)", 5),
    ]


def test_geodesic_rejects_non_vertices() -> None:
    with pytest.raises(FactorizationError, match="not a vertex"):
        geodesic_factorization(GraphSpec(2, 6), p("(1 2)", 6))


@pytest.mark.parametrize(("k", "n"), [(1, 6), (2, 5), (2, 8), (3, 12), (3, 13), (4, 16), (5, 20)])
def test_geodesic_on_every_class(k: int, n: int) -> None:
    spec = GraphSpec(k, n)
    for t in partitions_of(n):
        if not spec.admits(t):
            continue
        g = random_of_type(t, 11)
        factors = geodesic_factorization(spec, g)
        assert len(factors) == sphere_radius(spec, g).radius
        assert product(factors, n) == g


def test_geodesic_random_large_degrees(rng: np.random.Generator) -> None:
    for _ in range(100):
        k = int(rng.integers(3, 6))
        spec = GraphSpec(k, int(rng.integers(4 * k, 41)))
        g = Permutation(tuple(int(v) + 1 for v in rng.permutation(spec.n)))
        if not spec.admits(CycleType.from_partition(len(c) for c in g.cycles)):
            continue
        factors = geodesic_factorization(spec, g)
        assert len(factors) == sphere_radius(spec, g).radius
        assert product(factors, spec.n) == g
