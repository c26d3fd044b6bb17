from math import factorial

import numpy as np
import pytest

from caystir.exceptions import OracleCapError, PermutationError
from caystir.perms import (
    CycleType,
    Parity,
    Permutation,
    class_size,
    compose,
    conjugate,
    cycle_count,
    cycle_type,
    delete,
    embed,
    enumerate_class,
    identity,
    ins,
    inverse,
    is_k_transposition,
    left_mul,
    materialize_class,
    parity,
    parse_cycle_type,
    parse_permutation,
    partitions_of,
    random_of_type,
    support_size,
    transposition,
)
from caystir.perms.arrays import from_row


def p(text: str, n: int) -> Permutation:
    return parse_permutation(text, degree=n)


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return from_row(rng.permutation(n))


@pytest.mark.parametrize(
    ("u", "v", "expected", "n"),
    [
        ("(1 2 3)", "(2 3)", "(1 3)", 3),
        ("(1 2)(4 5)", "(1 3)(4 5)", "(1 2 3)", 5),
        ("(1 4 2)", "()", "(1 4 2)", 4),
    ],
)
def test_compose_applies_left_factor_first(u: str, v: str, expected: str, n: int) -> None:
    assert compose(p(u, n), p(v, n)) == p(expected, n)
    assert p(u, n) * p(v, n) == p(expected, n)


def test_compose_degree_mismatch() -> None:
    with pytest.raises(PermutationError, match="degree mismatch"):
        compose(identity(3), identity(4))


def test_inverse_and_conjugate() -> None:
    assert inverse(identity(5)) == identity(5)
    assert inverse(p("(1 2 3)", 3)) == p("(1 3 2)", 3)
    assert conjugate(p("(1 2)", 3), p("(2 3)", 3)) == p("(1 3)", 3)


def test_group_axioms_on_random_triples(rng: np.random.Generator) -> None:
    for _ in range(200):
        n = int(rng.integers(1, 10))
        u, v, w = (random_permutation(rng, n) for _ in range(3))
        assert compose(compose(u, v), w) == compose(u, compose(v, w))
        assert compose(u, inverse(u)) == identity(n)
        assert parity(compose(u, v)) is parity(u) ^ parity(v)
        assert cycle_type(conjugate(u, v)) == cycle_type(u)


def test_transposition_changes_cycle_count_by_one(rng: np.random.Generator) -> None:
    for _ in range(200):
        n = int(rng.integers(2, 10))
        g = random_permutation(rng, n)
        i, j = (int(x) + 1 for x in rng.choice(n, size=2, replace=False))
        assert abs(cycle_count(compose(g, transposition(i, j, n))) - cycle_count(g)) == 1


def test_cycle_statistics() -> None:
    g = p("(1 2)(3 4)", 5)
    assert cycle_count(g) == 3
    assert cycle_type(g) == CycleType.from_counts({1: 1, 2: 2})
    assert parity(g) is Parity.EVEN
    assert support_size(g) == 4
    assert cycle_count(identity(7)) == 7
    five = p("(1 5 2 3 4)", 5)
    assert cycle_count(five) == 1
    assert parity(five) is Parity.EVEN


def test_is_k_transposition() -> None:
    assert is_k_transposition(p("(1 2)(3 4)", 5), 2)
    assert not is_k_transposition(p("(1 2 3)", 3), 1)
    assert not is_k_transposition(identity(6), 1)
    assert not is_k_transposition(p("(1 2)", 3), 2)
    with pytest.raises(PermutationError, match="at least 1"):
        is_k_transposition(identity(4), 0)


def test_embed() -> None:
    g = embed(p("(1 2)", 2), 4)
    assert g == p("(1 2)", 4)
    assert cycle_count(g) == 3
    assert support_size(g) == 2
    assert embed(g, 4) == g
    with pytest.raises(PermutationError, match="cannot embed"):
        embed(g, 3)


@pytest.mark.parametrize(
    ("g", "j", "expected"),
    [
        ("(2 4)", 2, "(2 5 4)"),
        ("(2 4)", 0, "(2 4)"),
        ("(1 4)", 2, "(2 5)(1 4)"),
    ],
)
def test_insertion(g: str, j: int, expected: str) -> None:
    inserted = ins(p(g, 4), j)
    assert inserted == p(expected, 5)
    assert delete(inserted) == p(g, 4)


def test_insertion_range() -> None:
    with pytest.raises(PermutationError, match="outside"):
        ins(identity(3), 4)


def test_deletion() -> None:
    assert delete(p("(2 5 4)", 5)) == p("(2 4)", 4)
    assert delete(identity(6)) == identity(5)
    assert delete(p("(1 5)", 5)) == identity(4)
    with pytest.raises(PermutationError, match="degree-1"):
        delete(identity(1))


def test_insertion_identities(rng: np.random.Generator) -> None:
    for _ in range(300):
        n = int(rng.integers(1, 9))
        u, v = random_permutation(rng, n), random_permutation(rng, n)
        j = int(rng.integers(0, n + 1))
        assert ins(compose(u, v), j) == compose(ins(u, j), ins(v, 0))
        if j:
            assert ins(u, j) == left_mul(transposition(j, n + 1, n + 1), embed(u, n + 1))


def test_deletion_drops_a_cycle_only_at_a_fixed_top() -> None:
    for g in enumerate_class(CycleType.from_partition([2, 1, 1])):
        expected = cycle_count(g) - 1 if g(4) == 4 else cycle_count(g)
        assert cycle_count(delete(g)) == expected


def test_class_size() -> None:
    assert class_size(CycleType.k_transposition(6, 1)) == 15
    assert class_size(CycleType.from_counts({1: 1, 2: 2})) == 15
    assert class_size(CycleType.identity(9)) == 1
    for n in range(1, 13):
        assert sum(class_size(t) for t in partitions_of(n)) == factorial(n)


def test_partitions_of() -> None:
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(12)) == 77
    assert len(set(partitions_of(8))) == len(partitions_of(8))


def test_enumerate_class_yields_the_whole_class() -> None:
    t = CycleType.from_counts({1: 1, 2: 2})
    members = list(enumerate_class(t))
    assert len(members) == 15
    assert len(set(members)) == 15
    assert all(cycle_type(g) == t for g in members)


def test_enumerate_class_ranges_partition_the_stream() -> None:
    t = parse_cycle_type("1^2 3^1 2^1", degree=7)
    whole = list(enumerate_class(t))
    pieces = list(enumerate_class(t, 0, 100)) + list(enumerate_class(t, 100))
    assert pieces == whole


def test_materialize_class_cap() -> None:
    with pytest.raises(OracleCapError, match="materialization cap"):
        materialize_class(CycleType.k_transposition(12, 2), cap=100)


def test_random_of_type_is_seeded() -> None:
    t = parse_cycle_type("2^2 3^1", degree=9)
    first = random_of_type(t, 7)
    assert cycle_type(first) == t
    assert random_of_type(t, 7) == first


def test_cycle_type_helpers() -> None:
    t = parse_cycle_type("1^6 2^3")
    assert t.degree == 12
    assert t.support_size == 6
    assert t.deficit == 3
    assert t.parity is Parity.ODD
    assert t.is_k_transposition(3)
    assert t.support_key == "2^3"
    assert str(t) == "1^6 2^3"
    assert t.with_degree(8) == parse_cycle_type("1^2 2^3")
    with pytest.raises(PermutationError, match="does not fit"):
        t.with_degree(5)
