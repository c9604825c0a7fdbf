import itertools

import pytest

from indegree_trees.errors import GroundSetMismatch, OrderError
from indegree_trees.lattice import (
    all_partitions,
    bell,
    coarsenings,
    covers,
    interval,
    mobius,
    mobius_from,
    mobius_product,
    refines,
    restricted_growth_strings,
    stirling2,
    stirling_identity_check,
)
from indegree_trees.model import SetPartition, parse_partition

from oracles import bell_triangle, mobius_brute, set_partitions, stirling2_brute


def P(text, n):
    return parse_partition(text, n)


def test_refines_examples():
    assert refines(P("8/7/6/5,9/3/2,4", 9), P("8/5,6,9/3,7/2,4", 9))
    s = P("8/7/6/5,9/3/2,4", 9)
    assert refines(s, s)
    assert not refines(P("2,3/4", 4), P("2/3,4", 4))


def test_refines_ground_mismatch():
    with pytest.raises(GroundSetMismatch):
        refines(SetPartition.finest(4), SetPartition.finest(5))


def test_all_partitions_small():
    assert [str(p) for p in all_partitions(3)] == ["2,3", "3/2"]
    assert list(all_partitions(1)) == [SetPartition(1, ())]


@pytest.mark.parametrize("n", range(1, 9))
def test_all_partitions_count_is_bell(n):
    parts = list(all_partitions(n))
    assert len(parts) == len(set(parts)) == bell_triangle(n - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_all_partitions_matches_recursive_oracle(n):
    ours = set(all_partitions(n))
    theirs = {SetPartition(n, tuple(tuple(b) for b in p)) for p in set_partitions(range(2, n + 1))}
    assert ours == theirs


def test_rgs_lexicographic():
    strings = list(restricted_growth_strings(4))
    assert strings == sorted(strings)
    assert len(strings) == 15


def test_coarsenings_examples():
    top = P("2,3,4", 4)
    assert list(coarsenings(top)) == [top]
    assert len(list(coarsenings(SetPartition.finest(4)))) == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_coarsenings_count_and_filter_oracle(n):
    parts = list(all_partitions(n))
    for s in parts:
        mine = list(coarsenings(s))
        assert len(mine) == len(set(mine)) == bell_triangle(len(s))
        if n <= 6:
            assert set(mine) == {p for p in parts if refines(s, p)}


def test_covers_example():
    got = {str(p) for p in covers(P("4,5/3/2", 5))}
    assert got == {"3,4,5/2", "3/2,4,5", "4,5/2,3"}
    assert list(covers(P("2,3,4", 4))) == []
    assert [str(p) for p in covers(P("3,4/2", 4))] == ["2,3,4"]


@pytest.mark.parametrize("n", range(2, 7))
def test_covers_count(n):
    for s in all_partitions(n):
        k = len(s)
        cs = list(covers(s))
        assert len(cs) == len(set(cs)) == k * (k - 1) // 2
        assert all(len(c) == k - 1 and refines(s, c) for c in cs)


def test_mobius_examples():
    s = P("4,5/3/2", 5)
    assert mobius(s, s) == 1
    assert mobius(SetPartition.finest(4), SetPartition.coarsest(4)) == 2
    for c in covers(s):
        assert mobius(s, c) == -1


def test_mobius_order_error():
    with pytest.raises(OrderError):
        mobius(SetPartition.coarsest(4), SetPartition.finest(4))


def test_mobius_against_definition_oracle():
    parts = list(all_partitions(5))
    for lo, hi in itertools.product(parts, repeat=2):
        if refines(lo, hi):
            assert mobius(lo, hi) == mobius_brute(lo, hi, refines, parts) == mobius_product(lo, hi)


@pytest.mark.parametrize("n", range(1, 7))
def test_mobius_rows_vanish(n):
    for s in all_partitions(n):
        mu = mobius_from(s)
        if len(s) > 1:
            assert sum(mu.values()) == 0
        assert all(v == mobius_product(s, t) for t, v in mu.items())


def test_interval():
    lo, hi = SetPartition.finest(5), P("4,5/2,3", 5)
    assert {str(p) for p in interval(lo, hi)} == {"5/4/3/2", "4,5/3/2", "5/4/2,3", "4,5/2,3"}


def test_stirling_examples():
    assert all(stirling2(k, 1) == 1 for k in range(1, 12))
    assert all(stirling2(k, k) == 1 for k in range(12))
    assert stirling2(4, 2) == 7
    assert stirling2(3, 0) == 0 and stirling2(0, 0) == 1


@pytest.mark.parametrize("k", range(0, 7))
def test_stirling_against_surjection_count(k):
    for j in range(0, k + 2):
        assert stirling2(k, j) == stirling2_brute(k, j)


def test_bell_consistent():
    assert [bell(m) for m in range(10)] == [bell_triangle(m) for m in range(10)]


def test_stirling_identity():
    assert stirling_identity_check(1, 7) == (7, 7)
    assert stirling_identity_check(4, 5) == (625, 625)
    lhs, rhs = stirling_identity_check(8, 12)
    assert lhs == rhs == 12**8
    for k in range(1, 9):
        for n in range(1, 13):
            lhs, rhs = stirling_identity_check(k, n)
            assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 6))
def test_partial_order_laws(n):
    parts = list(all_partitions(n))
    for a in parts:
        assert refines(a, a)
    for a, b in itertools.product(parts, repeat=2):
        if refines(a, b) and refines(b, a):
            assert a == b
    if n <= 5:
        for a, b, c in itertools.product(parts, repeat=3):
            if refines(a, b) and refines(b, c):
                assert refines(a, c)
