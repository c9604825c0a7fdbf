import json

import pytest

from indegree_trees.census import all_trees
from indegree_trees.errors import ParseError, ValidationError
from indegree_trees.lattice import all_partitions
from indegree_trees.model import (
    CodeWord,
    IntegerPartition,
    LabelledTree,
    SetPartition,
    format_code,
    format_partition,
    format_tree,
    parse_code,
    parse_partition,
    parse_tree,
    partition_type,
)

FIG1 = "9\n1 7\n3 7\n1 9\n6 9\n5 9\n2 5\n4 5\n5 8\n"


def test_parse_fig1():
    t = parse_tree(FIG1)
    assert t.n == 9
    assert t.edges == {(1, 7), (3, 7), (1, 9), (6, 9), (5, 9), (2, 5), (4, 5), (5, 8)}


def test_parse_canonicalizes_endpoint_order():
    t = parse_tree("3\n3 1\n2 3\n")
    assert t.edges == {(1, 3), (2, 3)}


def test_single_vertex_tree():
    t = parse_tree("1\n")
    assert t.n == 1 and t.edges == frozenset()


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3\n1 2\n4 3\n", 3, "vertex 4 out of range"),
        ("3\n1 2\n", 2, "expected 2 edges"),
        ("4\n1 2\n2 3\n1 3\n", 4, "cycle"),
        ("3\n1 2 3\n2 3\n", 2, "expected 'u v'"),
        ("x\n", 1, "vertex count"),
        ("3\n1 1\n2 3\n", 2, "self-loop"),
        ("3\n1 2\n2 1\n", 3, "duplicate"),
    ],
)
def test_parse_tree_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_tree(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_tree_constructor_rejects_disconnected():
    with pytest.raises(ValidationError):
        LabelledTree(4, frozenset({(1, 2), (3, 4), (1, 2)}))
    with pytest.raises(ValidationError):
        LabelledTree(4, frozenset({(1, 2), (2, 3), (1, 3)}))


def test_parse_partition_fig1():
    pi = parse_partition("8/5,6,9/3,7/2,4", 9)
    assert pi.blocks == ((8,), (5, 6, 9), (3, 7), (2, 4))
    assert str(pi) == "8/5,6,9/3,7/2,4"


def test_parse_partition_any_order_is_canonicalized():
    pi = parse_partition("4,2/9,6,5/7,3/8", 9)
    assert str(pi) == "8/5,6,9/3,7/2,4"


def test_finest_partition():
    pi = parse_partition("2/3/4/5", 5)
    assert pi == SetPartition.finest(5)
    assert str(pi) == "5/4/3/2"


@pytest.mark.parametrize(
    "text, n, fragment",
    [
        ("2,2/3", 3, "duplicate element 2"),
        ("2/3/9", 4, "outside"),
        ("2/3", 4, "missing element 4"),
        ("2//3", 3, "empty block"),
        ("2/a", 3, "non-integer"),
    ],
)
def test_parse_partition_errors(text, n, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_partition(text, n)


def test_partition_type():
    assert partition_type(parse_partition("8/5,6,9/3,7/2,4", 9)).parts == (3, 2, 2, 1)
    assert partition_type(SetPartition.finest(7)).parts == (1,) * 6
    assert partition_type(parse_partition("2,3,4,5", 5)).parts == (4,)


def test_integer_partition_multiplicities():
    lam = IntegerPartition((1, 2, 2, 3))
    assert lam.parts == (3, 2, 2, 1)
    assert lam.multiplicities == {1: 1, 2: 2, 3: 1}
    assert lam.k == 4 and lam.size == 8


def test_empty_objects_for_n1():
    assert str(parse_partition("", 1)) == ""
    assert len(parse_partition("", 1)) == 0
    assert parse_code("", 1).symbols == ()


def test_code_word():
    w = parse_code("5,9,7,1,5", 9)
    assert w.symbols == (5, 9, 7, 1, 5)
    assert format_code(w) == "5,9,7,1,5"
    with pytest.raises(ParseError):
        parse_code("5,10", 9)
    with pytest.raises(ValidationError):
        CodeWord(3, (0,))


def test_swap_partition():
    pi = parse_partition("8/5,6,9/3,7/2,4", 9)
    assert str(pi.swap(4)) == "8/4,6,9/3,7/2,5"


@pytest.mark.parametrize("n", range(1, 8))
def test_format_parse_round_trip_exhaustive(n):
    for pi in all_partitions(n):
        assert parse_partition(format_partition(pi), n) == pi
        assert SetPartition.from_json(json.loads(json.dumps(pi.to_json()))) == pi
    for t in all_trees(n):
        assert parse_tree(format_tree(t)) == t
        assert LabelledTree.from_json(json.loads(json.dumps(t.to_json()))) == t


def test_format_parse_round_trip_n8_partitions():
    for pi in all_partitions(8):
        assert parse_partition(format_partition(pi), 8) == pi
        t = partition_type(pi)
        assert t.size == 7 and t.k == len(pi)


def test_code_json_round_trip():
    w = CodeWord(9, (5, 1, 5))
    assert CodeWord.from_json(json.loads(json.dumps(w.to_json()))) == w
