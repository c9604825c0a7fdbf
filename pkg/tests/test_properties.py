"""Randomized invariants at sizes beyond exhaustive reach (n up to 12)."""

from hypothesis import given
from hypothesis import strategies as st

from indegree_trees.codec import classic_prufer_decode, decode, encode, is_subsequence
from indegree_trees.involution import swap_involution
from indegree_trees.lattice import mobius, mobius_product, refines
from indegree_trees.model import (
    CodeWord,
    LabelledTree,
    SetPartition,
    format_code,
    format_partition,
    format_tree,
    parse_code,
    parse_partition,
    parse_tree,
)
from indegree_trees.treemap import indegree_partition, phi

MAX_N = 12


@st.composite
def trees(draw, min_n=1, max_n=MAX_N):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return LabelledTree.from_edges(n, [(1, 2)] if n == 2 else [])
    seq = draw(st.lists(st.integers(1, n), min_size=n - 2, max_size=n - 2))
    return classic_prufer_decode(seq, n)


def _rgs_partition(n, labels):
    return SetPartition.from_labels(n, dict(zip(range(2, n + 1), labels)))


@st.composite
def partitions(draw, n=None, min_n=1, max_n=MAX_N):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    labels = draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1))
    return _rgs_partition(n, labels)


@st.composite
def refinement(draw, pi):
    """A random sigma with sigma <= pi."""
    label = {}
    for bi, block in enumerate(pi.blocks):
        for x in block:
            label[x] = (bi, draw(st.integers(0, 2)))
    return SetPartition.from_labels(pi.n, label)


@st.composite
def coarsening(draw, sigma):
    merged = draw(st.lists(st.integers(0, len(sigma)), min_size=len(sigma), max_size=len(sigma)))
    label = {x: merged[bi] for bi, b in enumerate(sigma.blocks) for x in b}
    return SetPartition.from_labels(sigma.n, label)


@st.composite
def tree_and_refinement(draw):
    t = draw(trees())
    return t, draw(refinement(phi(t)))


@st.composite
def partition_and_word(draw):
    sigma = draw(partitions(min_n=2))
    k = len(sigma)
    syms = draw(st.lists(st.integers(1, sigma.n), min_size=k - 1, max_size=k - 1))
    return sigma, CodeWord(sigma.n, tuple(syms))


# round trips of the text formats

@given(trees())
def test_tree_text_round_trip(t):
    assert parse_tree(format_tree(t)) == t
    assert LabelledTree.from_json(t.to_json()) == t


@given(partitions())
def test_partition_text_round_trip(p):
    assert parse_partition(format_partition(p), p.n) == p
    assert SetPartition.from_json(p.to_json()) == p


@given(partition_and_word())
def test_code_text_round_trip(pw):
    _, w = pw
    assert parse_code(format_code(w), w.n) == w


@given(partitions())
def test_canonical_order(p):
    mins = [b[0] for b in p.blocks]
    assert mins == sorted(mins, reverse=True)
    assert all(list(b) == sorted(b) for b in p.blocks)
    assert sorted(x for b in p.blocks for x in b) == list(range(2, p.n + 1))


# the tree -> partition map

@given(trees())
def test_phi_type_is_indegree_partition(t):
    p = phi(t)
    assert p.type() == indegree_partition(t)
    assert sum(p.type().parts) == t.n - 1


# codec

@given(tree_and_refinement())
def test_decode_encode_identity(ts):
    t, sigma = ts
    w = encode(sigma, t)
    assert len(w) == max(len(sigma) - 1, 0)
    assert decode(sigma, w) == t


@given(partition_and_word())
def test_decode_never_stalls_and_inverts(pw):
    sigma, w = pw
    t = decode(sigma, w)  # every word is feasible
    assert refines(sigma, phi(t))
    assert encode(sigma, t) == w


@given(trees(min_n=3).flatmap(lambda t: st.tuples(st.just(t), refinement(phi(t)))).flatmap(
    lambda ts: st.tuples(st.just(ts[0]), st.just(ts[1]), coarsening(ts[1]))))
def test_subsequence_under_coarsening(tsc):
    t, fine, coarse = tsc
    if not refines(coarse, phi(t)):
        return
    assert is_subsequence(encode(coarse, t).symbols, encode(fine, t).symbols)


# refinement order and Moebius

@given(partitions(n=8), partitions(n=8), partitions(n=8))
def test_partial_order_laws(a, b, c):
    assert refines(a, a)
    assert refines(SetPartition.finest(8), a) and refines(a, SetPartition.coarsest(8))
    if refines(a, b) and refines(b, a):
        assert a == b
    if refines(a, b) and refines(b, c):
        assert refines(a, c)


@given(partitions(min_n=2, max_n=9).flatmap(lambda s: st.tuples(st.just(s), coarsening(s))))
def test_mobius_matches_product(pair):
    s, t = pair
    assert refines(s, t)
    if len(s) <= 7:
        assert mobius(s, t) == mobius_product(s, t)


# involution

@given(trees(min_n=3), st.data())
def test_swap_involution(t, data):
    p = phi(t)
    i = data.draw(st.integers(2, t.n - 1))
    if p.same_block(i, i + 1):
        return
    t2 = swap_involution(t, i)
    assert swap_involution(t2, i) == t
    assert phi(t2) == p.swap(i)
    if p.swap(i) != p:
        assert t2 != t
