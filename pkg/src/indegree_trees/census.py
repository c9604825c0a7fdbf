"""Closed-form tree counts and the exhaustive enumeration that checks them.

All arithmetic is on Python integers, so nothing can overflow.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

from .codec import prufer_edges
from .errors import BoundError, PreconditionError
from .lattice import all_partitions, coarsenings, mobius_from
from .model import IntegerPartition, LabelledTree, SetPartition
from .treemap import contract_top, contraction_targets, phi_blocks

DEFAULT_BOUND = 8
EXTENDED_BOUND = 9


def count_by_lambda(lam: IntegerPartition, n: int) -> int:
    """Number of trees on [n] whose indegree sequence is lam."""
    if lam.size != n - 1:
        raise ValueError(f"partition {lam} does not sum to n-1 = {n - 1}")
    k = lam.k
    num = factorial(n - 1) ** 2
    den = factorial(n - k)
    for i, m in lam.multiplicities.items():
        den *= factorial(i) ** m * factorial(m)
    q, r = divmod(num, den)
    assert r == 0, f"non-exact division for {lam}, n={n}"
    return q


def partitions_of_type(lam: IntegerPartition, n: int) -> int:
    """Number of set partitions of an (n-1)-set with block sizes lam."""
    den = prod(factorial(i) ** m * factorial(m) for i, m in lam.multiplicities.items())
    q, r = divmod(factorial(n - 1), den)
    assert r == 0
    return q


def f_closed(pi: SetPartition, n: int | None = None) -> int:
    """(n-1)! / (n-|pi|)!"""
    n = pi.n if n is None else n
    return factorial(n - 1) // factorial(n - len(pi))


def g_closed(sigma: SetPartition, n: int | None = None) -> int:
    """n^(|sigma|-1); the empty partition (n = 1) counts the single tree."""
    n = sigma.n if n is None else n
    return n ** (len(sigma) - 1) if len(sigma) else 1


def integer_partitions(m: int, largest: int | None = None) -> Iterator[IntegerPartition]:
    """Partitions of m, reverse-lexicographic."""
    largest = m if largest is None else largest
    if m == 0:
        yield IntegerPartition(())
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield IntegerPartition((first,) + rest.parts)


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------

def _check_bound(n: int, bound: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise BoundError(f"n = {n} exceeds the enumeration bound {bound}")


def _parents(n: int, edges) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    par = [0] * (n + 1)
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != par[u]:
                par[w] = u
                stack.append(w)
    return par


def parent_arrays(n: int, first: int | None = None) -> Iterator[list[int]]:
    """Parent arrays (rooted at 1) of every tree on [n], Pruefer-lexicographic.

    ``first`` restricts to Pruefer sequences starting with that symbol.
    """
    if n == 1:
        if first is None:
            yield [0, 0]
        return
    if n == 2:
        if first is None:
            yield [0, 0, 1]
        return
    heads = range(1, n + 1) if first is None else (first,)
    for h in heads:
        for tail in itertools.product(range(1, n + 1), repeat=n - 3):
            yield _parents(n, prufer_edges((h,) + tail, n))


def all_trees(n: int, bound: int = DEFAULT_BOUND) -> Iterator[LabelledTree]:
    _check_bound(n, bound)
    for par in parent_arrays(n):
        yield LabelledTree.from_parents(par)


@lru_cache(maxsize=8)
def _tree_table(n: int) -> tuple[tuple[LabelledTree, SetPartition], ...]:
    return tuple((t, SetPartition(n, phi_blocks(t.parent))) for t in all_trees(n))


def trees_and_phi(n: int, bound: int = DEFAULT_BOUND):
    """(T, phi(T)) for every tree on [n]; memoized for n <= 7."""
    _check_bound(n, bound)
    if n <= 7:
        return _tree_table(n)
    return ((t, SetPartition(n, phi_blocks(t.parent))) for t in all_trees(n, bound))


def _tally(n: int, first: int | None) -> tuple[Counter, Counter]:
    lam_counts: Counter = Counter()
    pi_counts: Counter = Counter()
    for par in parent_arrays(n, first):
        heads: dict[int, list[int]] = {}
        for b in range(2, n + 1):
            p = par[b]
            heads.setdefault(b if b > p else p, []).append(b)
        blocks = tuple(sorted(tuple(g) for g in heads.values()))
        pi_counts[blocks] += 1
        lam_counts[tuple(sorted((len(g) for g in blocks), reverse=True))] += 1
    return lam_counts, pi_counts


def brute_force_census(
    n: int, bound: int = DEFAULT_BOUND, workers: int = 1
) -> tuple[dict[IntegerPartition, int], dict[SetPartition, int]]:
    """Tally indegree type and phi over all n^(n-2) trees.

    With ``workers > 1`` the Pruefer space is sharded by first symbol.
    """
    _check_bound(n, bound)
    lam_counts: Counter = Counter()
    pi_counts: Counter = Counter()
    if n <= 2 or workers <= 1:
        shards = [_tally(n, None)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(_tally, [n] * n, range(1, n + 1)))
    for lc, pc in shards:
        lam_counts.update(lc)
        pi_counts.update(pc)
    lam_map = {IntegerPartition(k): v for k, v in sorted(lam_counts.items(), reverse=True)}
    pi_map = {SetPartition(n, k): v for k, v in sorted(pi_counts.items())}
    return lam_map, pi_map


def trees_with_phi(pi: SetPartition, bound: int = DEFAULT_BOUND) -> Iterator[LabelledTree]:
    for t, p in trees_and_phi(pi.n, bound):
        if p == pi:
            yield t


# ----------------------------------------------------------------------
# Moebius inversion and the contraction recursion
# ----------------------------------------------------------------------

def solve_f_by_mobius(n: int, bound: int = 7) -> dict[SetPartition, int]:
    """f(pi) = sum_{sigma >= pi} mu(pi, sigma) n^(|sigma|-1), for every pi."""
    _check_bound(n, bound)
    out = {}
    for pi in all_partitions(n):
        mu = mobius_from(pi)
        out[pi] = sum(m * g_closed(sigma, n) for sigma, m in mu.items())
    return out


def coarser_sum(sigma: SetPartition) -> int:
    """sum_{pi >= sigma} f_closed(pi)."""
    return sum(f_closed(pi) for pi in coarsenings(sigma))


def recursion_check(pi: SetPartition, n: int | None = None, bound: int = 7) -> bool:
    """Check |T_pi| = sum_j |T_{pi~_j}| by enumeration.

    Also checks that contraction of the top edge maps T_pi bijectively
    onto the union of the target fibres.
    """
    n = pi.n if n is None else n
    if n != pi.n:
        raise ValueError("n does not match the partition")
    if n < 3 or not pi.same_block(n, n - 1):
        raise PreconditionError(f"{n} and {n - 1} must share a block of {pi}")
    _check_bound(n, bound)
    targets = contraction_targets(pi)
    fibre = list(trees_with_phi(pi, bound))
    smaller: dict[SetPartition, int] = Counter(p for _, p in trees_and_phi(n - 1, bound))
    rhs = sum(smaller[t] for t in targets)
    if len(fibre) != rhs:
        return False
    images = set()
    for t in fibre:
        small, j = contract_top(t)
        if SetPartition(n - 1, phi_blocks(small.parent)) != targets[j - 1]:
            return False
        images.add(small)
    return len(images) == len(fibre)
