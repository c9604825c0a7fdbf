"""Generalized Pruefer codes relative to a set partition sigma.

``encode(sigma, T)`` strips leaf-stars one at a time, always the one
whose block has the largest minimum, and records the vertex each was
hanging from.  The last record is always 1 and is dropped, so a
k-block sigma yields a word of length k - 1.  ``decode`` rebuilds the
tree by attaching blocks in the same order.

With sigma the all-singletons partition this is the Pruefer code that
repeatedly removes the largest leaf other than vertex 1.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import RefinementError, StructureError, ValidationError
from .lattice import refines
from .model import CodeWord, LabelledTree, SetPartition
from .treemap import cut_point, phi


def encode(sigma: SetPartition, tree: LabelledTree, *, check: bool = True) -> CodeWord:
    if sigma.n != tree.n:
        raise ValidationError(f"partition is on [2,{sigma.n}] but tree is on [{tree.n}]")
    if check and not refines(sigma, phi(tree)):
        raise RefinementError(f"{sigma} does not refine phi(T) = {phi(tree)}")
    return CodeWord(tree.n, encode_parents(sigma.blocks, tree.parent))


def encode_parents(blocks: Sequence[Sequence[int]], parent: Sequence[int]) -> tuple[int, ...]:
    """Core of ``encode`` on a parent array; blocks must refine phi."""
    k = len(blocks)
    if k <= 1:
        return ()
    cuts = [cut_point(parent, b) for b in blocks]
    owner = {x: j for j, b in enumerate(blocks) for x in b}
    # blocks[j] is a leaf-star while no live block has its cut point in it
    blockers = [0] * k
    for c in cuts:
        if c in owner:
            blockers[owner[c]] += 1
    ready = [(-min(b), j) for j, b in enumerate(blocks) if blockers[j] == 0]
    heapq.heapify(ready)
    out = []
    for _ in range(k - 1):
        _, j = heapq.heappop(ready)
        c = cuts[j]
        out.append(c)
        if c in owner:
            o = owner[c]
            blockers[o] -= 1
            if blockers[o] == 0:
                heapq.heappush(ready, (-min(blocks[o]), o))
    return tuple(out)


def decode(sigma: SetPartition, omega: CodeWord | Sequence[int]) -> LabelledTree:
    n = sigma.n
    symbols = tuple(omega.symbols if isinstance(omega, CodeWord) else omega)
    k = len(sigma)
    if k == 0:
        if symbols:
            raise ValidationError("empty partition takes the empty word")
        return LabelledTree(1, frozenset())
    if len(symbols) != k - 1:
        raise ValidationError(f"code word has length {len(symbols)}, expected {k - 1}")
    for s in symbols:
        if not 1 <= s <= n:
            raise ValidationError(f"symbol {s} outside [1,{n}]")
    edges = decode_edges(sigma.blocks, symbols)
    try:
        return LabelledTree(n, frozenset(edges))
    except ValidationError as exc:
        raise StructureError(f"decode produced a non-tree: {exc}") from None


def decode_edges(blocks: Sequence[Sequence[int]], symbols: Sequence[int]) -> list[tuple[int, int]]:
    k = len(blocks)
    word = list(symbols) + [1]
    # blocks already sorted by descending minimum in canonical form
    order = sorted(range(k), key=lambda j: -min(blocks[j]))
    owner = {x: j for j, b in enumerate(blocks) for x in b}
    # pending[j] = how many of the not-yet-consumed symbols w_i..w_{k-1} lie in block j
    pending = [0] * k
    for s in symbols:
        if s in owner:
            pending[owner[s]] += 1
    used = [False] * k
    edges = []
    for i in range(k):
        w = word[i]
        chosen = next((j for j in order if not used[j] and pending[j] == 0), None)
        if chosen is None:
            raise StructureError(f"no admissible block at step {i + 1}")
        used[chosen] = True
        b = sorted(blocks[chosen])
        top = b[-1]
        if top > w:
            edges.extend((x, top) for x in b[:-1])
            edges.append((w, top))
        else:
            edges.extend((x, w) for x in b)
        if i < k - 1 and w in owner:
            pending[owner[w]] -= 1
    return edges


def phi_prime(tree: LabelledTree) -> tuple[SetPartition, CodeWord]:
    pi = phi(tree)
    return pi, encode(pi, tree, check=False)


# ----------------------------------------------------------------------
# Classic Pruefer code (smallest leaf first), kept independent of the
# partition machinery so it can serve as an enumeration oracle.
# ----------------------------------------------------------------------

def classic_prufer_decode(seq: Sequence[int], n: int | None = None) -> LabelledTree:
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise ValidationError(f"need a sequence of length n-2 with n >= 2 (n={n}, len={len(seq)})")
    for s in seq:
        if not 1 <= s <= n:
            raise ValidationError(f"symbol {s} outside [1,{n}]")
    return LabelledTree(n, frozenset(prufer_edges(seq, n)))


def prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def classic_prufer_encode(tree: LabelledTree) -> tuple[int, ...]:
    n = tree.n
    if n < 2:
        raise ValidationError("Pruefer codes need n >= 2")
    adj = {v: set(ws) for v, ws in tree.adjacency.items()}
    leaves = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    out = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        out.append(nb)
        adj[nb].discard(leaf)
        del adj[leaf]
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return tuple(out)


def is_subsequence(short: Iterable[int], long: Iterable[int]) -> bool:
    it = iter(long)
    return all(any(s == x for x in it) for s in short)
