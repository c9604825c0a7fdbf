"""Edge orientation, the tree -> set-partition map, star decompositions,
and contraction of the edge between n and n-1.

Each edge {u, v} is oriented u -> v when u < v.  Hanging the tree from
vertex 1, the edge above vertex b carries label b; ``phi`` groups edge
labels by the head of their oriented edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import PreconditionError, RefinementError, StructureError
from .lattice import refines
from .model import IntegerPartition, LabelledTree, SetPartition


def orient_edges(tree: LabelledTree) -> list[tuple[int, int]]:
    return tree.sorted_edges()


def indegrees(tree: LabelledTree) -> dict[int, int]:
    return dict(Counter(v for _, v in tree.edges))


def indegree_partition(tree: LabelledTree) -> IntegerPartition:
    return IntegerPartition(tuple(indegrees(tree).values()))


def edge_heads(parent) -> list[int]:
    """head[b] = head vertex of the oriented edge labelled b (b >= 2)."""
    return [0, 0] + [max(b, parent[b]) for b in range(2, len(parent))]


def phi_blocks(parent) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = {}
    for b in range(2, len(parent)):
        p = parent[b]
        groups.setdefault(b if b > p else p, []).append(b)
    return tuple(tuple(g) for g in groups.values())


def phi(tree: LabelledTree) -> SetPartition:
    """Group edge labels by the vertex their edges point into."""
    return SetPartition(tree.n, phi_blocks(tree.parent))


@dataclass(frozen=True)
class Star:
    block: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    cut_point: int
    leaf: bool


@dataclass(frozen=True)
class StarDecomposition:
    sigma: SetPartition
    stars: tuple[Star, ...]  # aligned with sigma.blocks

    def leaf_stars(self) -> list[Star]:
        return [s for s in self.stars if s.leaf]

    def star(self, block) -> Star:
        block = tuple(sorted(block))
        for s in self.stars:
            if s.block == block:
                return s
        raise KeyError(block)


def cut_point(parent, block) -> int:
    """The unique vertex outside ``block`` touched by an edge labelled in ``block``."""
    inside = set(block)
    found = {parent[b] for b in block} - inside
    if len(found) != 1:
        raise StructureError(f"block {sorted(block)} has cut-point candidates {sorted(found)}")
    return found.pop()


def cut_points(tree: LabelledTree, sigma: SetPartition) -> list[int]:
    par = tree.parent
    return [cut_point(par, b) for b in sigma.blocks]


def decompose(tree: LabelledTree, sigma: SetPartition) -> StarDecomposition:
    if not refines(sigma, phi(tree)):
        raise RefinementError(f"{sigma} does not refine phi(T) = {phi(tree)}")
    par = tree.parent
    cuts = [cut_point(par, b) for b in sigma.blocks]
    cutset = set(cuts)
    stars = []
    for b, c in zip(sigma.blocks, cuts):
        edges = frozenset((min(x, par[x]), max(x, par[x])) for x in b)
        stars.append(Star(b, edges, c, cutset.isdisjoint(b)))
    return StarDecomposition(sigma, tuple(stars))


def contraction_targets(pi: SetPartition) -> list[SetPartition]:
    """[pi~_1, pi~_2, ...] for pi with n, n-1 co-blocked (list index j-1).

    pi~_1 drops n from the block B_1 holding n; pi~_j (j >= 2) merges
    B_1 \\ {n} into B_j, where B_2, B_3, ... are the remaining blocks in
    canonical order.
    """
    n = pi.n
    if n < 3 or not pi.same_block(n, n - 1):
        raise PreconditionError(f"{n} and {n - 1} are not in the same block of {pi}")
    b1 = pi.block_of(n)
    rest = [b for b in pi.blocks if b != b1]
    core = tuple(x for x in b1 if x != n)
    out = [SetPartition(n - 1, (core,) + tuple(rest))]
    for j, bj in enumerate(rest):
        merged = core + bj
        out.append(SetPartition(n - 1, (merged,) + tuple(r for i, r in enumerate(rest) if i != j)))
    return out


def contract_top(tree: LabelledTree) -> tuple[LabelledTree, int]:
    """Merge the edge {n-1, n} and drop label n.

    Returns the tree on [n-1] and the 1-based index j with
    phi(result) == contraction_targets(phi(tree))[j - 1].
    """
    n = tree.n
    if n < 3:
        raise PreconditionError("contraction needs n >= 3")
    pi = phi(tree)
    if not pi.same_block(n, n - 1):
        raise PreconditionError(f"{n} and {n - 1} are not co-blocked in phi(T) = {pi}")
    par = tree.parent
    if par[n - 1] != n:
        raise PreconditionError(f"{n} and {n - 1} are not adjacent")
    new_par = [0] * n
    for v in range(2, n):
        p = par[v]
        new_par[v] = n - 1 if p == n else p
    new_par[n - 1] = par[n]
    small = LabelledTree.from_parents(new_par)

    has_children = any(par[v] == n - 1 for v in range(2, n + 1))
    if not has_children:
        return small, 1
    b1 = pi.block_of(n)
    rest = [b for b in pi.blocks if b != b1]
    into = pi.block_of(next(v for v in range(2, n + 1) if par[v] == n - 1))
    return small, 2 + rest.index(into)


def expand_top(small: LabelledTree, top_block) -> LabelledTree:
    """Inverse of ``contract_top``: split vertex n-1 of ``small`` (on [n-1]).

    ``top_block`` is the block of the target partition holding n.  Its
    elements below n-1 that are children of n-1 in ``small`` move to the
    new vertex n; n takes over n-1's parent and n-1 hangs below n.
    """
    m = small.n
    n = m + 1
    top = set(top_block)
    if n not in top or m not in top:
        raise PreconditionError(f"top block must contain {m} and {n}")
    par = list(small.parent) + [0]
    new_par = par[:]
    new_par[n] = par[m]
    new_par[m] = n
    for v in range(2, m):
        if par[v] == m and v in top:
            new_par[v] = n
    return LabelledTree.from_parents(new_par)
