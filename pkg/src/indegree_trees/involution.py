"""Label-swap involution exchanging the fibres of pi and s_i(pi).

For vertices i, i+1 in different blocks of phi(T):

* not adjacent: swap the two labels;
* adjacent, 1 in A_i or A_{i+1}: re-hang B_i on i+1 and B_{i+1} on i,
  then swap labels;
* adjacent, 1 in B_i: re-hang the component of B_i holding 1 on i+1,
  then swap labels.

1 in B_{i+1} forces i, i+1 into one block, which is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, SameBlockError
from .model import LabelledTree
from .treemap import phi


@dataclass(frozen=True)
class NeighborSplit:
    """Pieces of T around the edge {i, i+1}.

    ``away[j]`` / ``into[j]`` map each neighbour u of j (other than the
    partner) to the vertex set of the branch hanging from u; the branch
    is in A_j when u > j and in B_j when u < j.
    """

    i: int
    away: dict[int, dict[int, frozenset[int]]]
    into: dict[int, dict[int, frozenset[int]]]

    def A(self, j: int) -> frozenset[int]:
        return frozenset().union(*self.away[j].values())

    def B(self, j: int) -> frozenset[int]:
        return frozenset().union(*self.into[j].values())

    def locate(self, v: int) -> tuple[str, int, int] | None:
        """(kind, j, u): v lies in branch u of A_j ('A') or B_j ('B')."""
        for j in (self.i, self.i + 1):
            for kind, table in (("A", self.away[j]), ("B", self.into[j])):
                for u, verts in table.items():
                    if v in verts:
                        return kind, j, u
        return None


def _branch(adj, root: int, blocked: set[int]) -> frozenset[int]:
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def neighbor_split(tree: LabelledTree, i: int) -> NeighborSplit:
    adj = tree.adjacency
    if i + 1 not in adj[i]:
        raise PreconditionError(f"vertices {i} and {i + 1} are not adjacent")
    pair = {i, i + 1}
    away: dict[int, dict[int, frozenset[int]]] = {}
    into: dict[int, dict[int, frozenset[int]]] = {}
    for j in (i, i + 1):
        away[j], into[j] = {}, {}
        for u in adj[j]:
            if u in pair:
                continue
            (away[j] if u > j else into[j])[u] = _branch(adj, u, pair)
    return NeighborSplit(i, away, into)


def swap_involution(tree: LabelledTree, i: int) -> LabelledTree:
    n = tree.n
    if not 2 <= i <= n - 1:
        raise PreconditionError(f"i must lie in [2,{n - 1}], got {i}")
    if phi(tree).same_block(i, i + 1):
        raise SameBlockError(f"{i} and {i + 1} share a block of phi(T)")
    swap = {i: i + 1, i + 1: i}
    if i + 1 not in tree.adjacency[i]:
        return tree.relabel(swap)

    split = neighbor_split(tree, i)
    kind, j, u = split.locate(1)
    if kind == "B" and j == i + 1:
        raise SameBlockError(f"vertex 1 below {i + 1}: {i} and {i + 1} share a block")
    if kind == "A":
        moved = [(v, i) for v in split.into[i]] + [(v, i + 1) for v in split.into[i + 1]]
    else:
        moved = [(u, i)]
    edges = set(tree.edges)
    for v, old in moved:
        new = i + 1 if old == i else i
        edges.discard((min(v, old), max(v, old)))
        edges.add((min(v, new), max(v, new)))
    return LabelledTree(n, frozenset(edges)).relabel(swap)
