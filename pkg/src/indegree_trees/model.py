"""Core value types and their text / JSON formats.

Trees live on the vertex set [n] = {1..n}; set partitions live on the
ground set [2, n].  Every type is an immutable value; constructors
canonicalize and validate.

Text formats::

    tree       "n\\nu v\\nu v\\n..."   (n - 1 edge lines)
    partition  "8/5,6,9/3,7/2,4"      (blocks by descending minimum)
    code word  "5,9,7,1,5"
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError, ValidationError

Edge = tuple[int, int]


def _connected(n: int, edges: Iterable[Edge]) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class LabelledTree:
    """Undirected tree on [n].

    Edges are stored as pairs ``(u, v)`` with ``u < v``.  Orientation
    (``u -> v``) and the rooting at vertex 1 are derived on demand.
    """

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > n:
                bad = u if u < 1 else v
                raise ValidationError(f"vertex {bad} out of range [1,{n}]")
            canon.add((u, v))
        if len(canon) != n - 1:
            raise ValidationError(f"expected {n - 1} distinct edges, got {len(canon)}")
        if not _connected(n, canon):
            raise ValidationError("edge set is not connected (contains a cycle)")
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabelledTree":
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @classmethod
    def from_parents(cls, parent: Sequence[int]) -> "LabelledTree":
        """Build from a parent array indexed by vertex (entries 0 and 1 ignored)."""
        n = len(parent) - 1
        return cls(n, frozenset((min(v, parent[v]), max(v, parent[v])) for v in range(2, n + 1)))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    @cached_property
    def parent(self) -> tuple[int, ...]:
        """``parent[v]`` under rooting at 1; ``parent[0] = parent[1] = 0``."""
        par = [0] * (self.n + 1)
        adj = self.adjacency
        stack = [1]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w != par[u]:
                    par[w] = u
                    stack.append(w)
        return tuple(par)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, mapping: dict[int, int]) -> "LabelledTree":
        """Apply a vertex bijection given as a partial map (unlisted vertices fixed)."""
        f = lambda x: mapping.get(x, x)  # noqa: E731
        return LabelledTree(self.n, frozenset((f(u), f(v)) for u, v in self.edges))

    def __str__(self) -> str:
        return format_tree(self)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, obj: dict) -> "LabelledTree":
        return cls.from_edges(obj["n"], obj["edges"])


@dataclass(frozen=True)
class SetPartition:
    """A partition of [2, n] into nonempty blocks.

    Canonical form: each block ascending, blocks ordered by descending
    minimum.  ``len(pi)`` is the number of blocks.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"ground bound must be a positive integer, got {n!r}")
        seen: set[int] = set()
        canon = []
        for b in self.blocks:
            b = tuple(sorted(b))
            if not b:
                raise ValidationError("empty block")
            for x in b:
                if x < 2 or x > n:
                    raise ValidationError(f"element {x} outside [2,{n}]")
                if x in seen:
                    raise ValidationError(f"duplicate element {x}")
                seen.add(x)
            canon.append(b)
        missing = sorted(set(range(2, n + 1)) - seen)
        if missing:
            raise ValidationError(f"missing element {missing[0]}")
        canon.sort(key=lambda b: -b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def finest(cls, n: int) -> "SetPartition":
        return cls(n, tuple((x,) for x in range(2, n + 1)))

    @classmethod
    def coarsest(cls, n: int) -> "SetPartition":
        return cls(n, (tuple(range(2, n + 1)),) if n >= 2 else ())

    @classmethod
    def from_labels(cls, n: int, label: dict[int, object]) -> "SetPartition":
        groups: dict[object, list[int]] = {}
        for x in range(2, n + 1):
            groups.setdefault(label[x], []).append(x)
        return cls(n, tuple(tuple(g) for g in groups.values()))

    def __len__(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_index(self) -> dict[int, int]:
        """element -> index of its block in ``self.blocks``."""
        return {x: j for j, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.block_index[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self.block_index[x] == self.block_index[y]

    def swap(self, i: int) -> "SetPartition":
        """Exchange the elements i and i+1."""
        s = {i: i + 1, i + 1: i}
        return SetPartition(self.n, tuple(tuple(s.get(x, x) for x in b) for b in self.blocks))

    def type(self) -> "IntegerPartition":
        return partition_type(self)

    def __str__(self) -> str:
        return format_partition(self)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> "SetPartition":
        return cls(obj["n"], tuple(tuple(int(x) for x in b) for b in obj["blocks"]))


@dataclass(frozen=True)
class IntegerPartition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValidationError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad integer partition {text!r}: {exc}") from None


@dataclass(frozen=True)
class CodeWord:
    """A word over the alphabet [n]."""

    n: int
    symbols: tuple[int, ...] = field(default=())

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        for s in syms:
            if not 1 <= s <= self.n:
                raise ValidationError(f"symbol {s} outside [1,{self.n}]")
        object.__setattr__(self, "symbols", syms)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self) -> str:
        return format_code(self)

    def to_json(self) -> dict:
        return {"n": self.n, "symbols": list(self.symbols)}

    @classmethod
    def from_json(cls, obj: dict) -> "CodeWord":
        return cls(obj["n"], tuple(obj["symbols"]))


# ----------------------------------------------------------------------
# Parsing and formatting
# ----------------------------------------------------------------------

def parse_tree(text: str) -> LabelledTree:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty tree file")
    first, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected vertex count, got {head!r}", first) from None
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}", first)
    body = lines[1:]
    edges: list[Edge] = []
    seen: set[Edge] = set()
    parent = list(range(n + 1))  # union-find for early cycle detection

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}", lineno) from None
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range [1,{n}]", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ParseError(f"edge {e[0]} {e[1]} closes a cycle", lineno)
        parent[ru] = rv
        seen.add(e)
        edges.append(e)
    if len(edges) != n - 1:
        where = body[-1][0] if body else first
        raise ParseError(f"expected {n - 1} edges, got {len(edges)}", where)
    return LabelledTree(n, frozenset(edges))


def format_tree(tree: LabelledTree) -> str:
    out = [str(tree.n)]
    out.extend(f"{u} {v}" for u, v in tree.sorted_edges())
    return "\n".join(out) + "\n"


def parse_partition(text: str, n: int) -> SetPartition:
    text = text.strip()
    if not text:
        blocks: tuple[tuple[int, ...], ...] = ()
    else:
        raw = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            if not chunk:
                raise ParseError(f"empty block in {text!r}")
            try:
                raw.append(tuple(int(x) for x in chunk.split(",")))
            except ValueError:
                raise ParseError(f"non-integer element in block {chunk!r}") from None
        blocks = tuple(raw)
    try:
        return SetPartition(n, blocks)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def format_partition(pi: SetPartition) -> str:
    return "/".join(",".join(map(str, b)) for b in pi.blocks)


def partition_type(pi: SetPartition) -> IntegerPartition:
    return IntegerPartition(tuple(len(b) for b in pi.blocks))


def parse_code(text: str, n: int) -> CodeWord:
    text = text.strip()
    if not text:
        return CodeWord(n, ())
    try:
        syms = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad code word {text!r}") from None
    try:
        return CodeWord(n, syms)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def format_code(w: CodeWord) -> str:
    return ",".join(map(str, w.symbols))


def dumps(obj) -> str:
    """JSON mirror of any model value."""
    return json.dumps(obj.to_json())
