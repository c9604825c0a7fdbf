"""The partition lattice of [2, n] under refinement."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .errors import GroundSetMismatch, OrderError
from .model import SetPartition


def refines(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff every block of sigma lies inside a block of pi."""
    if sigma.n != pi.n:
        raise GroundSetMismatch(f"ground sets [2,{sigma.n}] and [2,{pi.n}] differ")
    where = pi.block_index
    return all(len({where[x] for x in b}) == 1 for b in sigma.blocks)


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length m, in lexicographic order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    b = [1] * m  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        i = m - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, m):
            a[j] = 0
            b[j] = max(b[i], a[i] + 1)


def _group(items: Sequence[Sequence[int]], rgs: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    out: list[list[int]] = [[] for _ in range(max(rgs) + 1)] if rgs else []
    for chunk, g in zip(items, rgs):
        out[g].extend(chunk)
    return tuple(tuple(b) for b in out)


def all_partitions(n: int) -> Iterator[SetPartition]:
    """Every partition of [2, n], exactly once (Bell(n-1) of them)."""
    ground = [(x,) for x in range(2, n + 1)]
    for rgs in restricted_growth_strings(len(ground)):
        yield SetPartition(n, _group(ground, rgs))


def coarsenings(sigma: SetPartition) -> Iterator[SetPartition]:
    """The interval [sigma, 1]: partitions of sigma's blocks, merged back."""
    blocks = sorted(sigma.blocks)
    for rgs in restricted_growth_strings(len(blocks)):
        yield SetPartition(sigma.n, _group(blocks, rgs))


def covers(sigma: SetPartition) -> Iterator[SetPartition]:
    """Partitions obtained from sigma by merging exactly two blocks."""
    blocks = sigma.blocks
    for a, b in combinations(range(len(blocks)), 2):
        rest = tuple(blk for j, blk in enumerate(blocks) if j not in (a, b))
        yield SetPartition(sigma.n, rest + (blocks[a] + blocks[b],))


def interval(lo: SetPartition, hi: SetPartition) -> list[SetPartition]:
    if not refines(lo, hi):
        raise OrderError(f"{lo} does not refine {hi}")
    return [p for p in coarsenings(lo) if refines(p, hi)]


def mobius_from(lo: SetPartition, hi: SetPartition | None = None) -> dict[SetPartition, int]:
    """mu(lo, tau) for every tau in [lo, hi] (hi defaults to the top element).

    Computed from the defining recursion: mu(lo, lo) = 1 and
    sum_{lo <= tau' <= tau} mu(lo, tau') = 0 for tau != lo.
    """
    elems = interval(lo, hi) if hi is not None else list(coarsenings(lo))
    # fewer blocks = higher rank; process bottom-up
    elems.sort(key=lambda p: -len(p))
    mu: dict[SetPartition, int] = {}
    for tau in elems:
        if tau == lo:
            mu[tau] = 1
            continue
        mu[tau] = -sum(v for t, v in mu.items() if len(t) > len(tau) and refines(t, tau))
    return mu


def mobius(pi: SetPartition, sigma: SetPartition) -> int:
    """Moebius function mu(pi, sigma) of the partition lattice."""
    if not refines(pi, sigma):
        raise OrderError(f"{pi} does not refine {sigma}")
    return mobius_from(pi, sigma)[sigma]


def mobius_product(pi: SetPartition, sigma: SetPartition) -> int:
    """Closed form: prod over blocks of sigma of (-1)^(b-1) (b-1)!,
    b = number of pi-blocks inside.  Cross-check only."""
    if not refines(pi, sigma):
        raise OrderError(f"{pi} does not refine {sigma}")
    where = sigma.block_index
    counts = [0] * len(sigma)
    for b in pi.blocks:
        counts[where[b[0]]] += 1
    out = 1
    for c in counts:
        out *= (-1) ** (c - 1) * _factorial(c - 1)
    return out


def _factorial(m: int) -> int:
    out = 1
    for j in range(2, m + 1):
        out *= j
    return out


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind S(k, j)."""
    if k < 0 or j < 0:
        raise ValueError("stirling2 needs k, j >= 0")
    row = [1] + [0] * j  # S(0, .)
    for m in range(1, k + 1):
        new = [0] * (j + 1)
        for r in range(1, min(m, j) + 1):
            new[r] = row[r - 1] + r * row[r]
        row = new
    return row[j]


def falling_factorial(n: int, j: int) -> int:
    out = 1
    for r in range(j):
        out *= n - r
    return out


def stirling_identity_check(k: int, n: int) -> tuple[int, int]:
    """(sum_j S(k,j) n(n-1)...(n-j+1), n^k)."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    lhs = sum(stirling2(k, j) * falling_factorial(n, j) for j in range(1, k + 1))
    return lhs, n**k


def bell(m: int) -> int:
    return sum(stirling2(m, j) for j in range(m + 1))
