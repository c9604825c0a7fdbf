"""Code sets Omega_pi = encode(pi, T_pi) and the checks built on them."""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field

from .census import DEFAULT_BOUND, trees_and_phi, trees_with_phi
from .codec import encode, is_subsequence
from .errors import OrderError
from .lattice import coarsenings, refines
from .model import CodeWord, SetPartition


def omega_set(pi: SetPartition, n: int | None = None, bound: int = DEFAULT_BOUND) -> frozenset[CodeWord]:
    if n is not None and n != pi.n:
        raise ValueError("n does not match the partition")
    return frozenset(encode(pi, t, check=False) for t in trees_with_phi(pi, bound))


def sorted_words(words) -> list[CodeWord]:
    return sorted(words, key=lambda w: w.symbols)


def _cell(symbols, n: int) -> str:
    return ("" if n < 10 else ",").join(map(str, symbols))


def render_grid(pi: SetPartition, words=None) -> str:
    """n x n table of [n]^2 for a 3-block pi; words outside Omega_pi are
    shown struck as ``~ab~``."""
    n = pi.n
    if len(pi) != 3:
        raise ValueError("grid rendering needs a partition with exactly 3 blocks")
    words = omega_set(pi) if words is None else words
    members = {w.symbols for w in words}
    cells = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            s = _cell((a, b), n)
            row.append(s if (a, b) in members else f"~{s}~")
        cells.append(row)
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row).rstrip() for row in cells) + "\n"


def render_json(pi: SetPartition, words=None) -> str:
    words = omega_set(pi) if words is None else words
    return json.dumps({"pi": str(pi), "n": pi.n, "words": [list(w.symbols) for w in sorted_words(words)]})


@dataclass
class CubeReport:
    sigma: SetPartition
    fibre_sizes: dict[SetPartition, int] = field(default_factory=dict)
    overlaps: list[tuple[CodeWord, SetPartition, SetPartition]] = field(default_factory=list)
    missing: list[CodeWord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.overlaps and not self.missing

    @property
    def total(self) -> int:
        return sum(self.fibre_sizes.values())


def cube_partition_check(sigma: SetPartition, n: int | None = None, bound: int = DEFAULT_BOUND) -> CubeReport:
    """Images of the fibres T_pi (pi >= sigma) under encode(sigma, .) must
    tile [n]^(|sigma|-1)."""
    n = sigma.n if n is None else n
    report = CubeReport(sigma)
    owner: dict[CodeWord, SetPartition] = {}
    per_fibre: dict[SetPartition, int] = defaultdict(int)
    for pi in coarsenings(sigma):
        per_fibre[pi] = 0
    for t, p in trees_and_phi(n, bound):
        if p not in per_fibre:
            continue
        w = encode(sigma, t, check=False)
        if w in owner:
            report.overlaps.append((w, owner[w], p))
        owner[w] = p
        per_fibre[p] += 1
    report.fibre_sizes = dict(per_fibre)
    k = len(sigma)
    for syms in itertools.product(range(1, n + 1), repeat=max(k - 1, 0)):
        w = CodeWord(n, syms)
        if w not in owner:
            report.missing.append(w)
    return report


@dataclass
class SubsequenceReport:
    pi1: SetPartition
    pi2: SetPartition
    checked: int = 0
    failures: list[tuple[object, CodeWord, CodeWord]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def subsequence_theorem_check(
    pi1: SetPartition, pi2: SetPartition, n: int | None = None, bound: int = DEFAULT_BOUND
) -> SubsequenceReport:
    """For every T with phi(T) >= pi2: encode(pi2, T) is a subsequence of encode(pi1, T)."""
    if pi1 == pi2 or not refines(pi1, pi2):
        raise OrderError(f"{pi1} is not strictly finer than {pi2}")
    n = pi1.n if n is None else n
    report = SubsequenceReport(pi1, pi2)
    for t, p in trees_and_phi(n, bound):
        if not refines(pi2, p):
            continue
        short = encode(pi2, t, check=False)
        long = encode(pi1, t, check=False)
        report.checked += 1
        if not is_subsequence(short.symbols, long.symbols):
            report.failures.append((t, short, long))
    return report


def struck_words(pi: SetPartition, bound: int = DEFAULT_BOUND) -> dict[SetPartition, frozenset[CodeWord]]:
    """For each strict coarsening sigma of pi, the words of [n]^(|pi|-1)
    that encode(pi, .) assigns to trees in T_sigma."""
    out: dict[SetPartition, set[CodeWord]] = {s: set() for s in coarsenings(pi) if s != pi}
    for t, p in trees_and_phi(pi.n, bound):
        if p in out:
            out[p].add(encode(pi, t, check=False))
    return {s: frozenset(v) for s, v in out.items()}
