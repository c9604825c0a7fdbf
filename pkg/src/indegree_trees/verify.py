"""Exhaustive verification suites, shared by the CLI and the scripts.

Each suite returns a list of ``Check`` records; a suite passes iff all
of its checks do.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import census, codec, lattice, omega
from .involution import swap_involution
from .model import CodeWord, SetPartition, parse_partition, parse_tree
from .treemap import phi

FIG1_TREE = "9\n1 7\n3 7\n1 9\n6 9\n5 9\n2 5\n4 5\n5 8\n"
FIG1_PHI = "8/5,6,9/3,7/2,4"
FIG1_SIGMA = "8/7/6/5,9/3/2,4"


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _first(items, limit=3) -> str:
    items = list(items)
    head = ", ".join(map(str, items[:limit]))
    return head + (" ..." if len(items) > limit else "")


def suite_examples(n: int) -> list[Check]:
    t = parse_tree(FIG1_TREE)
    pi = phi(t)
    sigma = parse_partition(FIG1_SIGMA, 9)
    w_sigma = codec.encode(sigma, t)
    w_pi = codec.encode(pi, t)
    return [
        Check("phi(fig1) = 8/5,6,9/3,7/2,4", str(pi) == FIG1_PHI, str(pi)),
        Check("encode(8/7/6/5,9/3/2,4, fig1) = 5,9,7,1,5", str(w_sigma) == "5,9,7,1,5", str(w_sigma)),
        Check("encode(phi(fig1), fig1) = 5,1,5", str(w_pi) == "5,1,5", str(w_pi)),
        Check("decode inverts both", codec.decode(sigma, w_sigma) == t and codec.decode(pi, w_pi) == t),
    ]


def suite_census(n: int) -> list[Check]:
    out = []
    for m in range(1, n + 1):
        lam_map, pi_map = census.brute_force_census(m, bound=max(m, census.DEFAULT_BOUND))
        bad_lam = [lam for lam in census.integer_partitions(m - 1)
                   if lam_map.get(lam, 0) != census.count_by_lambda(lam, m)]
        bad_pi = [p for p in lattice.all_partitions(m) if pi_map.get(p, 0) != census.f_closed(p)]
        total = sum(census.count_by_lambda(lam, m) for lam in census.integer_partitions(m - 1))
        cayley = m ** (m - 2) if m >= 2 else 1
        out.append(Check(f"n={m}: lambda census = closed form", not bad_lam, _first(bad_lam)))
        out.append(Check(f"n={m}: pi census = (n-1)!/(n-|pi|)!", not bad_pi, _first(bad_pi)))
        out.append(Check(f"n={m}: sum of a_lambda = n^(n-2)", total == cayley, f"{total} vs {cayley}"))
        eq2 = all(census.count_by_lambda(p.type(), m) == census.f_closed(p) * census.partitions_of_type(p.type(), m)
                  for p in lattice.all_partitions(m))
        out.append(Check(f"n={m}: a_lambda = f(pi) * |Pi_lambda|", eq2))
    return out


def codec_bijection_failures(sigma: SetPartition) -> list[str]:
    """Empty iff encode(sigma, .) is a bijection T_{>=sigma} <-> [n]^(k-1)
    with decode as its two-sided inverse."""
    n = sigma.n
    k = len(sigma)
    seen: dict[CodeWord, object] = {}
    problems = []
    for t, p in census.trees_and_phi(n):
        if not lattice.refines(sigma, p):
            continue
        w = codec.encode(sigma, t, check=False)
        if w in seen:
            problems.append(f"collision on {w}")
        seen[w] = t
        if codec.decode(sigma, w) != t:
            problems.append(f"decode(encode(T)) != T for word {w}")
    expected = n ** (k - 1) if k else 1
    if len(seen) != expected:
        problems.append(f"image has {len(seen)} words, expected {expected}")
    for syms in itertools.product(range(1, n + 1), repeat=max(k - 1, 0)):
        w = CodeWord(n, syms)
        t = codec.decode(sigma, w)
        if not lattice.refines(sigma, phi(t)) or codec.encode(sigma, t, check=False) != w:
            problems.append(f"encode(decode(w)) != w for {w}")
    return problems


def suite_codec(n: int) -> list[Check]:
    out = suite_examples(n)
    for m in range(1, n + 1):
        bad = [(str(s), p) for s in lattice.all_partitions(m) for p in codec_bijection_failures(s)]
        out.append(Check(f"n={m}: encode is a bijection for every sigma", not bad, _first(bad)))
    return out


def involution_failures(m: int) -> list[str]:
    problems = []
    fibre = Counter(p for _, p in census.trees_and_phi(m))
    for t, p in census.trees_and_phi(m):
        for i in range(2, m):
            if p.same_block(i, i + 1):
                continue
            t2 = swap_involution(t, i)
            # s_i(pi) == pi only when i, i+1 are both singletons; the two
            # fibres coincide there and a symmetric tree may be fixed
            if t2 == t and p.swap(i) != p:
                problems.append(f"fixed point i={i}")
            if swap_involution(t2, i) != t:
                problems.append(f"not an involution i={i}")
            if phi(t2) != p.swap(i):
                problems.append(f"phi not equivariant i={i}")
            if fibre[p] != fibre[p.swap(i)]:
                problems.append(f"|T_pi| != |T_s(pi)| for {p}, i={i}")
    return problems


def suite_involution(n: int) -> list[Check]:
    out = []
    for m in range(3, n + 1):
        bad = involution_failures(m)
        out.append(Check(f"n={m}: swap involution (involutive, fixed-point free, equivariant)", not bad, _first(bad)))
    return out


def suite_lattice(n: int) -> list[Check]:
    out = []
    for m in range(1, n + 1):
        parts = list(lattice.all_partitions(m))
        ok_order = True
        for a in parts:
            if not lattice.refines(a, a):
                ok_order = False
            for b in parts:
                ab, ba = lattice.refines(a, b), lattice.refines(b, a)
                if ab and ba and a != b:
                    ok_order = False
        if m <= 5:
            for a, b, c in itertools.product(parts, repeat=3):
                if lattice.refines(a, b) and lattice.refines(b, c) and not lattice.refines(a, c):
                    ok_order = False
        out.append(Check(f"n={m}: refinement is a partial order", ok_order))
        bell_ok = len(parts) == lattice.bell(m - 1) and all(
            len(list(lattice.coarsenings(s))) == lattice.bell(len(s)) for s in parts)
        out.append(Check(f"n={m}: Bell counts of Pi and of every [sigma, 1]", bell_ok))
        mob_ok = True
        for s in parts:
            mu = lattice.mobius_from(s)
            if len(s) > 1 and sum(mu.values()) != 0:
                mob_ok = False
            if any(v != lattice.mobius_product(s, t) for t, v in mu.items()):
                mob_ok = False
        out.append(Check(f"n={m}: Moebius recursion and product formula agree", mob_ok))
        eq3 = all(lattice_sum == census.g_closed(s) for s in parts
                  for lattice_sum in [census.coarser_sum(s)])
        out.append(Check(f"n={m}: sum_(pi>=sigma) f(pi) = n^(|sigma|-1)", eq3))
        if m <= 6:
            solved = census.solve_f_by_mobius(m)
            out.append(Check(f"n={m}: Moebius inversion recovers f",
                             all(v == census.f_closed(p) for p, v in solved.items())))
    stir = all(lhs == rhs for k in range(1, 9) for nn in range(1, 13)
               for lhs, rhs in [lattice.stirling_identity_check(k, nn)])
    out.append(Check("Stirling identity for k<=8, n<=12", stir))
    return out


def suite_recursion(n: int) -> list[Check]:
    out = []
    for m in range(3, n + 1):
        eligible = [p for p in lattice.all_partitions(m) if p.same_block(m, m - 1)]
        bad = [str(p) for p in eligible if not census.recursion_check(p)]
        out.append(Check(f"n={m}: contraction recursion on {len(eligible)} partitions", not bad, _first(bad)))
    return out


def suite_omega(n: int) -> list[Check]:
    out = []
    pi = parse_partition("4,5/3/2", 5)
    words = {str(w) for w in omega.omega_set(pi)}
    expected = {f"{w[0]},{w[1]}" for w in "11 12 14 21 22 24 31 32 34 41 42 43".split()}
    out.append(Check("Omega_{45/3/2} matches the worked table", words == expected, _first(sorted(words), 12)))
    for m in range(1, n + 1):
        parts = list(lattice.all_partitions(m))
        size_bad = [str(p) for p in parts if len(omega.omega_set(p)) != census.f_closed(p)]
        out.append(Check(f"n={m}: |Omega_pi| = f(pi)", not size_bad, _first(size_bad)))
        cube_bad = [str(s) for s in parts if not omega.cube_partition_check(s).ok]
        out.append(Check(f"n={m}: fibres tile the code cube for every sigma", not cube_bad, _first(cube_bad)))
        sub_bad = [f"{a} < {b}" for a in parts for b in lattice.covers(a)
                   if not omega.subsequence_theorem_check(a, b).ok]
        out.append(Check(f"n={m}: subsequence property on all cover pairs", not sub_bad, _first(sub_bad)))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "census": suite_census,
    "codec": suite_codec,
    "involution": suite_involution,
    "lattice": suite_lattice,
    "recursion": suite_recursion,
    "omega": suite_omega,
}


def run(suite: str, n: int) -> list[Check]:
    if suite == "all":
        return [c for name in SUITES for c in SUITES[name](n)]
    return SUITES[suite](n)
