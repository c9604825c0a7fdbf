"""Full census over the 4,782,969 trees on [9] (about a minute per core).

    python3 scripts/extended_n9.py [--workers 4]
"""

import argparse
import time

from indegree_trees.census import EXTENDED_BOUND, brute_force_census, count_by_lambda, f_closed, integer_partitions
from indegree_trees.lattice import all_partitions


def main(workers: int) -> int:
    t0 = time.perf_counter()
    lam_map, pi_map = brute_force_census(9, bound=EXTENDED_BOUND, workers=workers)
    dt = time.perf_counter() - t0
    lam_bad = [str(l) for l in integer_partitions(8) if lam_map.get(l, 0) != count_by_lambda(l, 9)]
    pi_bad = [str(p) for p in all_partitions(9) if pi_map.get(p, 0) != f_closed(p)]
    print(f"trees: {sum(lam_map.values())}  time: {dt:.1f}s")
    print(f"lambda classes: {len(lam_map)}  mismatches: {lam_bad or 'none'}")
    print(f"set partitions: {len(pi_map)}  mismatches: {len(pi_bad)}")
    return 1 if lam_bad or pi_bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    raise SystemExit(main(ap.parse_args().workers))
