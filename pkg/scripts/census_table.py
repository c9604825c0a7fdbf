"""Print the indegree census for n = 1..N next to the closed form.

    python3 scripts/census_table.py --max-n 8 [--workers 4]
"""

import argparse
import time
from dataclasses import dataclass

from indegree_trees.census import DEFAULT_BOUND, EXTENDED_BOUND, brute_force_census, count_by_lambda, integer_partitions


@dataclass(frozen=True)
class CensusConfig:
    max_n: int = 7
    workers: int = 1


def main(cfg: CensusConfig) -> int:
    bound = EXTENDED_BOUND if cfg.max_n > DEFAULT_BOUND else DEFAULT_BOUND
    bad = 0
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        lam_map, _ = brute_force_census(n, bound=bound, workers=cfg.workers)
        dt = time.perf_counter() - t0
        print(f"n = {n}  ({sum(lam_map.values())} trees, {dt:.2f}s)")
        for lam in integer_partitions(n - 1):
            got, want = lam_map.get(lam, 0), count_by_lambda(lam, n)
            bad += got != want
            print(f"  {str(lam):<18} {got:>10} {want:>10} {'' if got == want else 'MISMATCH'}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    ap.add_argument("--workers", type=int, default=CensusConfig.workers)
    a = ap.parse_args()
    raise SystemExit(main(CensusConfig(a.max_n, a.workers)))
