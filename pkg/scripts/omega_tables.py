"""Render the code sets Omega_pi of every 3-block partition of [2, n].

    python3 scripts/omega_tables.py --n 5
"""

import argparse
from dataclasses import dataclass

from indegree_trees.census import f_closed
from indegree_trees.lattice import all_partitions
from indegree_trees.omega import omega_set, render_grid


@dataclass(frozen=True)
class OmegaConfig:
    n: int = 5
    blocks: int = 3


def main(cfg: OmegaConfig) -> int:
    for pi in all_partitions(cfg.n):
        if len(pi) != cfg.blocks:
            continue
        words = omega_set(pi)
        print(f"pi = {pi}   |Omega| = {len(words)} = f(pi) = {f_closed(pi)}")
        print(render_grid(pi, words))
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=OmegaConfig.n)
    raise SystemExit(main(OmegaConfig(ap.parse_args().n)))
