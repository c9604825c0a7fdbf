"""Labelled trees counted by indegree sequence, generalized Pruefer codes,
and the partition-lattice machinery behind them."""

from .census import brute_force_census, count_by_lambda, f_closed, g_closed, trees_with_phi
from .codec import decode, encode, is_subsequence, phi_prime
from .involution import swap_involution
from .lattice import all_partitions, coarsenings, covers, mobius, refines, stirling2
from .model import (
    CodeWord,
    IntegerPartition,
    LabelledTree,
    SetPartition,
    parse_code,
    parse_partition,
    parse_tree,
    partition_type,
)
from .omega import omega_set
from .treemap import decompose, indegree_partition, orient_edges, phi

__version__ = "0.1.0"
