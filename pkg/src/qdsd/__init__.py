"""Exact counts of direct-sum decompositions of finite vector spaces."""

from ._jit import NUMBA_ENABLED
from .dsdcount import (
    DsdCache,
    DsdCountTable,
    basis_count,
    build_table,
    dsd_bell,
    dsd_bell_star,
    dsd_count_for_signature,
    dsd_nonstar_complement,
    dsd_stirling,
    dsd_stirling_star,
    knuth_generalized_stirling,
)
from .partitions import (
    PartCountSignature,
    bell,
    set_partition_count,
    signatures_of,
    signatures_with_parts,
    stirling2,
    stirling2_summation,
)
from .qarith import disjoint_subspace_count, gaussian_binomial, q_factorial, q_integer

__version__ = "0.1.0"
