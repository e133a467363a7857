"""crankmex: exact partition statistics and q-series identity checking.

The package certifies, by exact integer computation, that two refinements
of partition counting coincide: for every n and k, the number of partitions
of n with odd mex and k parts greater than 1 equals the number with
nonnegative crank and k parts greater than 1.  It does so twice over --
once by brute-force enumeration (:mod:`crankmex.partitions`) and once by
materializing truncated generating functions (:mod:`crankmex.identities`)
on the exact series arithmetic of :mod:`crankmex.qseries` -- and checks
that the two agree coefficient by coefficient.
"""

from .partitions import (
    CountTable,
    Partition,
    count_table,
    count_tables_both,
    enumerate_partitions,
    partition_count,
    verify_pentagonal,
    verify_ramanujan,
    verify_theorem2,
)
from .qseries import (
    Box,
    Monomial,
    QPoly,
    YQSeries,
    ZQSeries,
    gaussian_binomial,
    poch_finite,
    poch_infinite,
)
from .identities import (
    build_K,
    build_M_closed,
    build_M_structural,
    crank_gf_expanded,
    crank_gf_product,
    lemma_closed,
    lemma_sum,
    qbinomial_expansion,
    verify_M_equals_K,
    verify_cleared_form,
    verify_crank_distribution,
    verify_crank_gf_forms,
    verify_crank_q1_slice,
    verify_lemma,
    verify_zn,
    zN_left,
    zN_right_closed,
    zN_right_first_two,
    zN_right_third,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "Box",
    "CountTable",
    "Monomial",
    "Partition",
    "QPoly",
    "Verdict",
    "YQSeries",
    "ZQSeries",
    "build_K",
    "build_M_closed",
    "build_M_structural",
    "count_table",
    "count_tables_both",
    "crank_gf_expanded",
    "crank_gf_product",
    "enumerate_partitions",
    "gaussian_binomial",
    "lemma_closed",
    "lemma_sum",
    "partition_count",
    "poch_finite",
    "poch_infinite",
    "qbinomial_expansion",
    "verify_M_equals_K",
    "verify_cleared_form",
    "verify_crank_distribution",
    "verify_crank_gf_forms",
    "verify_crank_q1_slice",
    "verify_lemma",
    "verify_pentagonal",
    "verify_ramanujan",
    "verify_theorem2",
    "verify_zn",
    "zN_left",
    "zN_right_closed",
    "zN_right_first_two",
    "zN_right_third",
]
