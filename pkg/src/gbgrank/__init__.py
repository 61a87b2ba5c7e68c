"""Partition statistics modulo primes: residue diagrams, GBG-rank, Littlewood
decomposition and exact q-series generating functions with enumeration checks."""

from .genfun import (
    FormulaParams,
    bg_two_factor_formula,
    g_formula,
    g_omega_formula,
    gsc2_formula,
    gsc_odd_formula,
    gtilde_formula,
)
from .littlewood import Decomposition, core_norm_from_n, decompose, is_t_core, recompose, t_core_by_rim_hooks
from .partitions import Partition, conjugate, enumerate_bounded, enumerate_self_conjugate, factor_rows
from .qseries import Series, gaussian_binomial, inv_pochhammer, monomial, pochhammer
from .residue import as_integer, as_k_omega_j, chi, gbg_rank, n_vector, residue_counts, word_segment

__version__ = "0.1.0"
