"""Littlewood-Richardson tableaux, Gelfand-Tsetlin patterns, hives and the
bijection between the Sundaram and Kwon branching models for sl(2n) -> sp(2n)."""
from .errors import HivebrError
from .kernels import BACKEND
from .partitions import (
    conjugate,
    content,
    even_partitions,
    is_even_partition,
    is_yamanouchi,
    normalize_partition,
    partial_sums,
)
from .tableaux import (
    SkewTableau,
    companion,
    companion_inverse,
    enumerate_dominant,
    enumerate_lr,
    insert_word,
    is_dominant,
    is_littlewood_richardson,
    make_skew_tableau,
    rectify,
    reverse_row_word,
    row_word,
    satisfies_kwon,
    satisfies_sundaram,
    schutzenberger,
    straight,
    superstandard,
)
from .gthive import (
    GTPattern,
    Hive,
    HiveTriple,
    contretableau_from_gt,
    count_hives,
    enumerate_hives,
    gt_from_tableau,
    gt_ne_diff,
    gt_row_diff,
    hive_embed,
    is_flagged,
    sundaram_flag,
    tableau_from_gt,
    validate_hive,
)
from .branching import (
    BijectionTrace,
    BranchingInstance,
    branching_coefficient,
    branching_map,
    character_decompose,
    lrk_set,
    lrs_set,
    symmetry_U,
    verify_instance,
)

__version__ = "0.1.0"
