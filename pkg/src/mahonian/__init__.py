"""Permutation statistics toolkit.

Inversion tables with three decode/encode schemes (inv-insertion,
maj-insertion, rightmost-insertion), the Mahonian distribution b(n, k),
joint (inv, maj) matrices, and exhaustive desk-scale verification of the
equidistribution and symmetry identities.
"""

from .distributions import (
    DP_CAP_DEFAULT,
    DistributionVector,
    JointMatrix,
    check_symmetry,
    joint_distribution,
    mahonian_numbers,
    stat_distribution,
    table_stat_joint,
)
from .permutations import (
    ENUM_CAP_DEFAULT,
    Permutation,
    all_permutations,
    descent_positions,
    identity,
    inv_stat,
    inverse,
    maj_stat,
    make_permutation,
)
from .tables import (
    CODECS,
    DECODERS,
    ENCODERS,
    InsertionOutcome,
    InversionTable,
    all_tables,
    decode_inv,
    decode_maj,
    decode_rightmost,
    encode_inv,
    encode_maj,
    encode_rightmost,
    make_table,
    maj_insertion_outcome,
    table_ascent_sum,
    table_sum,
)
from .verify import CHECKS, CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # permutations
    "Permutation",
    "ENUM_CAP_DEFAULT",
    "make_permutation",
    "identity",
    "inverse",
    "descent_positions",
    "inv_stat",
    "maj_stat",
    "all_permutations",
    # tables and codecs
    "InversionTable",
    "InsertionOutcome",
    "CODECS",
    "DECODERS",
    "ENCODERS",
    "make_table",
    "all_tables",
    "decode_inv",
    "encode_inv",
    "maj_insertion_outcome",
    "decode_maj",
    "encode_maj",
    "decode_rightmost",
    "encode_rightmost",
    "table_sum",
    "table_ascent_sum",
    # distributions
    "DP_CAP_DEFAULT",
    "DistributionVector",
    "JointMatrix",
    "mahonian_numbers",
    "stat_distribution",
    "joint_distribution",
    "table_stat_joint",
    "check_symmetry",
    # verification
    "CheckResult",
    "CHECKS",
    "run_checks",
]
