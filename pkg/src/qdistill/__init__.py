"""Yields of two-way entanglement distillation protocols.

The package computes, optimizes and Monte-Carlo-validates the achievable
rates of recurrence-style distillation protocols over Pauli channels and of
constant-weight erasure-conversion encodings over the amplitude damping
channel.
"""

from .ad import (
    ADYieldReport,
    best_ad_yield,
    rci_amp_damp,
    yield_dual_rail,
    yield_hamming1,
    yield_hamming2,
    yield_hamming2_star4,
    yield_triple_rail,
)
from .aepp import (
    AeppOutcome,
    aepp_branches,
    aepp_joint_distribution,
    aepp_star4_yield,
    aepp_zz_fallback,
)
from .channels import (
    bilateral_rotate,
    entanglement_fidelity,
    make_depolarizing,
    make_xz,
    permutation_group,
    ppt_bell_diagonal,
    ppt_one_pair,
    reachable_permutations,
)
from .combined import (
    ProtocolPlan,
    evaluate_plan,
    optimize_plan,
    plan_yield,
    sweep_combined,
)
from .curves import YieldCurve, format_csv, parse_csv, read_csv, write_csv
from .mc import McConfig, McReport, simulate_aepp_checks, simulate_recurrence
from .pauli import (
    PAULI_LABELS,
    as_prob_vec,
    binary_entropy,
    bxor_map,
    commutation_sign,
    entropy_of_direct_sum,
    hadamard_map,
    renormalize,
    shannon_entropy,
    symplectic_commutes,
)
from .recurrence import (
    RecurrenceStep,
    greedy_choice,
    greedy_sequence,
    macchiavello_sequence,
    recurrence_step,
)
from .vv05 import (
    P_EVEN,
    P_ODD,
    VVBreakdown,
    hashing_yield,
    partition_even_odd,
    two_pair_index,
    vv_best_over_permutations,
    vv_yield_general,
    vv_yield_iid,
)

__version__ = "0.1.0"
