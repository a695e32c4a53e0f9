"""Adaptive four-pair purification: ZZZZ check, then XXXX or a ZZ fallback.

Four noisy Bell pairs are compared with a ZZZZ parity check (syndrome b1,
consuming the fourth pair).  On b1 = 0 an XXXX check follows (syndrome b2,
consuming the third pair); b2 = 0 leaves two surviving pairs carrying a
correlated two-pair state, while the b2 = 1 state is PPT and gets discarded.
On b1 = 1 a ZZ check on the first two pairs localizes the error instead and
exactly one pair survives, carrying the distribution of an accepted Z-type
recurrence step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .pauli import PAULI_BITS
from .recurrence import greedy_sequence
from .vv05 import vv_best_over_permutations, vv_yield_general


def aepp_joint_distribution(d, b1: int, b2: int):
    """Branch probability and surviving two-pair state after both checks.

    For i.i.d. single-pair error probabilities ``d``, the (b1, b2) syndrome
    branch of the ZZZZ-then-XXXX cascade leaves the first two pairs with
    labels (r_x, r_z) and (t_x, t_z).  Expressing the four physical error
    pairs through the syndromes and the surviving labels (the check circuits
    are invertible bit maps) gives, summed over the two free bits x1, z1,

        x2 = x1 ^ r_x ^ t_x    z2 = z1 ^ r_z ^ t_z
        x3 = x1 ^ r_x          z3 = b2 ^ z1 ^ t_z
        x4 = b1 ^ x1 ^ t_x     z4 = z1 ^ r_z

    Returns the total branch mass and the normalized 16-entry table over
    (r, t); a zero-mass branch returns a zero table.
    """
    if b1 not in (0, 1) or b2 not in (0, 1):
        raise ValueError("syndrome bits must be 0 or 1")
    d = np.asarray(d, dtype=float)
    p = np.empty((2, 2))
    for label, (x, z) in enumerate(PAULI_BITS):
        p[x, z] = d[label]

    q = np.zeros(16)
    for r in range(4):
        rx, rz = PAULI_BITS[r]
        for t in range(4):
            tx, tz = PAULI_BITS[t]
            mass = 0.0
            for x1 in (0, 1):
                for z1 in (0, 1):
                    mass += (
                        p[x1, z1]
                        * p[x1 ^ rx ^ tx, z1 ^ rz ^ tz]
                        * p[x1 ^ rx, b2 ^ z1 ^ tz]
                        * p[b1 ^ x1 ^ tx, z1 ^ rz]
                    )
            q[4 * r + t] = mass
    prob = float(q.sum())
    dist = q / prob if prob > 0.0 else np.zeros(16)
    return prob, dist


def aepp_zz_fallback(d) -> np.ndarray:
    """Distribution of the single pair surviving the b1 = 1 branch.

    Identical to the accepted output of one Z-type recurrence step:

        [(p_I^2 + p_Z^2), (p_X^2 + p_Y^2), 2 p_Y p_X, 2 p_I p_Z] / p_accept

    with p_accept = (p_I + p_Z)^2 + (p_X + p_Y)^2.
    """
    d = np.asarray(d, dtype=float)
    p_accept = (d[0] + d[3]) ** 2 + (d[1] + d[2]) ** 2
    return np.array([
        (d[0] * d[0] + d[3] * d[3]) / p_accept,
        (d[1] * d[1] + d[2] * d[2]) / p_accept,
        2.0 * d[2] * d[1] / p_accept,
        2.0 * d[0] * d[3] / p_accept,
    ])


@dataclass(frozen=True)
class AeppOutcome:
    """Branch probabilities and post-selected states of the cascade."""

    prob_b1_0_b2_0: float
    dist_b1_0_b2_0: np.ndarray
    prob_b1_0_b2_1: float
    prob_b1_1_b2p_0: float
    prob_b1_1_b2p_1: float
    accepted_single: np.ndarray


def aepp_branches(d) -> AeppOutcome:
    """All branch probabilities plus the b1 = 1 survivor distribution.

    The two ZZ-fallback outcomes are equiprobable: writing s = p_I + p_Z and
    w = p_X + p_Y, each occurs with probability (s^2 + w^2) * 2sw.
    """
    d = np.asarray(d, dtype=float)
    p00, t00 = aepp_joint_distribution(d, 0, 0)
    p01, _ = aepp_joint_distribution(d, 0, 1)
    s = d[0] + d[3]
    w = d[1] + d[2]
    half = (s * s + w * w) * (2.0 * s * w)
    return AeppOutcome(
        prob_b1_0_b2_0=p00,
        dist_b1_0_b2_0=t00,
        prob_b1_0_b2_1=p01,
        prob_b1_1_b2p_0=half,
        prob_b1_1_b2p_1=half,
        accepted_single=aepp_zz_fallback(d),
    )


@lru_cache(maxsize=4096)
def _branches_cached(d_key: tuple) -> AeppOutcome:
    return aepp_branches(np.array(d_key))


@lru_cache(maxsize=8192)
def _post_chain_value(d_key: tuple, rounds: int) -> float:
    """Rate-weighted yield of ``rounds`` greedy steps followed by the
    permutation-optimized i.i.d. protocol yield."""
    cur = np.array(d_key)
    rate = 1.0
    for step in greedy_sequence(cur, rounds):
        rate *= step.p_pass / 2.0
        cur = step.accepted
    return rate * vv_best_over_permutations(cur)[0]


def aepp_star4_yield(d, n2: int, n3: int) -> float:
    """Per-input-pair yield of the cascade with post-processing rounds.

    Of each group of four pairs: the (b1, b2) = (0, 0) branch keeps two
    pairs whose correlated state goes to the general two-pair protocol
    yield; the (0, 1) branch is discarded (the state is PPT); each b1 = 1
    sub-branch keeps one pair that passes through n2 (fallback outcome 0)
    or n3 (outcome 1) further greedy rounds before the permutation-optimized
    i.i.d. protocol.  Branch values are weighted by branch probability and
    surviving pair count, then normalized by the four input pairs.
    """
    if n2 < 0 or n3 < 0:
        raise ValueError("post-processing round counts must be nonnegative")
    d = np.asarray(d, dtype=float)
    out = _branches_cached(tuple(d))
    total = 2.0 * out.prob_b1_0_b2_0 * vv_yield_general(out.dist_b1_0_b2_0).yield_per_pair
    single_key = tuple(out.accepted_single)
    total += out.prob_b1_1_b2p_0 * _post_chain_value(single_key, n2)
    total += out.prob_b1_1_b2p_1 * _post_chain_value(single_key, n3)
    return 0.25 * total
