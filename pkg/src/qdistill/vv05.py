"""Interpolation of recurrence and hashing (the VV05 protocol yield).

The protocol first determines, by asymptotic random parity checks (partial
breeding), whether the joint error on each block of two pairs commutes with
ZZ.  Commuting blocks go straight to hashing.  Anticommuting blocks get one
more local two-sided Z measurement that collapses them to a rank-2 state
before hashing.  The bookkeeping below prices the partial-breeding step at
h_b(p_even) consumed ebits per two pairs and the finite check at one pair.

Yields are per input Bell pair and may be negative; callers that compose
protocols decide whether to clamp.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import permutation_group
from .pauli import PAULI_LABELS, PAULI_INDEX, binary_entropy, shannon_entropy

TWO_PAIR_LABELS = tuple(a + b for a in PAULI_LABELS for b in PAULI_LABELS)

# Two-pair errors commuting (even) and anticommuting (odd) with ZZ.
P_EVEN = ("IZ", "ZI", "XX", "YY", "ZZ", "II", "XY", "YX")
P_ODD = ("XZ", "ZX", "XI", "YI", "IX", "IY", "YZ", "ZY")


def two_pair_index(pair: str) -> int:
    """Row-major index of a two-letter Pauli label in a 16-vector."""
    return 4 * PAULI_INDEX[pair[0]] + PAULI_INDEX[pair[1]]


_EVEN_IDX = np.array([two_pair_index(p) for p in P_EVEN])
_ODD_IDX = np.array([two_pair_index(p) for p in P_ODD])

# Groupings of the odd sector after the follow-up Z measurement on the first
# pair.  Outcome 0 leaves a mixture of X- and Y-type survivors, outcome 1 a
# mixture of Z-type and clean survivors; within each outcome the two listed
# labels are merged into one rank of the surviving state.
_ODD0_TOP = (two_pair_index("ZX"), two_pair_index("IX"))
_ODD0_ALL = _ODD0_TOP + (two_pair_index("ZY"), two_pair_index("IY"))
_ODD1_TOP = (two_pair_index("XZ"), two_pair_index("YZ"))
_ODD1_ALL = _ODD1_TOP + (two_pair_index("XI"), two_pair_index("YI"))


def _clip01(x: float) -> float:
    return min(1.0, max(0.0, x))


def hashing_yield(d) -> float:
    """Hashing rate for an i.i.d. single-pair channel: 1 - h([p_I..p_Z])."""
    return 1.0 - shannon_entropy(d)


def partition_even_odd(t):
    """Split a two-pair distribution by commutation with ZZ.

    Returns (p_even, even_dist, p_odd, odd_dist) with each 8-entry block in
    the order of :data:`P_EVEN` / :data:`P_ODD`, renormalized.  A zero-mass
    side comes back as a zero vector with mass 0.
    """
    t = np.asarray(t, dtype=float)
    even = t[_EVEN_IDX]
    odd = t[_ODD_IDX]
    p_even = float(even.sum())
    p_odd = float(odd.sum())
    even = even / p_even if p_even > 0.0 else np.zeros(8)
    odd = odd / p_odd if p_odd > 0.0 else np.zeros(8)
    return p_even, even, p_odd, odd


@dataclass(frozen=True)
class VVBreakdown:
    """Branch probabilities, branch entropies, and the resulting yield."""

    p_even: float
    p_odd: float
    p0: float
    p1: float
    s_even: float
    s_odd0: float
    s_odd1: float
    yield_per_pair: float


def vv_yield_general(t) -> VVBreakdown:
    """Yield of the protocol on an arbitrary two-pair Bell-diagonal state.

    Per input Bell pair:

        p_even * (1 - S_even / 2) - h_b(p_even) / 2
        + (p0 / 2) * (1 - S_odd0) + (p1 / 2) * (1 - S_odd1)

    where S_even is the entropy of the renormalized even block and S_odd0,
    S_odd1 are the binary entropies of the two rank-2 survivors of the odd
    branch.  Zero-mass branches contribute 0.  The result may be negative
    and is reported as computed.
    """
    t = np.asarray(t, dtype=float)
    p_even, even, p_odd, _ = partition_even_odd(t)
    s_even = shannon_entropy(even) if p_even > 0.0 else 0.0

    p0 = float(t[list(_ODD0_ALL)].sum())
    p1 = float(t[list(_ODD1_ALL)].sum())
    s_odd0 = binary_entropy(_clip01(t[list(_ODD0_TOP)].sum() / p0)) if p0 > 0.0 else 0.0
    s_odd1 = binary_entropy(_clip01(t[list(_ODD1_TOP)].sum() / p1)) if p1 > 0.0 else 0.0

    value = (
        p_even * (1.0 - s_even / 2.0)
        - binary_entropy(_clip01(p_even)) / 2.0
        + 0.5 * p0 * (1.0 - s_odd0)
        + 0.5 * p1 * (1.0 - s_odd1)
    )
    return VVBreakdown(p_even=p_even, p_odd=p_odd, p0=p0, p1=p1, s_even=s_even,
                       s_odd0=s_odd0, s_odd1=s_odd1, yield_per_pair=value)


def vv_yield_iid(d) -> float:
    """Yield on two i.i.d. uses of a single-pair channel, in closed form.

    Equals the hashing rate plus a nonnegative correction:

        1 - h(d) + (p_odd / 4) * [h_b(p_I / (p_I + p_Z)) + h_b(p_X / (p_X + p_Y))]

    with p_odd = 2 (p_I + p_Z)(p_X + p_Y).  Degenerate denominators
    contribute 0.
    """
    d = np.asarray(d, dtype=float)
    s_iz = d[0] + d[3]
    s_xy = d[1] + d[2]
    correction = 0.0
    if s_iz > 0.0:
        correction += binary_entropy(_clip01(d[0] / s_iz))
    if s_xy > 0.0:
        correction += binary_entropy(_clip01(d[1] / s_xy))
    p_odd = 2.0 * s_iz * s_xy
    return hashing_yield(d) + 0.25 * p_odd * correction


def vv_best_over_permutations(d, *, rotations_only: bool = False):
    """Best i.i.d. yield over label permutations of ``d``.

    Bilateral rotations and local Paulis let the parties permute the channel
    vector for free, and the closed-form yield is not permutation invariant.
    Returns (best yield, permutation), where entry i of the permutation is
    the source index of slot i; ties keep the lexicographically smallest
    permutation, so the identity wins when all are equal.
    """
    d = np.asarray(d, dtype=float)
    best_value = -np.inf
    best_perm = None
    for perm in permutation_group(not rotations_only):
        value = vv_yield_iid(d[list(perm)])
        if value > best_value:
            best_value = value
            best_perm = perm
    return best_value, best_perm
