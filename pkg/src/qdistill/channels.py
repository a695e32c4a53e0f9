"""Pauli channel families, Bell-diagonal state manipulations, and PPT tests.

A single-qubit Pauli channel, and equivalently the one-pair Bell-diagonal
state it produces, is a probability 4-vector ``[p_I, p_X, p_Y, p_Z]``.  Pairs
of pairs are 16-vectors in row-major (first pair, second pair) order, and
general n-pair Bell-diagonal states are 4^n-vectors indexed base-4 by the
per-pair label, most significant pair first.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .pauli import PAULI_INDEX

# Bilateral pi/2 rotations permute the error labels: the X rotation swaps
# I<->X, the Y rotation swaps X<->Z, and the Z rotation swaps I<->Z; the Y
# label is fixed by all three.  Local Pauli operations translate the label by
# the applied Pauli instead.  Entry perm[i] is the source index of slot i.
_ROTATION_PERMS = {
    "X": (1, 0, 2, 3),
    "Y": (0, 3, 2, 1),
    "Z": (3, 1, 2, 0),
}
_LOCAL_PAULI_PERMS = {
    "X": (1, 0, 3, 2),
    "Y": (2, 3, 0, 1),
    "Z": (3, 2, 1, 0),
}


def make_depolarizing(p: float) -> np.ndarray:
    """Depolarizing channel vector [1-p, p/3, p/3, p/3]."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"depolarizing parameter {p!r} outside [0, 1]")
    third = p / 3.0
    return np.array([1.0 - p, third, third, third])


def make_xz(p: float) -> np.ndarray:
    """Channel applying X and Z with equal weight: [1-p, p/2, 0, p/2]."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel parameter {p!r} outside [0, 1]")
    half = p / 2.0
    return np.array([1.0 - p, half, 0.0, half])


def entanglement_fidelity(d) -> float:
    """Overlap of the noisy pair with the perfect Bell state, i.e. p_I."""
    return float(np.asarray(d, dtype=float)[0])


def bilateral_rotate(d, q: str) -> np.ndarray:
    """Apply the bilateral rotation generated by Pauli ``q`` in {X, Y, Z}.

    Each rotation is an involutive permutation of the probability vector;
    the X rotation maps [p_I, p_X, p_Y, p_Z] to [p_X, p_I, p_Y, p_Z].
    """
    if q not in _ROTATION_PERMS:
        raise ValueError(f"bilateral rotation must be one of X, Y, Z, got {q!r}")
    arr = np.asarray(d, dtype=float)
    return arr[list(_ROTATION_PERMS[q])]


def _compose(p, q):
    # apply q first, then p
    return tuple(p[q[i]] for i in range(4))


@lru_cache(maxsize=2)
def permutation_group(include_local_paulis: bool = True):
    """Closure of the label permutations reachable by bilateral rotations.

    With local Pauli operations included the three rotations generate the
    full symmetric group on the four labels (24 permutations); the rotations
    alone generate only the six permutations fixing the Y label.
    """
    gens = list(_ROTATION_PERMS.values())
    if include_local_paulis:
        gens += list(_LOCAL_PAULI_PERMS.values())
    seen = {(0, 1, 2, 3)}
    frontier = [(0, 1, 2, 3)]
    while frontier:
        new = []
        for perm in frontier:
            for g in gens:
                c = _compose(g, perm)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return tuple(sorted(seen))


def reachable_permutations(d, *, rotations_only: bool = False):
    """All distinct reshufflings of ``d`` reachable by free local operations.

    By default both bilateral rotations and local Paulis are allowed, which
    realizes every permutation of the 4-vector.  ``rotations_only`` restricts
    to the smaller group generated by the rotations alone.
    """
    arr = np.asarray(d, dtype=float)
    seen = {}
    for perm in permutation_group(not rotations_only):
        key = tuple(arr[i] for i in perm)
        if key not in seen:
            seen[key] = np.array(key)
    return [seen[key] for key in sorted(seen)]


def ppt_one_pair(d, *, tol: float = 1e-12) -> bool:
    """Positive-partial-transpose test for a one-pair Bell-diagonal state.

    The partial transpose of the state with vector [p_I, p_X, p_Y, p_Z] has
    closed-form eigenvalues q1 +/- q4 and q2 +/- q3 where q1 = (p_I+p_Z)/2,
    q2 = (p_X+p_Y)/2, q3 = (p_I-p_Z)/2 and q4 = (p_X-p_Y)/2.  The state is
    PPT, hence undistillable, exactly when all four are nonnegative.
    """
    arr = np.asarray(d, dtype=float)
    q1 = (arr[0] + arr[3]) / 2.0
    q2 = (arr[1] + arr[2]) / 2.0
    q3 = (arr[0] - arr[3]) / 2.0
    q4 = (arr[1] - arr[2]) / 2.0
    eigs = (q1 + q4, q1 - q4, q2 + q3, q2 - q3)
    return min(eigs) >= -tol


# Per-pair sign factor of the partial transpose in the Bell basis: entry
# (a, b) is -1 exactly when labels a and b differ by Y.
_PT_SIGN = np.ones((4, 4))
for _a in range(4):
    for _b in range(4):
        if {_a, _b} in ({PAULI_INDEX["I"], PAULI_INDEX["Y"]},
                        {PAULI_INDEX["X"], PAULI_INDEX["Z"]}):
            _PT_SIGN[_a, _b] = -1.0


def ppt_bell_diagonal(alpha, *, tol: float = 1e-12) -> bool:
    """PPT test for an n-pair Bell-diagonal state given its 4^n-vector.

    The partial transpose is again Bell-diagonal; its eigenvalue at label m
    is ``sum_s alpha_s * (-1)**(number of Y factors in s XOR m)``.  All 4^n
    eigenvalues are checked, so n is capped at 8.
    """
    arr = np.asarray(alpha, dtype=float)
    n = max(round(np.log2(arr.size) / 2), 1)
    if 4**n != arr.size:
        raise ValueError(f"vector length {arr.size} is not a power of 4")
    if n > 8:
        raise ValueError(f"PPT enumeration over 4^{n} labels exceeds the n <= 8 cap")
    tens = arr.reshape((4,) * n)
    for axis in range(n):
        tens = np.moveaxis(np.tensordot(_PT_SIGN, tens, axes=([1], [axis])), 0, axis)
    return float(tens.min()) >= -tol
