"""Symplectic Pauli algebra, Bell-string transforms, and entropy utilities.

Single-qubit Pauli labels are ordered I < X < Y < Z, and every 4-entry (and
16-entry) probability vector in this package follows that order.  A Pauli
string of length n is written either as a plain string like ``"XZI"`` or as a
Bell string: a tuple of per-pair ``(x, z)`` bits with

    I = (0, 0),   X = (1, 0),   Y = (1, 1),   Z = (0, 1).

The same 2n bits label the n-pair Bell state obtained by applying the Pauli
string to one side of n perfect pairs, which is why the parity-check circuits
below act as pure bit maps on these labels.
"""

from __future__ import annotations

import math

import numpy as np

PAULI_LABELS = ("I", "X", "Y", "Z")
PAULI_INDEX = {label: i for i, label in enumerate(PAULI_LABELS)}

# (x, z) symplectic bits in label order.
PAULI_BITS = ((0, 0), (1, 0), (1, 1), (0, 1))
_BITS_TO_INDEX = {bits: i for i, bits in enumerate(PAULI_BITS)}

# Label index from (x, z) bits, usable with numpy fancy indexing.
LABEL_OF_BITS = np.array([[0, 3], [1, 2]], dtype=np.intp)

#: Largest deviation of a probability vector's sum from 1 accepted on input.
PROB_SUM_TOL = 1e-12


def pauli_to_bellstring(pauli: str):
    """Convert a Pauli string like ``"XZ"`` to a tuple of (x, z) bit pairs."""
    try:
        return tuple(PAULI_BITS[PAULI_INDEX[ch]] for ch in pauli)
    except KeyError as exc:
        raise ValueError(f"invalid Pauli letter in {pauli!r}") from exc


def bellstring_to_pauli(pairs) -> str:
    """Inverse of :func:`pauli_to_bellstring`."""
    return "".join(PAULI_LABELS[_BITS_TO_INDEX[(int(x), int(z))]] for x, z in pairs)


def _as_pairs(op):
    if isinstance(op, str):
        return pauli_to_bellstring(op)
    return tuple((int(x), int(z)) for x, z in op)


def symplectic_commutes(s, t) -> int:
    """Symplectic inner product of two equal-length Pauli strings.

    Returns 0 when the operators commute and 1 when they anticommute.  Inputs
    may be Pauli strings or sequences of (x, z) bit pairs.
    """
    sp, tp = _as_pairs(s), _as_pairs(t)
    if len(sp) != len(tp):
        raise ValueError(f"Pauli string length mismatch: {len(sp)} vs {len(tp)}")
    acc = 0
    for (sx, sz), (tx, tz) in zip(sp, tp):
        acc ^= (sx & tz) ^ (sz & tx)
    return acc


def commutation_sign(p, q) -> int:
    """+1 if the Pauli strings commute, -1 if they anticommute."""
    return 1 if symplectic_commutes(p, q) == 0 else -1


def binary_entropy(x: float) -> float:
    """h_b(x) = -x log2(x) - (1-x) log2(1-x) in bits; endpoints give 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary_entropy argument {x!r} outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def shannon_entropy(p) -> float:
    """Entropy -sum(p_i log2 p_i) in bits, with the 0 log 0 = 0 convention.

    Exact zeros are skipped by an explicit branch rather than clamped, so
    distributions with structural zeros give exact results.
    """
    arr = np.asarray(p, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError("probability vector has a negative entry")
    pos = arr[arr > 0.0]
    if pos.size == 0:
        return 0.0
    return float(-(pos * np.log2(pos)).sum())


def entropy_of_direct_sum(p0: float, s0: float, s1: float) -> float:
    """Entropy of a two-block mixture with block weights (p0, 1-p0).

    Orthogonal blocks with internal entropies s0 and s1 combine to
    p0*s0 + (1-p0)*s1 + h_b(p0).
    """
    if s0 < 0.0 or s1 < 0.0:
        raise ValueError("block entropies must be nonnegative")
    return p0 * s0 + (1.0 - p0) * s1 + binary_entropy(p0)


def as_prob_vec(values, *, tol: float = PROB_SUM_TOL) -> np.ndarray:
    """Validate ``values`` as a probability vector and return a float copy.

    Entries must be nonnegative and sum to 1 within ``tol``.  Inputs farther
    off are rejected rather than silently rescaled; use :func:`renormalize`
    when rescaling is intended.
    """
    arr = np.asarray(values, dtype=float).copy()
    if arr.ndim != 1:
        raise ValueError("probability vector must be one-dimensional")
    if np.any(arr < 0.0):
        raise ValueError("probability vector has a negative entry")
    total = float(arr.sum())
    if abs(total - 1.0) > tol:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return arr


def renormalize(values) -> np.ndarray:
    """Rescale nonnegative weights so they sum to 1."""
    arr = np.asarray(values, dtype=float).copy()
    if np.any(arr < 0.0):
        raise ValueError("weights must be nonnegative")
    total = float(arr.sum())
    if total <= 0.0:
        raise ValueError("cannot renormalize a vector with zero total mass")
    return arr / total


def bxor_map(s1, s2):
    """Bilateral XOR on two Bell-pair labels, control pair first.

    ((x1, z1), (x2, z2)) -> ((x1, z1^z2), (x1^x2, z2)).  Works elementwise on
    numpy bit arrays as well as on scalar bits.
    """
    x1, z1 = s1
    x2, z2 = s2
    return (x1, z1 ^ z2), (x1 ^ x2, z2)


def hadamard_map(s):
    """Transversal Hadamard on one Bell pair: swaps the (x, z) label bits."""
    x, z = s
    return (z, x)
