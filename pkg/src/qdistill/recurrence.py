"""Two-pair recurrence steps and check-sequencing strategies.

One recurrence step consumes two noisy Bell pairs: a check circuit compares
the pairs, both sides measure the second pair, and the first pair is kept
only when the local outcomes agree.  The surviving pair sees a new, usually
better, Pauli channel; the rejected pair's channel is symmetric enough to be
PPT and therefore worthless on its own.

The check may be of X, Y or Z type.  Greedy sequencing always checks the
Pauli whose error probability is currently smallest, which maximizes (and
strictly improves, for fidelity above 1/2) the post-step fidelity.  The
classic alternating Z, Y, Z, Y schedule is the Macchiavello recurrence.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .pauli import PAULI_BITS, _BITS_TO_INDEX

CHECKS = ("X", "Y", "Z")
_CHECK_INDEX = {"X": 1, "Y": 2, "Z": 3}
# Cyclic successors X -> Y -> Z -> X of the check label.
_CYCLIC = {"X": ("Y", "Z"), "Y": ("Z", "X"), "Z": ("X", "Y")}
# Destination labels of the 2*p_I*p_Q and the cross-term mass, per check.
_CROSS_DEST = {"X": ("Z", "Y"), "Y": ("Y", "Z"), "Z": ("Z", "Y")}

_LOW_FIDELITY_MSG = (
    "greedy recurrence applied to a state with entanglement fidelity <= 1/2; "
    "the fidelity-improvement guarantees do not apply"
)


def check_string_map(check: str, s1, s2):
    """Bit action of the two-pair check circuit on the Bell-string labels.

    Returns (survivor, measured) label pairs; the check passes exactly when
    the measured pair's x bit is 0 (both sides then see equal Z outcomes).
    Accepts scalar bits or numpy bit arrays.
    """
    (x1, z1), (x2, z2) = s1, s2
    if check == "Z":
        return (x1, z1 ^ z2), (x1 ^ x2, z2)
    if check == "X":
        return (z1, x1 ^ x2), (z1 ^ z2, x2)
    if check == "Y":
        return (x1 ^ z2, z1 ^ z2), (x1 ^ x2 ^ z1 ^ z2, z2)
    raise ValueError(f"check must be one of X, Y, Z, got {check!r}")


def _circuit_tables():
    tables = {}
    for check in CHECKS:
        surv = np.empty(16, dtype=np.intp)
        acc = np.zeros(16, dtype=bool)
        for a in range(4):
            for b in range(4):
                s, m = check_string_map(check, PAULI_BITS[a], PAULI_BITS[b])
                surv[4 * a + b] = _BITS_TO_INDEX[s]
                acc[4 * a + b] = m[0] == 0
        tables[check] = (surv, acc)
    return tables


_TABLES = _circuit_tables()


@dataclass(frozen=True)
class RecurrenceStep:
    """Outcome of one two-pair check on an i.i.d. input channel."""

    check: str
    accepted: np.ndarray
    rejected: np.ndarray
    p_pass: float


def recurrence_step(d, check: str) -> RecurrenceStep:
    """One recurrence step of the given check type on channel vector ``d``.

    The accepted channel and pass probability follow the closed form: with
    Q the checked Pauli and (A, B) the other two non-identity labels in
    cyclic order,

        p_pass = (p_I + p_Q)^2 + (p_A + p_B)^2
        p_I' = (p_I^2 + p_Q^2) / p_pass      p_X' = (p_A^2 + p_B^2) / p_pass

    with the two cross terms 2 p_I p_Q and 2 p_A p_B landing on check-
    dependent labels.  The rejected channel is obtained by enumerating all 16
    ordered error pairs through the check circuit and conditioning on
    mismatched measurement outcomes; it always satisfies p_I* = p_X* and
    p_Y* = p_Z*, which makes the rejected state PPT.
    """
    if check not in _CHECK_INDEX:
        raise ValueError(f"check must be one of X, Y, Z, got {check!r}")
    d = np.asarray(d, dtype=float)
    q = _CHECK_INDEX[check]
    qa, qb = (_CHECK_INDEX[c] for c in _CYCLIC[check])
    p_pass = (d[0] + d[q]) ** 2 + (d[qa] + d[qb]) ** 2

    accepted = np.empty(4)
    accepted[0] = (d[0] * d[0] + d[q] * d[q]) / p_pass
    accepted[1] = (d[qa] * d[qa] + d[qb] * d[qb]) / p_pass
    same_dest, cross_dest = _CROSS_DEST[check]
    accepted[_CHECK_INDEX[same_dest]] = 2.0 * d[0] * d[q] / p_pass
    accepted[_CHECK_INDEX[cross_dest]] = 2.0 * d[qa] * d[qb] / p_pass

    surv, acc = _TABLES[check]
    weights = np.outer(d, d).ravel()
    fail_mass = weights[~acc]
    p_fail = float(fail_mass.sum())
    if p_fail > 0.0:
        rejected = np.bincount(surv[~acc], weights=fail_mass, minlength=4) / p_fail
    else:
        # Nothing is ever rejected; report the symmetric undistillable point.
        rejected = np.full(4, 0.25)

    return RecurrenceStep(check=check, accepted=accepted, rejected=rejected,
                          p_pass=float(p_pass))


def greedy_choice(d, *, tie_tol: float = 1e-12) -> str:
    """Check type with the smallest error probability; ties prefer Z, then Y.

    Probabilities within a relative ``tie_tol`` of the minimum count as
    tied.  Distributions whose X and Y weights are equal in exact arithmetic
    (the depolarizing channel stays that way under every greedy step) can
    come out an ulp apart from the closed form, and the tolerance keeps the
    tie-break deterministic in that case.
    """
    d = np.asarray(d, dtype=float)
    lowest = min(d[_CHECK_INDEX[c]] for c in CHECKS)
    band = lowest + tie_tol * lowest
    for c in ("Z", "Y", "X"):
        if d[_CHECK_INDEX[c]] <= band:
            return c
    return "Z"  # unreachable; the minimum always lies in the band


def greedy_sequence(d, k: int) -> list[RecurrenceStep]:
    """Run ``k`` greedy recurrence steps, re-choosing the check each round.

    Inputs with entanglement fidelity at or below 1/2 are processed
    mechanically but trigger a warning, since the improvement guarantees
    assume p_I > 1/2.
    """
    if k < 0:
        raise ValueError("number of rounds must be nonnegative")
    steps = []
    cur = np.asarray(d, dtype=float)
    for _ in range(k):
        if cur[0] <= 0.5:
            warnings.warn(_LOW_FIDELITY_MSG, stacklevel=2)
        step = recurrence_step(cur, greedy_choice(cur))
        steps.append(step)
        cur = step.accepted
    return steps


def macchiavello_sequence(d, k: int) -> list[RecurrenceStep]:
    """Alternating Z, Y, Z, Y, ... recurrence for ``k`` rounds."""
    if k < 0:
        raise ValueError("number of rounds must be nonnegative")
    steps = []
    cur = np.asarray(d, dtype=float)
    for i in range(k):
        step = recurrence_step(cur, "Z" if i % 2 == 0 else "Y")
        steps.append(step)
        cur = step.accepted
    return steps
