"""Monte-Carlo validation of the analytic post-selection formulas.

Errors are sampled directly in the symplectic picture: each noisy pair is a
label drawn from the channel vector, and every check circuit acts as an
affine map on the (x, z) label bits (no state-vector simulation is needed).
Empirical post-selected distributions and pass rates are compared with the
closed forms through per-cell binomial z-scores; cells with expected count
below 10 are pooled into one.  The default acceptance threshold is 5 sigma
per cell, with no multiple-comparison correction (a Bonferroni correction
over the few dozen cells tested would tighten, not loosen, the implied
false-alarm rate).

Sampling uses numpy's PCG64 generator; the algorithm name and seed are
recorded in every report, and identical configurations reproduce identical
reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .aepp import aepp_joint_distribution, aepp_zz_fallback
from .pauli import LABEL_OF_BITS, bxor_map, hadamard_map
from .recurrence import recurrence_step
from .vv05 import TWO_PAIR_LABELS

_RNG_NAME = "PCG64"
_LX = np.array([0, 1, 1, 0], dtype=np.uint8)
_LZ = np.array([0, 0, 1, 1], dtype=np.uint8)


@dataclass(frozen=True)
class McConfig:
    """Sample count, seed, and acceptance threshold for one validation run."""

    samples: int
    seed: int
    tolerance_sigmas: float = 5.0


@dataclass(frozen=True)
class McReport:
    """Empirical versus analytic cell probabilities with binomial z-scores."""

    name: str
    empirical: np.ndarray
    analytic: np.ndarray
    p_pass_emp: float
    p_pass_ana: float
    max_z_score: float
    cell_labels: tuple = ()
    samples: int = 0
    seed: int = 0
    rng_name: str = _RNG_NAME

    def passed(self, tolerance_sigmas: float = 5.0) -> bool:
        return bool(self.max_z_score < tolerance_sigmas)


def _require_samples(cfg: McConfig) -> None:
    if cfg.samples < 1000:
        raise ValueError("validation needs at least 1000 samples")


def _rng(cfg: McConfig) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(cfg.seed))


def _z_scores(counts, probs, n: int) -> list[float]:
    """Binomial |z| per cell against expected probabilities.

    Cells whose expected count n*q falls below 10 are pooled into a single
    cell before scoring.  A zero-variance cell scores 0 when the count
    matches its expectation exactly and infinity otherwise.
    """
    counts = np.asarray(counts, dtype=float)
    probs = np.asarray(probs, dtype=float)
    big = n * probs >= 10.0
    cells = list(zip(counts[big], probs[big]))
    if (~big).any():
        cells.append((float(counts[~big].sum()), float(probs[~big].sum())))
    scores = []
    for count, q in cells:
        var = n * q * (1.0 - q)
        if var <= 0.0:
            scores.append(0.0 if count == n * q else math.inf)
        else:
            scores.append(abs(count - n * q) / math.sqrt(var))
    return scores


def _sample_bits(rng, d, shape):
    labels = rng.choice(4, size=shape, p=np.asarray(d, dtype=float))
    return _LX[labels], _LZ[labels]


def _check_bits(check: str, n_pairs: int):
    """(x, z) bit rows of the n-pair check string, e.g. ZZ or XXXX."""
    bits = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}[check]
    return np.full(n_pairs, bits[0], dtype=np.uint8), np.full(n_pairs, bits[1], dtype=np.uint8)


def _syndrome(check_x, check_z, x, z):
    """Symplectic inner product of the check with each sampled error row."""
    acc = np.zeros(x.shape[0], dtype=np.uint8)
    for i in range(x.shape[1]):
        acc ^= (check_x[i] & z[:, i]) ^ (check_z[i] & x[:, i])
    return acc


def simulate_recurrence(d, check: str, cfg: McConfig) -> McReport:
    """Sample one recurrence step and compare with the closed form.

    Two labels are drawn per sample, pushed through the check circuit built
    from the bilateral-XOR and Hadamard label maps, and accepted when the
    measured pair's x bit is 0.  As a consistency check, the acceptance rule
    is validated on every sample against the symplectic commutation of the
    sampled error with the check string.
    """
    _require_samples(cfg)
    rng = _rng(cfg)
    x, z = _sample_bits(rng, d, (cfg.samples, 2))
    s1 = (x[:, 0], z[:, 0])
    s2 = (x[:, 1], z[:, 1])

    if check == "Z":
        kept, measured = bxor_map(s1, s2)
    elif check == "X":
        kept, measured = bxor_map(hadamard_map(s1), hadamard_map(s2))
    elif check == "Y":
        kept, measured = bxor_map(s1, s2)
        kept = hadamard_map(kept)
        kept, measured = bxor_map(kept, measured)
        kept = hadamard_map(kept)
    else:
        raise ValueError(f"check must be one of X, Y, Z, got {check!r}")
    accept = measured[0] == 0

    cx, cz = _check_bits(check, 2)
    if not np.array_equal(accept, _syndrome(cx, cz, x, z) == 0):
        raise AssertionError("acceptance rule disagrees with commutation parity")

    survivors = LABEL_OF_BITS[kept[0][accept], kept[1][accept]]
    counts = np.bincount(survivors, minlength=4)
    n_acc = int(counts.sum())

    step = recurrence_step(d, check)
    empirical = counts / n_acc if n_acc else np.zeros(4)
    scores = _z_scores(counts, step.accepted, n_acc) if n_acc else [math.inf]
    scores += _z_scores([n_acc], [step.p_pass], cfg.samples)
    return McReport(
        name=f"recurrence-{check}",
        empirical=empirical,
        analytic=step.accepted,
        p_pass_emp=n_acc / cfg.samples,
        p_pass_ana=step.p_pass,
        max_z_score=float(max(scores)),
        cell_labels=("I", "X", "Y", "Z"),
        samples=cfg.samples,
        seed=cfg.seed,
    )


def simulate_aepp_checks(d, cfg: McConfig) -> McReport:
    """Sample the four-pair cascade and compare every branch with theory.

    Four labels are drawn per sample.  The ZZZZ circuit (three bilateral
    XORs into the fourth pair) yields syndrome b1; on b1 = 0 the XXXX
    circuit (two XORs controlled by the third pair plus a Hadamard) yields
    b2 and the joint label of the two survivors, and on b1 = 1 the ZZ
    fallback yields b2' and one survivor.  The report concatenates four cell
    sections: the four branch probabilities, the 16-entry survivor tables of
    the (0,0) and (0,1) branches, and the 4-entry fallback survivor
    distribution; p_pass is the probability of b1 = 0.
    """
    _require_samples(cfg)
    rng = _rng(cfg)
    d = np.asarray(d, dtype=float)
    x, z = _sample_bits(rng, d, (cfg.samples, 4))
    pairs = [(x[:, i].copy(), z[:, i].copy()) for i in range(4)]

    # ZZZZ check: pairs 1..3 each control a bilateral XOR into pair 4.
    for i in range(3):
        pairs[i], pairs[3] = bxor_map(pairs[i], pairs[3])
    b1 = pairs[3][0]

    # XXXX continuation on the three survivors (pair 3 controls, then H).
    p3, p1 = bxor_map(pairs[2], pairs[0])
    p3, p2 = bxor_map(p3, pairs[1])
    p3 = hadamard_map(p3)
    b2 = p3[0]

    # ZZ fallback on the first two post-ZZZZ pairs; outcome 0 keeps pair 1,
    # outcome 1 keeps pair 3 untouched by the XXXX circuit.
    f1, f2 = bxor_map(pairs[0], pairs[1])
    b2p = f2[0]

    cx, cz = _check_bits("Z", 4)
    if not np.array_equal(b1, _syndrome(cx, cz, x, z)):
        raise AssertionError("ZZZZ syndrome disagrees with commutation parity")
    cx, cz = _check_bits("X", 4)
    if not np.array_equal(b2, _syndrome(cx, cz, x, z)):
        raise AssertionError("XXXX syndrome disagrees with commutation parity")
    if not np.array_equal(b2p, x[:, 0] ^ x[:, 1]):
        raise AssertionError("ZZ syndrome disagrees with commutation parity")

    r_label = LABEL_OF_BITS[p1[0], p1[1]]
    t_label = LABEL_OF_BITS[p2[0], p2[1]]
    joint = 4 * r_label + t_label
    keep0 = LABEL_OF_BITS[f1[0], f1[1]]
    keep1 = LABEL_OF_BITS[pairs[2][0], pairs[2][1]]

    m00 = (b1 == 0) & (b2 == 0)
    m01 = (b1 == 0) & (b2 == 1)
    m1 = b1 == 1
    branch_counts = np.array([
        int(m00.sum()),
        int(m01.sum()),
        int((m1 & (b2p == 0)).sum()),
        int((m1 & (b2p == 1)).sum()),
    ])
    counts00 = np.bincount(joint[m00], minlength=16)
    counts01 = np.bincount(joint[m01], minlength=16)
    fallback_labels = np.where(b2p[m1] == 0, keep0[m1], keep1[m1])
    counts_fb = np.bincount(fallback_labels, minlength=4)

    p00, t00 = aepp_joint_distribution(d, 0, 0)
    p01, t01 = aepp_joint_distribution(d, 0, 1)
    s_mass = d[0] + d[3]
    w_mass = d[1] + d[2]
    half = (s_mass * s_mass + w_mass * w_mass) * (2.0 * s_mass * w_mass)
    fallback = aepp_zz_fallback(d)

    branch_probs = np.array([p00, p01, half, half])
    n00 = int(branch_counts[0])
    n01 = int(branch_counts[1])
    n1 = int(branch_counts[2] + branch_counts[3])

    scores = _z_scores(branch_counts, branch_probs, cfg.samples)
    if n00:
        scores += _z_scores(counts00, t00, n00)
    if n01:
        scores += _z_scores(counts01, t01, n01)
    if n1:
        scores += _z_scores(counts_fb, fallback, n1)

    labels = ["P(b1=0,b2=0)", "P(b1=0,b2=1)", "P(b1=1,b2'=0)", "P(b1=1,b2'=1)"]
    labels += [f"t00[{lab}]" for lab in TWO_PAIR_LABELS]
    labels += [f"t01[{lab}]" for lab in TWO_PAIR_LABELS]
    labels += [f"fallback[{lab}]" for lab in ("I", "X", "Y", "Z")]

    empirical = np.concatenate([
        branch_counts / cfg.samples,
        counts00 / n00 if n00 else np.zeros(16),
        counts01 / n01 if n01 else np.zeros(16),
        counts_fb / n1 if n1 else np.zeros(4),
    ])
    analytic = np.concatenate([branch_probs, t00, t01, fallback])
    n0_total = int(branch_counts[0] + branch_counts[1])
    return McReport(
        name="aepp-cascade",
        empirical=empirical,
        analytic=analytic,
        p_pass_emp=n0_total / cfg.samples,
        p_pass_ana=p00 + p01,
        max_z_score=float(max(scores)),
        cell_labels=tuple(labels),
        samples=cfg.samples,
        seed=cfg.seed,
    )
