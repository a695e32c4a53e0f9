"""Executable property suites: theorem checks, lemma checks, and the
Monte-Carlo cross-validation, with machine-readable results.

Each suite returns a report dictionary listing, per property, the number of
trials and failures plus a worst-case margin where meaningful.  Random
inputs come from a seeded PCG64 generator, so a report is a pure function
of (suite, seed, trials).
"""

from __future__ import annotations

import warnings

import numpy as np

from .channels import make_depolarizing, ppt_one_pair
from .mc import McConfig, simulate_aepp_checks, simulate_recurrence
from .pauli import binary_entropy, entropy_of_direct_sum, shannon_entropy
from .recurrence import greedy_choice, greedy_sequence, recurrence_step
from .vv05 import two_pair_index, vv_yield_general

_RNG_NAME = "PCG64"


def random_pauli_dist(rng) -> np.ndarray:
    """Uniform (Dirichlet) random channel vector."""
    return rng.dirichlet(np.ones(4))


def random_high_fidelity_dist(rng) -> np.ndarray:
    """Random channel vector constrained to p_I in (1/2, 1)."""
    p_i = 0.5 + 0.5 * rng.random()
    rest = rng.dirichlet(np.ones(3)) * (1.0 - p_i)
    return np.array([p_i, *rest])


def random_swap_invariant_two_pair(rng) -> np.ndarray:
    """Random 16-entry two-pair distribution symmetric under pair exchange."""
    t = rng.dirichlet(np.ones(16))
    return 0.5 * (t + t.reshape(4, 4).T.ravel())


def _property(name: str, trials: int, failures: int, worst) -> dict:
    return {
        "name": name,
        "trials": trials,
        "failures": failures,
        "worst_margin": None if worst is None else float(worst),
        "passed": failures == 0,
    }


def run_theorem_suite(seed: int, trials: int = 10_000) -> dict:
    """Greedy-recurrence guarantees and the two-pair protocol advantage.

    Checks, on seeded random inputs: strict fidelity improvement of the
    greedy step for p_I in (1/2, 1); optimality of the greedy check among
    the three choices; the alternating Z, Y schedule on the depolarizing
    channel; and the advantage of the two-pair protocol over hashing on
    swap-invariant inputs together with its exact gap decomposition.
    """
    rng = np.random.default_rng(seed)
    props = []

    failures = 0
    worst = np.inf
    for _ in range(trials):
        d = random_high_fidelity_dist(rng)
        step = recurrence_step(d, greedy_choice(d))
        margin = step.accepted[0] - d[0]
        worst = min(worst, margin)
        if not margin > 0.0:
            failures += 1
    props.append(_property("greedy_step_strictly_improves_fidelity", trials, failures, worst))

    failures = 0
    worst = np.inf
    for _ in range(trials):
        d = random_high_fidelity_dist(rng)
        best = recurrence_step(d, greedy_choice(d)).accepted[0]
        for alt in ("X", "Y", "Z"):
            margin = best - recurrence_step(d, alt).accepted[0]
            worst = min(worst, margin)
            if margin < -1e-12:
                failures += 1
    props.append(_property("greedy_choice_maximizes_fidelity", trials, failures, worst))

    failures = 0
    grid = np.linspace(0.005, 0.495, 101)
    for p in grid:
        seq = greedy_sequence(make_depolarizing(p), 8)
        if [s.check for s in seq] != ["Z", "Y", "Z", "Y", "Z", "Y", "Z", "Y"]:
            failures += 1
    props.append(_property("depolarizing_greedy_alternates_z_y", len(grid), failures, None))

    failures = 0
    worst = np.inf
    for _ in range(trials):
        t = random_swap_invariant_two_pair(rng)
        br = vv_yield_general(t)
        hashing = 1.0 - shannon_entropy(t) / 2.0
        gap = br.yield_per_pair - hashing
        worst = min(worst, gap)
        if gap < -1e-12 or abs(gap - 0.25 * br.p_odd * _gap_terms(t, br.p0, br.p1)) > 1e-10:
            failures += 1
    props.append(_property("two_pair_protocol_beats_hashing_when_swap_invariant",
                           trials, failures, worst))

    return _report("theorems", seed, trials, props)


def _gap_terms(t, p0: float, p1: float) -> float:
    """Sum of the two grouping-entropy differences behind the advantage gap."""

    def grouped(top_a: str, top_b: str, other_a: str, other_b: str, mass: float) -> float:
        pa = t[two_pair_index(top_a)] + t[two_pair_index(top_b)]
        pb = t[two_pair_index(other_a)] + t[two_pair_index(other_b)]
        total = 0.0
        if pa > 0.0:
            total += (pa / mass) * binary_entropy(t[two_pair_index(top_a)] / pa)
        if pb > 0.0:
            total += (pb / mass) * binary_entropy(t[two_pair_index(other_a)] / pb)
        return total

    return grouped("ZX", "IX", "ZY", "IY", p0) + grouped("XZ", "YZ", "XI", "YI", p1)


def run_lemma_suite(seed: int, trials: int = 10_000) -> dict:
    """Entropy-grouping, mean-ratio, and direct-sum identities."""
    rng = np.random.default_rng(seed)
    props = []

    def grouping_margin(x: float, y: float) -> float:
        total = 0.0
        if x > 0.0:
            total -= x * np.log2(x)
        if y > 0.0:
            total -= y * np.log2(y)
        if x + y > 0.0:
            total += (x + y) * np.log2(x + y)
        return total

    failures = 0
    worst = np.inf
    samples = [(0.0, 0.0), (0.0, 0.7), (0.3, 0.0)]
    samples += [tuple(rng.random(2) * 2.0) for _ in range(trials)]
    for x, y in samples:
        margin = grouping_margin(x, y)
        worst = min(worst, margin)
        if margin < -1e-12:
            failures += 1
    props.append(_property("entropy_reduction_by_grouping", len(samples), failures, worst))

    failures = 0
    worst = np.inf
    for _ in range(trials):
        a = 0.5 + 0.5 * rng.random()
        c, d, b = np.sort(rng.dirichlet(np.ones(3)) * (1.0 - a))[::-1]
        margin = c * d * (a * a + b * b) - a * b * (c * c + d * d)
        worst = min(worst, margin)
        if margin < -1e-15:
            failures += 1
    props.append(_property("mean_ratio_inequality", trials, failures, worst))

    failures = 0
    worst = 0.0
    for _ in range(trials):
        sizes = rng.integers(1, 6, size=2)
        blocks = [rng.dirichlet(np.ones(size)) for size in sizes]
        p0 = rng.random()
        merged = np.concatenate([p0 * blocks[0], (1.0 - p0) * blocks[1]])
        lhs = entropy_of_direct_sum(p0, shannon_entropy(blocks[0]), shannon_entropy(blocks[1]))
        diff = abs(lhs - shannon_entropy(merged))
        worst = max(worst, diff)
        if diff > 1e-10:
            failures += 1
    props.append(_property("direct_sum_entropy_identity", trials, failures, worst))

    failures = 0
    for _ in range(trials):
        d = random_pauli_dist(rng)
        for check in ("X", "Y", "Z"):
            step = recurrence_step(d, check)
            if not (step.rejected[0] == step.rejected[1]
                    and step.rejected[2] == step.rejected[3]
                    and ppt_one_pair(step.rejected)):
                failures += 1
    props.append(_property("rejected_state_symmetric_and_ppt", 3 * trials, failures, None))

    return _report("lemmas", seed, trials, props)


def run_mc_suite(seed: int, samples: int = 1_000_000,
                 noise_points=(0.1, 0.25, 0.4), tolerance_sigmas: float = 5.0) -> dict:
    """Monte-Carlo agreement of every analytic post-selection distribution."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        reports = []
        for i, p in enumerate(noise_points):
            d = make_depolarizing(p)
            for j, check in enumerate(("X", "Y", "Z")):
                cfg = McConfig(samples=samples, seed=seed + 10 * i + j)
                rep = simulate_recurrence(d, check, cfg)
                reports.append((f"recurrence-{check}-p{p}", rep))
            cfg = McConfig(samples=samples, seed=seed + 10 * i + 7)
            reports.append((f"aepp-p{p}", simulate_aepp_checks(d, cfg)))
    entries = []
    for name, rep in reports:
        entries.append({
            "name": name,
            "samples": rep.samples,
            "p_pass_emp": rep.p_pass_emp,
            "p_pass_ana": rep.p_pass_ana,
            "max_z_score": rep.max_z_score,
            "passed": rep.passed(tolerance_sigmas),
        })
    return {
        "suite": "mc",
        "seed": seed,
        "samples": samples,
        "generator": _RNG_NAME,
        "tolerance_sigmas": tolerance_sigmas,
        "properties": entries,
        "all_passed": all(e["passed"] for e in entries),
    }


def _report(suite: str, seed: int, trials: int, props: list[dict]) -> dict:
    return {
        "suite": suite,
        "seed": seed,
        "trials": trials,
        "generator": _RNG_NAME,
        "properties": props,
        "all_passed": all(p["passed"] for p in props),
    }


def run_suite(suite: str, seed: int, trials: int = 10_000,
              samples: int = 1_000_000) -> dict:
    if suite == "theorems":
        return run_theorem_suite(seed, trials)
    if suite == "lemmas":
        return run_lemma_suite(seed, trials)
    if suite == "mc":
        return run_mc_suite(seed, samples=samples)
    raise ValueError(f"unknown suite {suite!r}")
