"""Composed protocol: greedy preprocessing, then direct VV05 or the
four-pair cascade, with exhaustive optimization of the round counts.

A plan is (n1, branch, n2, n3): n1 greedy recurrence rounds reshape the
channel (each costing a factor p_pass/2 in rate), after which the surviving
pairs go either straight to the permutation-optimized i.i.d. protocol
(branch DirectVV) or through the four-pair cascade whose single-survivor
branches get n2 or n3 further greedy rounds (branch Aepp4).  Final plan
yields are clamped at zero, since a protocol with negative rate would simply
not be run.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

import numpy as np

from .aepp import aepp_star4_yield
from .channels import make_depolarizing, make_xz
from .curves import YieldCurve
from .recurrence import greedy_sequence, macchiavello_sequence
from .vv05 import vv_best_over_permutations

BRANCHES = ("DirectVV", "Aepp4")


@dataclass(frozen=True)
class ProtocolPlan:
    """Recipe for the composed protocol, with bookkeeping once evaluated.

    ``trace`` holds one ("recurrence", check, p_pass, dist) entry per greedy
    round followed by one ("branch", name, per_pair_yield) entry; the product
    of the p_pass/2 factors times the branch value, clamped at zero, equals
    ``yield_per_use``.
    """

    n1: int
    branch: str
    n2: int = 0
    n3: int = 0
    yield_per_use: float | None = None
    trace: tuple = ()


def _evaluate(d, n1: int, branch: str, n2: int, n3: int):
    if branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}, got {branch!r}")
    cur = np.asarray(d, dtype=float)
    rate = 1.0
    trace = []
    for step in greedy_sequence(cur, n1):
        rate *= step.p_pass / 2.0
        cur = step.accepted
        trace.append(("recurrence", step.check, step.p_pass, tuple(cur)))
    if branch == "DirectVV":
        per_pair = vv_best_over_permutations(cur)[0]
    else:
        per_pair = aepp_star4_yield(cur, n2, n3)
    trace.append(("branch", branch, per_pair))
    return max(0.0, rate * per_pair), tuple(trace)


def plan_yield(d, plan: ProtocolPlan) -> float:
    """Deterministic yield per initial channel use of the given plan."""
    return _evaluate(d, plan.n1, plan.branch, plan.n2, plan.n3)[0]


def evaluate_plan(d, plan: ProtocolPlan) -> ProtocolPlan:
    """Return a copy of ``plan`` with yield and trace filled in."""
    value, trace = _evaluate(d, plan.n1, plan.branch, plan.n2, plan.n3)
    return replace(plan, yield_per_use=value, trace=trace)


def _plan_space(n1_max: int, n2_max: int, n3_max: int):
    for n1 in range(n1_max + 1):
        yield n1, "DirectVV", 0, 0
        for n2, n3 in product(range(n2_max + 1), range(n3_max + 1)):
            yield n1, "Aepp4", n2, n3


def optimize_plan(d, n1_max: int = 8, n2_max: int = 4, n3_max: int = 4) -> ProtocolPlan:
    """Exhaustive search over plans; ties keep the earliest candidate.

    Candidates are enumerated with n1 ascending, DirectVV before Aepp4, and
    (n2, n3) in lexicographic order, so ties resolve toward smaller plans.
    """
    if min(n1_max, n2_max, n3_max) < 0:
        raise ValueError("optimizer bounds must be nonnegative")
    best = None
    best_value = -np.inf
    for n1, branch, n2, n3 in _plan_space(n1_max, n2_max, n3_max):
        value = _evaluate(d, n1, branch, n2, n3)[0]
        if value > best_value:
            best_value = value
            best = (n1, branch, n2, n3)
    return evaluate_plan(d, ProtocolPlan(*best))


def _max_over_rounds(d, sequence_fn, k_max: int) -> float:
    """Best clamped yield of (recurrence rounds -> optimized i.i.d. VV05)."""
    cur = np.asarray(d, dtype=float)
    best = max(0.0, vv_best_over_permutations(cur)[0])
    rate = 1.0
    for step in sequence_fn(cur, k_max):
        rate *= step.p_pass / 2.0
        cur = step.accepted
        best = max(best, rate * vv_best_over_permutations(cur)[0])
    return best


def sweep_combined(channel_family: str, p_grid, n1_max: int = 8,
                   n2_max: int = 4, n3_max: int = 4) -> YieldCurve:
    """Optimized yield curve plus its baseline curves over a noise grid.

    For the depolarizing family the columns are AEPP4 (the four-pair cascade
    without preprocessing, post-rounds optimized), Greedy (greedy recurrence
    straight into the optimized i.i.d. protocol) and ProposedProtocol (full
    plan optimization, a superset of both).  For the XZ family the columns
    compare the Macchiavello schedule against Greedy, both followed by the
    optimized i.i.d. protocol.
    """
    family = channel_family.lower()
    grid = np.asarray(p_grid, dtype=float)
    if family == "depolarizing":
        cols = {"AEPP4": np.empty(len(grid)), "Greedy": np.empty(len(grid)),
                "ProposedProtocol": np.empty(len(grid))}
        for i, p in enumerate(grid):
            d = make_depolarizing(p)
            best_all = 0.0
            best_greedy = 0.0
            best_aepp = 0.0
            for n1, branch, n2, n3 in _plan_space(n1_max, n2_max, n3_max):
                value = _evaluate(d, n1, branch, n2, n3)[0]
                best_all = max(best_all, value)
                if branch == "DirectVV":
                    best_greedy = max(best_greedy, value)
                elif n1 == 0:
                    best_aepp = max(best_aepp, value)
            cols["AEPP4"][i] = best_aepp
            cols["Greedy"][i] = best_greedy
            cols["ProposedProtocol"][i] = best_all
        columns = [(name, cols[name]) for name in ("AEPP4", "Greedy", "ProposedProtocol")]
    elif family == "xz":
        mac = np.empty(len(grid))
        greedy = np.empty(len(grid))
        for i, p in enumerate(grid):
            d = make_xz(p)
            mac[i] = _max_over_rounds(d, macchiavello_sequence, n1_max)
            greedy[i] = _max_over_rounds(d, greedy_sequence, n1_max)
        columns = [("Macchiavello", mac), ("Greedy", greedy)]
    else:
        raise ValueError(f"unknown channel family {channel_family!r}")
    return YieldCurve(param="p", grid=grid, columns=columns)
