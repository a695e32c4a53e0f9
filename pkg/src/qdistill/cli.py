"""Command-line front end for sweeps, single-shot calculations, property
suites and Monte-Carlo validation.

Every option can also be supplied through a JSON config file passed with
``--config``; explicit flags win on conflict.  Exit codes: 0 on success,
1 when a validation property fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict

import numpy as np

from . import ad
from .aepp import aepp_branches, aepp_star4_yield
from .combined import sweep_combined
from .curves import YieldCurve, format_csv
from .mc import McConfig, simulate_aepp_checks, simulate_recurrence
from .pauli import as_prob_vec
from .recurrence import greedy_sequence, recurrence_step
from .validate import run_suite
from .vv05 import vv_best_over_permutations, vv_yield_general, vv_yield_iid

_SCHEME_RE_H1 = re.compile(r"H1(\d+)$")
_SCHEME_RE_H2 = re.compile(r"H2(\d+)$")


class UsageError(Exception):
    pass


def _parse_grid(spec: str) -> np.ndarray:
    """Parse ``start:stop:count`` into a strictly increasing grid."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be start:stop:count, got {spec!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"malformed grid {spec!r}") from exc
    if count < 1:
        raise UsageError("grid needs at least one point")
    if count == 1:
        if stop != start:
            raise UsageError("a single-point grid needs start == stop")
        return np.array([start])
    if stop <= start:
        raise UsageError("grid must be strictly increasing")
    return np.linspace(start, stop, count)


def _parse_points(spec: str) -> np.ndarray:
    values = np.array([float(v) for v in spec.split(",") if v != ""])
    if values.size == 0:
        raise UsageError("empty point list")
    if values.size > 1 and not np.all(np.diff(values) > 0):
        raise UsageError("points must be strictly increasing")
    return values


def _parse_dist(spec: str) -> np.ndarray:
    values = [float(v) for v in spec.split(",")]
    if len(values) != 4:
        raise UsageError("distribution needs exactly 4 comma-separated entries")
    return as_prob_vec(values)


def _grid_from(args) -> np.ndarray:
    if getattr(args, "grid", None):
        return _parse_grid(args.grid)
    if getattr(args, "points", None):
        return _parse_points(args.points)
    raise UsageError("provide --grid start:stop:count or --points v1,v2,...")


def _scheme_column(token: str):
    """Map a scheme token to (column name, yield function of gamma)."""
    if token == "RCI":
        return token, ad.rci_amp_damp
    if token == "DualRail":
        return token, ad.yield_dual_rail
    if token == "TripleRail":
        return token, ad.yield_triple_rail
    if token == "H24ast":
        return token, ad.yield_hamming2_star4
    m = _SCHEME_RE_H1.match(token)
    if m:
        n = int(m.group(1))
        return token, lambda g, n=n: ad.yield_hamming1(n, g)
    m = _SCHEME_RE_H2.match(token)
    if m:
        n = int(m.group(1))
        return token, lambda g, n=n: ad.yield_hamming2(n, g)
    raise UsageError(
        f"unknown scheme {token!r}; expected RCI, DualRail, TripleRail, "
        "H1<n>, H2<n> or H24ast"
    )


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, out_path) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out_path)


def cmd_ad_yields(args) -> int:
    grid = _grid_from(args)
    tokens = [t for t in (args.schemes or "").split(",") if t]
    if not tokens:
        raise UsageError("at least one scheme is required")
    columns = []
    rci = np.array([ad.rci_amp_damp(g) for g in grid]) if (args.diff_rci or "RCI" not in tokens) else None
    for token in tokens:
        name, fn = _scheme_column(token)
        values = np.array([fn(g) for g in grid])
        if args.diff_rci:
            if token == "RCI":
                raise UsageError("RCI cannot be listed as a scheme in --diff-rci mode")
            values = values - rci
        columns.append((name, values))
    if not args.diff_rci and "RCI" not in tokens:
        columns.append(("RCI", rci))
    curve = YieldCurve(param="gamma", grid=grid, columns=columns)
    _emit(format_csv(curve), args.out)
    return 0


def cmd_rci(args) -> int:
    grid = _grid_from(args)
    values = np.array([ad.rci_amp_damp(g) for g in grid])
    curve = YieldCurve(param="gamma", grid=grid, columns=[("RCI", values)])
    _emit(format_csv(curve), args.out)
    return 0


def cmd_recurrence(args) -> int:
    step = recurrence_step(_parse_dist(args.dist), args.check)
    _emit_json({
        "check": step.check,
        "p_pass": step.p_pass,
        "accepted": list(step.accepted),
        "rejected": list(step.rejected),
    }, args.out)
    return 0


def cmd_greedy(args) -> int:
    d = _parse_dist(args.dist)
    steps = greedy_sequence(d, args.rounds)
    rate = 1.0
    rows = []
    cur = d
    for step in steps:
        rate *= step.p_pass / 2.0
        cur = step.accepted
        rows.append({"check": step.check, "p_pass": step.p_pass, "accepted": list(cur)})
    _emit_json({
        "input": list(d),
        "rounds": args.rounds,
        "steps": rows,
        "rate_factor": rate,
        "final": list(cur),
    }, args.out)
    return 0


def cmd_vv(args) -> int:
    payload = {}
    if args.two_pair:
        values = [float(v) for v in args.two_pair.split(",")]
        if len(values) != 16:
            raise UsageError("--two-pair needs 16 comma-separated entries")
        t = as_prob_vec(values)
        payload["general"] = asdict(vv_yield_general(t))
    if args.dist:
        d = _parse_dist(args.dist)
        payload["iid_yield"] = vv_yield_iid(d)
        if args.best:
            value, perm = vv_best_over_permutations(d)
            payload["best_yield"] = value
            payload["best_permutation"] = list(perm)
    if not payload:
        raise UsageError("provide --dist and/or --two-pair")
    _emit_json(payload, args.out)
    return 0


def cmd_aepp(args) -> int:
    d = _parse_dist(args.dist)
    out = aepp_branches(d)
    _emit_json({
        "prob_b1_0_b2_0": out.prob_b1_0_b2_0,
        "prob_b1_0_b2_1": out.prob_b1_0_b2_1,
        "prob_b1_1_b2p_0": out.prob_b1_1_b2p_0,
        "prob_b1_1_b2p_1": out.prob_b1_1_b2p_1,
        "dist_b1_0_b2_0": list(out.dist_b1_0_b2_0),
        "accepted_single": list(out.accepted_single),
        "n2": args.n2,
        "n3": args.n3,
        "yield_per_input_pair": aepp_star4_yield(d, args.n2, args.n3),
    }, args.out)
    return 0


def cmd_combined_sweep(args) -> int:
    grid = _grid_from(args)
    curve = sweep_combined(args.family, grid, n1_max=args.n1_max,
                           n2_max=args.n2_max, n3_max=args.n3_max)
    _emit(format_csv(curve), args.out)
    return 0


def cmd_validate(args) -> int:
    report = run_suite(args.suite, seed=args.seed, trials=args.trials,
                       samples=args.samples)
    _emit_json(report, args.out)
    return 0 if report["all_passed"] else 1


def cmd_mc(args) -> int:
    cfg = McConfig(samples=args.samples, seed=args.seed,
                   tolerance_sigmas=args.sigmas)
    d = _parse_dist(args.dist)
    if args.check in ("X", "Y", "Z"):
        rep = simulate_recurrence(d, args.check, cfg)
    elif args.check.lower() == "aepp":
        rep = simulate_aepp_checks(d, cfg)
    else:
        raise UsageError("--check must be X, Y, Z or aepp")
    payload = {
        "name": rep.name,
        "rng": rep.rng_name,
        "seed": rep.seed,
        "samples": rep.samples,
        "p_pass_emp": rep.p_pass_emp,
        "p_pass_ana": rep.p_pass_ana,
        "max_z_score": rep.max_z_score,
        "cells": {label: [emp, ana] for label, emp, ana
                  in zip(rep.cell_labels, rep.empirical, rep.analytic)},
        "passed": rep.passed(cfg.tolerance_sigmas),
    }
    _emit_json(payload, args.out)
    return 0 if payload["passed"] else 1


_DEFAULTS = {
    "n1_max": 8,
    "n2_max": 4,
    "n3_max": 4,
    "seed": 20240901,
    "trials": 10_000,
    "samples": 1_000_000,
    "sigmas": 5.0,
    "rounds": 2,
    "n2": 0,
    "n3": 0,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdistill",
        description="Entanglement-distillation yield calculations and sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--config", help="JSON file providing option defaults")
        p.add_argument("--out", help="output path (default: stdout)")
        return p

    p = add("ad-yields", cmd_ad_yields, "CSV of damping-channel scheme yields")
    p.add_argument("--grid", help="gamma grid start:stop:count")
    p.add_argument("--points", help="comma-separated gamma values")
    p.add_argument("--schemes", help="comma-separated scheme tokens")
    p.add_argument("--diff-rci", action="store_true", default=None,
                   help="emit scheme yield minus RCI instead of raw yields")

    p = add("rci", cmd_rci, "CSV of the reverse coherent information")
    p.add_argument("--grid", help="gamma grid start:stop:count")
    p.add_argument("--points", help="comma-separated gamma values")

    p = add("recurrence", cmd_recurrence, "one recurrence step as JSON")
    p.add_argument("--dist", required=True, help="p_I,p_X,p_Y,p_Z")
    p.add_argument("--check", required=True, choices=["X", "Y", "Z"])

    p = add("greedy", cmd_greedy, "greedy recurrence rounds as JSON")
    p.add_argument("--dist", required=True, help="p_I,p_X,p_Y,p_Z")
    p.add_argument("--rounds", type=int)

    p = add("vv", cmd_vv, "two-pair protocol yields as JSON")
    p.add_argument("--dist", help="p_I,p_X,p_Y,p_Z for the i.i.d. closed form")
    p.add_argument("--two-pair", help="16 entries for the general form")
    p.add_argument("--best", action="store_true", default=None,
                   help="also maximize the i.i.d. yield over label permutations")

    p = add("aepp", cmd_aepp, "four-pair cascade branches and yield as JSON")
    p.add_argument("--dist", required=True, help="p_I,p_X,p_Y,p_Z")
    p.add_argument("--n2", type=int)
    p.add_argument("--n3", type=int)

    p = add("combined-sweep", cmd_combined_sweep,
            "CSV comparing composed-protocol yields over a noise grid")
    p.add_argument("--family", required=True, help="depolarizing or xz")
    p.add_argument("--grid", help="p grid start:stop:count")
    p.add_argument("--points", help="comma-separated p values")
    p.add_argument("--n1-max", type=int, dest="n1_max")
    p.add_argument("--n2-max", type=int, dest="n2_max")
    p.add_argument("--n3-max", type=int, dest="n3_max")

    p = add("validate", cmd_validate, "run a property suite; exit 1 on failure")
    p.add_argument("--suite", required=True, choices=["theorems", "lemmas", "mc"])
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--samples", type=int)

    p = add("mc", cmd_mc, "Monte-Carlo check of one post-selection step")
    p.add_argument("--dist", required=True, help="p_I,p_X,p_Y,p_Z")
    p.add_argument("--check", required=True, help="X, Y, Z or aepp")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--sigmas", type=float)

    return parser


def _apply_config(args: argparse.Namespace) -> None:
    """Fill unset options from the config file, then from builtin defaults."""
    config = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            config = json.load(fh)
        if not isinstance(config, dict):
            raise UsageError("config file must hold a JSON object")
    for key, value in config.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) is None:
            setattr(args, attr, value)
    for key, value in _DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
