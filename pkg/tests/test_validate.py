"""Property-suite runners produce passing, reproducible reports."""

import json

from qdistill.validate import run_lemma_suite, run_mc_suite, run_theorem_suite


def test_theorem_suite_passes():
    report = run_theorem_suite(seed=123, trials=800)
    assert report["all_passed"] is True
    names = [p["name"] for p in report["properties"]]
    assert "greedy_step_strictly_improves_fidelity" in names
    assert "greedy_choice_maximizes_fidelity" in names
    assert "depolarizing_greedy_alternates_z_y" in names
    assert "two_pair_protocol_beats_hashing_when_swap_invariant" in names


def test_lemma_suite_passes_and_serializes():
    report = run_lemma_suite(seed=9, trials=500)
    assert report["all_passed"] is True
    json.dumps(report)  # JSON-safe payload


def test_mc_suite_reproducible():
    a = run_mc_suite(seed=31, samples=50_000, noise_points=(0.25,))
    b = run_mc_suite(seed=31, samples=50_000, noise_points=(0.25,))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["all_passed"] is True
    assert len(a["properties"]) == 4  # three checks plus the cascade
