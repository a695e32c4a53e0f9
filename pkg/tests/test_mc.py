"""Monte-Carlo simulator against the analytic post-selection formulas."""

import numpy as np
import pytest

from qdistill.channels import make_depolarizing, make_xz
from qdistill.mc import McConfig, simulate_aepp_checks, simulate_recurrence
from qdistill.recurrence import check_string_map


def test_string_maps_match_circuit_composition():
    # the hard-coded per-check maps agree with the composed circuits on all
    # 16 label pairs; the Y map in particular is the double-XOR sandwich
    import itertools

    from qdistill.pauli import bxor_map, hadamard_map

    for s1 in itertools.product((0, 1), repeat=2):
        for s2 in itertools.product((0, 1), repeat=2):
            kept, measured = bxor_map(s1, s2)
            assert check_string_map("Z", s1, s2) == (kept, measured)

            kept, measured = bxor_map(hadamard_map(s1), hadamard_map(s2))
            assert check_string_map("X", s1, s2) == (kept, measured)

            kept, measured = bxor_map(s1, s2)
            kept, measured = bxor_map(hadamard_map(kept), measured)
            kept = hadamard_map(kept)
            assert check_string_map("Y", s1, s2) == (kept, measured)
            # spelled-out Y action on the kept pair
            (x1, z1), (x2, z2) = s1, s2
            assert kept == (x1 ^ z2, z1 ^ z2)
            assert measured == (x1 ^ x2 ^ z1 ^ z2, z2)


def test_sample_count_validation():
    with pytest.raises(ValueError):
        simulate_recurrence(make_depolarizing(0.2), "Z", McConfig(samples=100, seed=1))
    with pytest.raises(ValueError):
        simulate_aepp_checks(make_depolarizing(0.2), McConfig(samples=999, seed=1))
    with pytest.raises(ValueError):
        simulate_recurrence(make_depolarizing(0.2), "I", McConfig(samples=2000, seed=1))


def test_noiseless_recurrence_is_exact():
    rep = simulate_recurrence([1, 0, 0, 0], "Z", McConfig(samples=5000, seed=2))
    assert rep.p_pass_emp == 1.0
    assert rep.max_z_score == 0.0
    assert np.array_equal(rep.empirical, [1, 0, 0, 0])


def test_recurrence_determinism():
    cfg = McConfig(samples=20_000, seed=77)
    a = simulate_recurrence(make_depolarizing(0.3), "Y", cfg)
    b = simulate_recurrence(make_depolarizing(0.3), "Y", cfg)
    assert np.array_equal(a.empirical, b.empirical)
    assert a.max_z_score == b.max_z_score
    assert a.p_pass_emp == b.p_pass_emp
    c = simulate_recurrence(make_depolarizing(0.3), "Y", McConfig(samples=20_000, seed=78))
    assert not np.array_equal(a.empirical, c.empirical)


@pytest.mark.parametrize("check", ["X", "Y", "Z"])
def test_recurrence_agreement(check):
    rep = simulate_recurrence(make_depolarizing(0.3), check,
                              McConfig(samples=200_000, seed=11))
    assert rep.max_z_score < 5.0
    assert rep.rng_name == "PCG64"


def test_recurrence_agreement_xz_channel():
    rep = simulate_recurrence(make_xz(0.25), "Y", McConfig(samples=200_000, seed=12))
    assert rep.max_z_score < 5.0


def test_aepp_noiseless():
    rep = simulate_aepp_checks([1, 0, 0, 0], McConfig(samples=5000, seed=3))
    assert rep.p_pass_emp == 1.0
    assert rep.max_z_score == 0.0
    # all survivors live in the (0,0) branch with the clean joint label
    assert rep.empirical[0] == 1.0
    assert rep.empirical[4] == 1.0


def test_aepp_agreement():
    rep = simulate_aepp_checks(make_depolarizing(0.25),
                               McConfig(samples=300_000, seed=13))
    assert rep.max_z_score < 5.0
    assert len(rep.cell_labels) == len(rep.empirical) == len(rep.analytic) == 40
    assert rep.p_pass_ana == pytest.approx(rep.p_pass_emp, abs=0.01)


def test_aepp_determinism():
    cfg = McConfig(samples=50_000, seed=99)
    a = simulate_aepp_checks(make_depolarizing(0.25), cfg)
    b = simulate_aepp_checks(make_depolarizing(0.25), cfg)
    assert np.array_equal(a.empirical, b.empirical)
    assert a.max_z_score == b.max_z_score
