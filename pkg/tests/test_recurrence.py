"""Recurrence closed forms against exhaustive circuit enumeration."""

import numpy as np
import pytest

from qdistill.channels import make_depolarizing, make_xz, ppt_one_pair
from qdistill.pauli import bxor_map, hadamard_map
from qdistill.recurrence import (
    check_string_map,
    greedy_choice,
    greedy_sequence,
    macchiavello_sequence,
    recurrence_step,
)

_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_LABEL = {bits: i for i, (lab, bits) in enumerate(_BITS.items())}


def enumerate_step(d, check):
    """Oracle: push all 16 ordered error pairs through the check circuit.

    The circuit is composed here from the primitive label maps, independently
    of the closed form under test: Z is a bare bilateral XOR, X conjugates it
    by Hadamards, and Y sandwiches a second XOR between Hadamards on the kept
    pair.  Acceptance means the measured pair's x bit is 0.
    """
    acc = np.zeros(4)
    rej = np.zeros(4)
    p_pass = 0.0
    for a, (lab_a, s1) in enumerate(_BITS.items()):
        for b, (lab_b, s2) in enumerate(_BITS.items()):
            if check == "Z":
                kept, measured = bxor_map(s1, s2)
            elif check == "X":
                kept, measured = bxor_map(hadamard_map(s1), hadamard_map(s2))
            else:
                kept, measured = bxor_map(s1, s2)
                kept, measured = bxor_map(hadamard_map(kept), measured)
                kept = hadamard_map(kept)
            w = d[a] * d[b]
            if measured[0] == 0:
                acc[_LABEL[kept]] += w
                p_pass += w
            else:
                rej[_LABEL[kept]] += w
    return acc / p_pass, rej / (1.0 - p_pass) if p_pass < 1.0 else None, p_pass


def test_noiseless_fixed_point():
    for q in "XYZ":
        step = recurrence_step([1, 0, 0, 0], q)
        assert np.array_equal(step.accepted, [1, 0, 0, 0])
        assert step.p_pass == 1.0


def test_known_fidelity_decrease_example():
    # Z-checking a pure-Z channel can make fidelity worse
    step = recurrence_step([0.7, 0.0, 0.0, 0.3], "Z")
    assert step.accepted[0] == pytest.approx(0.58, abs=1e-15)
    assert step.p_pass == 1.0


def test_closed_form_matches_enumeration():
    rng = np.random.default_rng(42)
    dists = [rng.dirichlet(np.ones(4)) for _ in range(2000)]
    dists += [make_depolarizing(0.25), make_xz(0.3), np.array([0.97, 0.01, 0.01, 0.01])]
    for d in dists:
        for q in "XYZ":
            acc, rej, p_pass = enumerate_step(d, q)
            step = recurrence_step(d, q)
            assert abs(step.p_pass - p_pass) < 1e-12
            assert np.all(np.abs(step.accepted - acc) < 1e-12)
            if rej is not None:
                assert np.all(np.abs(step.rejected - rej) < 1e-12)


def test_rejected_symmetry_and_ppt():
    rng = np.random.default_rng(43)
    for _ in range(2000):
        d = rng.dirichlet(np.ones(4))
        for q in "XYZ":
            rej = recurrence_step(d, q).rejected
            assert rej[0] == rej[1]
            assert rej[2] == rej[3]
            assert ppt_one_pair(rej)


def test_mixture_consistency():
    # pass/fail branches recombine to the unconditioned survivor marginal
    rng = np.random.default_rng(44)
    for _ in range(200):
        d = rng.dirichlet(np.ones(4))
        for q in "XYZ":
            step = recurrence_step(d, q)
            mix = step.p_pass * step.accepted + (1.0 - step.p_pass) * step.rejected
            total = np.zeros(4)
            for a, s1 in enumerate(_BITS.values()):
                for b, s2 in enumerate(_BITS.values()):
                    kept, _ = check_string_map(q, s1, s2)
                    total[_LABEL[kept]] += d[a] * d[b]
            assert np.allclose(mix, total, atol=1e-14)


def test_check_validation():
    with pytest.raises(ValueError):
        recurrence_step([0.7, 0.1, 0.1, 0.1], "I")
    with pytest.raises(ValueError):
        check_string_map("Q", (0, 0), (0, 0))


def test_greedy_choice():
    assert greedy_choice(make_depolarizing(0.3)) == "Z"
    assert greedy_choice([0.6, 0.05, 0.2, 0.15]) == "X"
    assert greedy_choice(make_xz(0.2)) == "Y"


def test_greedy_sequence_depolarizing():
    assert greedy_sequence(make_depolarizing(0.2), 0) == []
    seq = greedy_sequence(make_depolarizing(0.25), 4)
    assert [s.check for s in seq] == ["Z", "Y", "Z", "Y"]


def test_greedy_fidelity_strictly_improves():
    rng = np.random.default_rng(45)
    for _ in range(2000):
        p_i = 0.5 + 0.5 * rng.random()
        d = np.array([p_i, *(rng.dirichlet(np.ones(3)) * (1.0 - p_i))])
        if d[0] >= 1.0:
            continue
        step = recurrence_step(d, greedy_choice(d))
        assert step.accepted[0] > d[0]


def test_greedy_warns_below_half_fidelity():
    with pytest.warns(UserWarning):
        greedy_sequence([0.4, 0.3, 0.2, 0.1], 1)


def test_macchiavello_sequence():
    d = make_depolarizing(0.3)
    mac = macchiavello_sequence(d, 5)
    assert [s.check for s in mac] == ["Z", "Y", "Z", "Y", "Z"]
    greedy = greedy_sequence(d, 5)
    for m, g in zip(mac, greedy):
        assert m.check == g.check
        assert np.array_equal(m.accepted, g.accepted)

    one = macchiavello_sequence(d, 1)[0]
    direct = recurrence_step(d, "Z")
    assert np.array_equal(one.accepted, direct.accepted)

    xz = make_xz(0.3)
    assert macchiavello_sequence(xz, 1)[0].check == "Z"
    assert greedy_sequence(xz, 1)[0].check == "Y"  # diverges at the first step


def test_p_pass_range():
    rng = np.random.default_rng(46)
    for _ in range(500):
        d = rng.dirichlet(np.ones(4))
        for q in "XYZ":
            assert 0.5 <= recurrence_step(d, q).p_pass <= 1.0
