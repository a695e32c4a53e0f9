"""Symplectic algebra vs a dense-matrix oracle, and entropy identities."""

import itertools
import math

import numpy as np
import pytest

from qdistill.pauli import (
    as_prob_vec,
    bellstring_to_pauli,
    binary_entropy,
    bxor_map,
    commutation_sign,
    entropy_of_direct_sum,
    hadamard_map,
    pauli_to_bellstring,
    renormalize,
    shannon_entropy,
    symplectic_commutes,
)

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense(pauli: str) -> np.ndarray:
    mat = np.eye(1, dtype=complex)
    for ch in pauli:
        mat = np.kron(mat, _MATS[ch])
    return mat


def test_single_qubit_examples():
    assert symplectic_commutes("X", "Z") == 1
    for p in "IXYZ":
        assert symplectic_commutes(p, p) == 0
    assert symplectic_commutes("XZ", "ZZ") == 1  # dense oracle agrees below


def test_matches_dense_commutator_up_to_three_qubits():
    for n in (1, 2, 3):
        strings = ["".join(s) for s in itertools.product("IXYZ", repeat=n)]
        mats = {s: dense(s) for s in strings}
        for s in strings:
            for t in strings:
                commutes = np.allclose(mats[s] @ mats[t], mats[t] @ mats[s])
                assert symplectic_commutes(s, t) == (0 if commutes else 1)


def test_commutation_sign():
    assert commutation_sign("Y", "Y") == 1
    assert commutation_sign("X", "Y") == -1
    assert commutation_sign("ZZZZ", "XIIX") == 1
    mats_a, mats_b = dense("ZZZZ"), dense("XIIX")
    assert np.allclose(mats_a @ mats_b, mats_b @ mats_a)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        symplectic_commutes("XZ", "X")


def test_bellstring_roundtrip():
    assert pauli_to_bellstring("XZ") == ((1, 0), (0, 1))
    for s in ("I", "XYZ", "ZZZZ"):
        assert bellstring_to_pauli(pauli_to_bellstring(s)) == s
    assert symplectic_commutes(((1, 0),), ((0, 1),)) == 1


def test_shannon_entropy_values():
    assert shannon_entropy([1.0, 0.0, 0.0, 0.0]) == 0.0
    assert shannon_entropy([0.25] * 4) == 2.0
    # high-precision summation oracle (50-digit mpmath)
    value = shannon_entropy([0.9, 0.1 / 3, 0.1 / 3, 0.1 / 3])
    assert abs(value - 0.6274918436613968394) < 1e-12


def test_shannon_entropy_rejects_negative():
    with pytest.raises(ValueError):
        shannon_entropy([0.5, -0.1, 0.6])


def test_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    rng = np.random.default_rng(3)
    for x in rng.random(50):
        assert binary_entropy(x) == pytest.approx(binary_entropy(1.0 - x), abs=1e-12)
        assert binary_entropy(x) == pytest.approx(shannon_entropy([x, 1.0 - x]), abs=1e-12)
    with pytest.raises(ValueError):
        binary_entropy(1.2)
    with pytest.raises(ValueError):
        binary_entropy(-0.1)


def test_entropy_of_direct_sum():
    assert entropy_of_direct_sum(1.0, 0.7, 0.9) == 0.7
    assert entropy_of_direct_sum(0.5, 1.0, 1.0) == 2.0
    # merge-and-evaluate oracle on random block distributions
    rng = np.random.default_rng(11)
    for _ in range(300):
        b0 = rng.dirichlet(np.ones(rng.integers(1, 6)))
        b1 = rng.dirichlet(np.ones(rng.integers(1, 6)))
        p0 = float(rng.random())
        merged = np.concatenate([p0 * b0, (1.0 - p0) * b1])
        expected = shannon_entropy(merged)
        got = entropy_of_direct_sum(p0, shannon_entropy(b0), shannon_entropy(b1))
        assert abs(got - expected) < 1e-10


def test_grouping_inequality():
    # -x lg x - y lg y + (x+y) lg(x+y) >= 0, including both-zero boundary
    def margin(x, y):
        total = 0.0
        if x > 0:
            total -= x * math.log2(x)
        if y > 0:
            total -= y * math.log2(y)
        if x + y > 0:
            total += (x + y) * math.log2(x + y)
        return total

    assert margin(0.0, 0.0) == 0.0
    assert margin(0.0, 0.4) == 0.0
    rng = np.random.default_rng(5)
    for x, y in rng.random((2000, 2)) * 2.0:
        m = margin(x, y)
        assert m >= -1e-12
        assert m == pytest.approx((x + y) * binary_entropy(x / (x + y)), abs=1e-10)


def test_mean_ratio_inequality():
    # cd(a^2+b^2) - ab(c^2+d^2) >= 0 for a = 1/2+eps and a >= c >= d >= b
    rng = np.random.default_rng(7)
    for _ in range(2000):
        a = 0.5 + 0.5 * rng.random()
        c, d, b = np.sort(rng.dirichlet(np.ones(3)) * (1.0 - a))[::-1]
        assert c * d * (a * a + b * b) - a * b * (c * c + d * d) >= -1e-15


def test_prob_vec_validation():
    v = as_prob_vec([0.5, 0.25, 0.25])
    assert v.sum() == 1.0
    with pytest.raises(ValueError):
        as_prob_vec([0.5, 0.6])
    with pytest.raises(ValueError):
        as_prob_vec([1.1, -0.1])
    scaled = renormalize([2.0, 2.0])
    assert np.array_equal(scaled, [0.5, 0.5])
    with pytest.raises(ValueError):
        renormalize([0.0, 0.0])


def test_bxor_and_hadamard_maps():
    assert bxor_map((0, 0), (0, 0)) == ((0, 0), (0, 0))
    assert bxor_map((1, 0), (0, 1)) == ((1, 1), (1, 1))
    assert hadamard_map((0, 1)) == (1, 0)
    assert hadamard_map((0, 0)) == (0, 0)
    for s1 in itertools.product((0, 1), repeat=2):
        for s2 in itertools.product((0, 1), repeat=2):
            a, b = bxor_map(s1, s2)
            assert bxor_map(a, b) == (s1, s2)  # involution
            assert hadamard_map(hadamard_map(s1)) == s1
