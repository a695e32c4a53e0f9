"""Channel constructors, bilateral rotations, and PPT tests vs dense oracles."""

import itertools

import numpy as np
import pytest

from qdistill.channels import (
    bilateral_rotate,
    entanglement_fidelity,
    make_depolarizing,
    make_xz,
    permutation_group,
    ppt_bell_diagonal,
    ppt_one_pair,
    reachable_permutations,
)
from qdistill.recurrence import recurrence_step

_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_LABELS = "IXYZ"


def bell_pair_state(label: str) -> np.ndarray:
    """|B> with the given error on the second qubit, as a 4-vector."""
    plus = np.zeros(4, dtype=complex)
    plus[0] = plus[3] = 1 / np.sqrt(2)
    return np.kron(np.eye(2), _MATS[label]) @ plus


def bell_diag_density(d) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    for p, label in zip(d, _LABELS):
        v = bell_pair_state(label)
        rho += p * np.outer(v, v.conj())
    return rho


def test_make_depolarizing():
    assert np.array_equal(make_depolarizing(0.0), [1, 0, 0, 0])
    assert np.allclose(make_depolarizing(0.75), [0.25] * 4)
    assert np.allclose(make_depolarizing(0.3), [0.7, 0.1, 0.1, 0.1])
    with pytest.raises(ValueError):
        make_depolarizing(1.5)


def test_make_xz():
    assert np.array_equal(make_xz(0.0), [1, 0, 0, 0])
    assert np.allclose(make_xz(0.4), [0.6, 0.2, 0.0, 0.2])
    for p in np.linspace(0, 1, 11):
        assert make_xz(p)[2] == 0.0
    with pytest.raises(ValueError):
        make_xz(-0.1)


def test_entanglement_fidelity():
    assert entanglement_fidelity([1, 0, 0, 0]) == 1.0
    assert entanglement_fidelity(make_depolarizing(0.3)) == pytest.approx(0.7)
    d = np.array([0.4, 0.3, 0.2, 0.1])
    assert entanglement_fidelity(d) == entanglement_fidelity(d[[0, 2, 3, 1]])


def test_bilateral_rotate_examples():
    d = np.array([0.4, 0.3, 0.2, 0.1])
    assert np.array_equal(bilateral_rotate(d, "X"), [0.3, 0.4, 0.2, 0.1])
    assert np.array_equal(bilateral_rotate([0.6, 0.2, 0.1, 0.1], "Z"), [0.1, 0.2, 0.1, 0.6])
    for q in "XYZ":
        assert np.array_equal(bilateral_rotate(bilateral_rotate(d, q), q), d)
    with pytest.raises(ValueError):
        bilateral_rotate(d, "I")


def test_bilateral_rotate_matches_unitary_conjugation():
    # Oracle: conjugate the Bell-diagonal density matrix by R_q (x) R_q and
    # read the new weights back off the Bell basis.
    rng = np.random.default_rng(2)
    for q in "XYZ":
        r = (np.eye(2, dtype=complex) - 1j * _MATS[q]) / np.sqrt(2)
        big = np.kron(r, r)
        for _ in range(20):
            d = rng.dirichlet(np.ones(4))
            rho = big @ bell_diag_density(d) @ big.conj().T
            expected = [np.real(bell_pair_state(lab).conj() @ rho @ bell_pair_state(lab))
                        for lab in _LABELS]
            assert np.allclose(bilateral_rotate(d, q), expected, atol=1e-12)


def test_reachable_permutations():
    uniform = reachable_permutations([0.25] * 4)
    assert len(uniform) == 1
    generic = reachable_permutations([0.4, 0.3, 0.2, 0.1])
    assert len(generic) == 24
    # closed under further rotations
    keys = {tuple(v) for v in generic}
    for v in generic:
        for q in "XYZ":
            assert tuple(bilateral_rotate(v, q)) in keys
    restricted = reachable_permutations([0.4, 0.3, 0.2, 0.1], rotations_only=True)
    assert len(restricted) == 6
    assert all(v[2] == 0.2 for v in restricted)  # rotations alone fix the Y slot


def test_permutation_group_is_full_symmetric_group():
    assert set(permutation_group(True)) == set(itertools.permutations(range(4)))
    assert len(permutation_group(False)) == 6


def test_ppt_one_pair_basics():
    assert not ppt_one_pair([1, 0, 0, 0])
    assert ppt_one_pair([0.25] * 4)
    # a Bell-diagonal state is NPT whenever some weight exceeds 1/2
    rng = np.random.default_rng(4)
    for _ in range(200):
        d = rng.dirichlet(np.ones(4))
        assert ppt_one_pair(d) == (d.max() <= 0.5 + 1e-12)


def test_rejected_recurrence_states_are_ppt():
    rng = np.random.default_rng(5)
    for _ in range(300):
        d = rng.dirichlet(np.ones(4))
        for q in "XYZ":
            rej = recurrence_step(d, q).rejected
            assert rej[0] == rej[1] and rej[2] == rej[3]
            assert ppt_one_pair(rej)


def _dense_min_pt_eigenvalue(alpha, n: int) -> float:
    """Partial transpose over all of Bob's qubits, smallest eigenvalue."""
    labels = ["".join(s) for s in itertools.product(_LABELS, repeat=n)]
    dim = 4**n
    rho = np.zeros((dim, dim), dtype=complex)
    for a, lab in zip(alpha, labels):
        vec = np.ones(1, dtype=complex)
        for ch in lab:
            vec = np.kron(vec, bell_pair_state(ch))
        rho += a * np.outer(vec, vec.conj())
    # qubit order is A1 B1 A2 B2 ...; row axes come first, then column axes
    tens = rho.reshape((2,) * (4 * n))
    axes = list(range(4 * n))
    for i in range(n):
        b_row = 2 * i + 1
        b_col = 2 * n + 2 * i + 1
        axes[b_row], axes[b_col] = axes[b_col], axes[b_row]
    pt = tens.transpose(axes).reshape(dim, dim)
    return float(np.linalg.eigvalsh(pt).min())


@pytest.mark.parametrize("n", [1, 2])
def test_ppt_bell_diagonal_matches_dense_oracle(n):
    rng = np.random.default_rng(6 + n)
    for _ in range(40):
        alpha = rng.dirichlet(np.ones(4**n))
        min_eig = _dense_min_pt_eigenvalue(alpha, n)
        if abs(min_eig) < 1e-10:  # too close to the boundary to compare booleans
            continue
        assert ppt_bell_diagonal(alpha) == (min_eig > 0)


def test_ppt_bell_diagonal_reduces_to_one_pair():
    rng = np.random.default_rng(9)
    for _ in range(500):
        d = rng.dirichlet(np.ones(4))
        assert ppt_bell_diagonal(d) == ppt_one_pair(d)
    assert ppt_bell_diagonal(np.full(16, 1 / 16))


def test_ppt_bell_diagonal_input_validation():
    with pytest.raises(ValueError):
        ppt_bell_diagonal(np.ones(5) / 5)
    with pytest.raises(ValueError):
        ppt_bell_diagonal(np.full(4**9, 1.0 / 4**9))
