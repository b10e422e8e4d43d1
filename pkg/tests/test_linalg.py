import numpy as np
import pytest

from spinthermal import (
    ModelSpec,
    NoConvergence,
    NotHermitian,
    NotPSD,
    build_hamiltonian,
    hermitian_eigen,
    kron,
    psd_sqrt,
)
from spinthermal.spinmodel import SIGMA_X, SIGMA_Y, SIGMA_Z

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


def test_kron_identity():
    assert np.array_equal(kron(I2, I2), I4)


def test_kron_sigma_x_pair_is_antidiagonal():
    got = kron(SIGMA_X, SIGMA_X)
    expected = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        expected[i, 3 - i] = 1.0
    assert np.array_equal(got, expected)


def test_kron_sigma_y_pair_is_involutory():
    yy = kron(SIGMA_Y, SIGMA_Y)
    assert np.abs(yy @ yy - I4).max() < 1e-15


def test_kron_mixed_product_property():
    rng = np.random.default_rng(11)
    for _ in range(10):
        a, b, c, d = (
            rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            for _ in range(4)
        )
        lhs = kron(a, b) @ kron(c, d)
        rhs = kron(a @ c, b @ d)
        assert np.abs(lhs - rhs).max() < 1e-12


def test_kron_associative():
    rng = np.random.default_rng(12)
    a, b, c = (
        rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        for _ in range(3)
    )
    assert np.abs(kron(kron(a, b), c) - kron(a, kron(b, c))).max() < 1e-12


def test_eigen_sigma_z():
    spec = hermitian_eigen(SIGMA_Z)
    assert np.allclose(spec.eigenvalues, [-1.0, 1.0], atol=1e-14)


def test_eigen_xx_multiset():
    spec = hermitian_eigen(build_hamiltonian(ModelSpec.xx(1.0)))
    expected = np.array([-1.0, -1.0, -1.0, -1.0, 0.0, 0.0, 2.0, 2.0])
    assert np.abs(np.sort(spec.eigenvalues) - expected).max() < 1e-12


def test_eigen_xxz_multiset():
    # J = -1, delta = -1/2: the single-excitation quadruplet joins the
    # fully polarized pair at zero and the symmetric pair sits at -3.
    spec = hermitian_eigen(build_hamiltonian(ModelSpec.xxz(-1.0, -0.5)))
    expected = np.array([-3.0, -3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    assert np.abs(np.sort(spec.eigenvalues) - expected).max() < 1e-12


def test_eigen_random_hermitian_invariants():
    rng = np.random.default_rng(5)
    for _ in range(20):
        h = random_hermitian(rng, 8)
        spec = hermitian_eigen(h)
        assert abs(np.trace(h).real - spec.eigenvalues.sum()) < 1e-10
        v = spec.eigenvectors
        assert np.abs(v.conj().T @ v - np.eye(8)).max() < 1e-10
        recon = (v * spec.eigenvalues) @ v.conj().T
        assert np.abs(recon - h).max() < 1e-10 * max(1.0, np.abs(h).max())
        assert (np.diff(spec.eigenvalues) >= -1e-14).all()


def test_eigen_matches_lapack():
    rng = np.random.default_rng(6)
    for n in (2, 4, 8):
        h = random_hermitian(rng, n)
        got = hermitian_eigen(h).eigenvalues
        ref = np.linalg.eigvalsh(h)
        assert np.abs(got - ref).max() < 1e-12


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigen_rejects_non_finite():
    bad = np.array([[np.inf, 0.0], [0.0, 1.0]])
    with pytest.raises(NotHermitian):
        hermitian_eigen(bad)


def test_eigen_zero_matrix():
    spec = hermitian_eigen(np.zeros((4, 4)))
    assert np.array_equal(spec.eigenvalues, np.zeros(4))


def test_degenerate_groups():
    spec = hermitian_eigen(build_hamiltonian(ModelSpec.xx(1.0)))
    sizes = sorted(len(g) for g in spec.degenerate_groups())
    assert sizes == [2, 2, 4]


def test_psd_sqrt_identity():
    assert np.abs(psd_sqrt(I4) - I4).max() < 1e-12


def test_psd_sqrt_diagonal():
    m = np.diag([4.0, 1.0, 0.0, 0.0]).astype(complex)
    expected = np.diag([2.0, 1.0, 0.0, 0.0])
    assert np.abs(psd_sqrt(m) - expected).max() < 1e-12


def test_psd_sqrt_maximally_mixed():
    assert np.abs(psd_sqrt(I4 / 4.0) - I4 / 2.0).max() < 1e-12


def test_psd_sqrt_squares_back():
    rng = np.random.default_rng(9)
    for _ in range(10):
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = a.conj().T @ a
        root = psd_sqrt(m)
        assert np.abs(root - root.conj().T).max() < 1e-12
        assert np.abs(root @ root - m).max() < 1e-9


def test_psd_sqrt_clamps_tiny_negative():
    m = np.diag([1.0, 0.5, -1e-13, 0.0]).astype(complex)
    root = psd_sqrt(m)
    assert root[2, 2].real == 0.0


def test_psd_sqrt_rejects_negative():
    with pytest.raises(NotPSD):
        psd_sqrt(np.diag([1.0, -0.5]).astype(complex))


def test_no_convergence_raised_at_sweep_cap(monkeypatch):
    # the 8x8 problems here always converge well inside the cap; force a
    # zero-sweep budget to exercise the failure path
    import spinthermal.linalg as linalg_mod

    monkeypatch.setattr(linalg_mod, "JACOBI_SWEEP_CAP", 0)
    with pytest.raises(NoConvergence):
        linalg_mod.hermitian_eigen(build_hamiltonian(ModelSpec.xx(1.0)))
