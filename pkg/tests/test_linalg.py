import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from esdqec.linalg import (
    basis_ket,
    check_density,
    hermitian_eigenvalues,
    hermitian_eigh,
    is_hermitian,
    is_psd,
    is_unitary,
    kron_all,
    projector,
    psd_sqrt,
    tensor_product,
)

X = np.array([[0, 1], [1, 0]], dtype=complex)
I2 = np.eye(2)

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def random_psd(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a @ a.conj().T


def test_tensor_product_examples():
    assert np.array_equal(tensor_product(I2, I2), np.eye(4))
    assert np.array_equal(tensor_product(basis_ket("0"), basis_ket("1")), basis_ket("01"))
    assert np.array_equal(tensor_product(X, X) @ basis_ket("00"), basis_ket("11"))


def test_tensor_product_blocks(rng):
    a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
    b = rng.normal(size=(3, 2))
    k = tensor_product(a, b)
    assert k.shape == (6, 6)
    for i in range(2):
        for j in range(3):
            assert np.array_equal(k[3 * i : 3 * i + 3, 2 * j : 2 * j + 2], a[i, j] * b)


ints = st.integers(-50, 50)


@given(
    arrays(np.int64, (2, 2), elements=ints),
    arrays(np.int64, (2, 3), elements=ints),
    arrays(np.int64, (3, 1), elements=ints),
)
def test_tensor_product_associative(a, b, c):
    # integer entries keep every product exact in floating point
    assert np.array_equal(tensor_product(tensor_product(a, b), c), tensor_product(a, tensor_product(b, c)))


def test_big_endian_ordering():
    assert np.argmax(np.abs(basis_ket("110000"))) == 0b110000
    assert np.array_equal(kron_all(basis_ket("1"), basis_ket("1"), basis_ket("0000")), basis_ket("110000"))


def test_eigenvalue_examples():
    assert np.allclose(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [3, 2, 1], atol=1e-14)
    assert np.allclose(hermitian_eigenvalues(X), [1, -1], atol=1e-14)
    v = np.array([1, 1j, -1, 2]) / np.sqrt(7)
    assert np.allclose(hermitian_eigenvalues(projector(v)), [1, 0, 0, 0], atol=1e-14)


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.ones((2, 3)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 8, 16])
def test_jacobi_against_lapack(rng, n):
    for _ in range(5):
        h = random_hermitian(rng, n)
        w, v = hermitian_eigh(h, method="jacobi")
        assert np.all(np.diff(w) <= 0)
        assert abs(np.trace(h).real - w.sum()) < 1e-10
        assert np.max(np.abs(h @ v - v * w)) < 1e-8
        assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-12
        assert np.allclose(w, np.sort(np.linalg.eigvalsh(h))[::-1], atol=1e-10)


def test_lapack_path_for_large(rng):
    h = random_hermitian(rng, 64)
    w = hermitian_eigenvalues(h)
    assert abs(np.trace(h).real - w.sum()) < 1e-10
    with pytest.raises(ValueError):
        hermitian_eigh(h, method="qr")


def test_jacobi_degenerate_and_diagonal():
    w, v = hermitian_eigh(np.eye(5), method="jacobi")
    assert np.array_equal(w, np.ones(5))
    h = np.diag([1.0, 1.0, 2.0]) + 0j
    h[0, 1] = h[1, 0] = 1e-20
    assert np.allclose(hermitian_eigenvalues(h), [2, 1, 1])


def test_psd_sqrt_examples():
    assert np.allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-14)
    assert np.allclose(psd_sqrt(np.eye(4)), np.eye(4), atol=1e-14)
    p = projector(np.array([1, 1j, 0, 1]) / np.sqrt(3))
    assert np.allclose(psd_sqrt(p), p, atol=1e-14)


def test_psd_sqrt_rejects_negative():
    with pytest.raises(ValueError, match="eigenvalue"):
        psd_sqrt(np.diag([1.0, -1e-6]))
    # rounding-level negatives are clamped
    assert np.allclose(psd_sqrt(np.diag([1.0, -1e-12])), np.diag([1.0, 0.0]))


@pytest.mark.parametrize("n", [2, 3, 4, 8])
def test_psd_sqrt_properties(rng, n):
    for _ in range(10):
        h = random_psd(rng, n)
        r = psd_sqrt(h)
        assert np.max(np.abs(r @ r - h)) < 1e-9 * max(1, np.max(np.abs(h)))
        assert is_psd(r)
        assert np.max(np.abs(psd_sqrt(r @ r) - r)) < 1e-8


@settings(max_examples=50)
@given(arrays(np.float64, (3, 3), elements=finite), arrays(np.float64, (3, 3), elements=finite))
def test_psd_sqrt_hypothesis(re, im):
    a = re + 1j * im
    h = a @ a.conj().T
    r = psd_sqrt(h)
    assert np.max(np.abs(r @ r - h)) < 1e-9 * max(1.0, np.max(np.abs(h)))


def test_structure_predicates():
    assert is_hermitian(X) and is_unitary(X) and not is_psd(X)
    assert is_psd(np.diag([1.0, -1e-11]))
    assert not is_hermitian(np.array([[0, 1], [0, 0]]))
    h = np.diag([1.0, 0.0]) + 0j
    h[0, 1] = 1e-11
    assert is_hermitian(h)
    h[0, 1] = 1e-9
    assert not is_hermitian(h)


def test_check_density():
    rho = projector(basis_ket("01"))
    assert check_density(rho, 4) is not None
    with pytest.raises(ValueError, match="4x4"):
        check_density(rho, 8)
    with pytest.raises(ValueError, match="trace"):
        check_density(2 * rho)
    with pytest.raises(ValueError, match="eigenvalue"):
        check_density(np.diag([1.5, -0.5]))
    with pytest.raises(ValueError, match="power of two"):
        check_density(np.eye(3) / 3)
