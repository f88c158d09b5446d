from itertools import product

import numpy as np
import pytest

from esdqec.channels import damp, jump_operator, single_qubit_kraus
from esdqec.codes import encode62, measure_and_recover62, six_two
from esdqec.experiments import fidelity_fn
from esdqec.linalg import basis_ket, projector
from esdqec.measures import fidelity
from esdqec.states import StateFamily, random_pure_state

S2 = 1 / np.sqrt(2)


def test_codewords_literal():
    cw = six_two.codewords()
    assert np.array_equal(cw[0], (basis_ket("000000") + basis_ket("111111")) * S2)
    assert np.array_equal(cw[1], (basis_ket("001001") + basis_ket("110110")) * S2)
    assert np.array_equal(cw[2], (basis_ket("000110") + basis_ket("111001")) * S2)
    assert np.array_equal(cw[3], (basis_ket("110000") + basis_ket("001111")) * S2)


def test_recovery_vectors_gram():
    vecs = six_two.recovery_vectors()
    assert np.array_equal(vecs[0], six_two.codewords())
    flat = vecs.reshape(28, 64)
    assert np.max(np.abs(flat.conj() @ flat.T - np.eye(28))) < 1e-14
    assert np.array_equal(vecs[1, 0], basis_ket("011111"))
    assert np.array_equal(vecs[6, 3], basis_ket("001110"))


def test_jump_images_are_listed_vectors():
    """Brute force: a jump on qubit k sends |ij>_L onto |R_{k,ij}> exactly."""
    cw = six_two.codewords()
    vecs = six_two.recovery_vectors()
    for k in range(1, 7):
        for idx in range(4):
            img = jump_operator(k - 1, 6) @ cw[idx]
            assert np.allclose(img / np.linalg.norm(img), vecs[k, idx], atol=1e-15)


def test_encode_examples():
    assert np.allclose(encode62(np.array([1, 0, 0, 0])), (basis_ket("000000") + basis_ket("111111")) * S2)
    assert np.allclose(encode62(np.array([0, 0, 0, 1])), (basis_ket("110000") + basis_ket("001111")) * S2)
    bell = encode62(np.array([1, 0, 0, 1]) / np.sqrt(2))
    kets = ["000000", "111111", "110000", "001111"]
    assert np.allclose(bell, sum(basis_ket(b) for b in kets) / 2)
    assert abs(np.linalg.norm(encode62(random_pure_state(np.random.default_rng(1)))) - 1) < 1e-14


def test_syndrome_projectors():
    ps = six_two.syndrome_projectors()
    assert len(ps) == 8
    for k in range(7):
        assert abs(np.trace(ps[k]) - 4) < 1e-14
    assert abs(np.trace(ps[7]) - 36) < 1e-12
    assert np.max(np.abs(sum(ps) - np.eye(64))) < 1e-15
    for (i, p), (j, q) in product(enumerate(ps), repeat=2):
        assert np.max(np.abs(p @ q - (p if i == j else 0))) < 1e-12
    s = encode62(random_pure_state(np.random.default_rng(3)))
    assert np.allclose(ps[0] @ s, s, atol=1e-15)


def test_recovery_operator():
    r1 = six_two.recovery_operator(1)
    assert np.allclose(r1 @ basis_ket("010000"), six_two.codewords()[3])
    assert np.allclose(six_two.recovery_operator(0) @ six_two.codewords()[2], six_two.codewords()[2])


def test_no_damping_is_identity(rng):
    for _ in range(5):
        s = random_pure_state(rng)
        out = measure_and_recover62(projector(encode62(s)))
        assert np.allclose(out.logical_rho, projector(s), atol=1e-14)
        assert abs(out.failure_weight) < 1e-14


def test_single_jump_on_qubit_one():
    """E1 (any gamma > 0) on physical qubit 1 of |11>_L gives a multiple of |010000>."""
    e1 = single_qubit_kraus(0.3)[1]
    op = np.kron(e1, np.eye(32))
    v = op @ encode62(np.array([0, 0, 0, 1.0]))
    assert np.allclose(v / np.linalg.norm(v), basis_ket("010000"))
    out = measure_and_recover62(projector(v / np.linalg.norm(v)))
    assert abs(fidelity(np.array([0, 0, 0, 1.0]), out.logical_rho) - 1) < 1e-14


def test_every_single_jump_corrected(rng):
    for _ in range(10):
        s = random_pure_state(rng)
        for q in range(6):
            v = jump_operator(q, 6) @ encode62(s)
            out = measure_and_recover62(projector(v / np.linalg.norm(v)))
            assert abs(fidelity(s, out.logical_rho) - 1) < 1e-12
            assert abs(out.success_weight - 1) < 1e-12


def test_failure_branch_is_maximally_mixed():
    out = measure_and_recover62(projector(basis_ket("101010")))
    assert abs(out.failure_weight - 1) < 1e-15
    assert np.allclose(out.logical_rho, np.eye(4) / 4)


def test_double_jump_is_miscorrected():
    # jumps on qubits 1 and 2 take |00>_L to |001111>, half of which lies in |11>_L
    v = jump_operator(1, 6) @ jump_operator(0, 6) @ encode62(np.array([1.0, 0, 0, 0]))
    v /= np.linalg.norm(v)
    assert np.allclose(v, basis_ket("001111"))
    out = measure_and_recover62(projector(v))
    assert abs(out.success_weight - 0.5) < 1e-15
    assert np.allclose(out.logical_rho, np.diag([1, 1, 1, 5]) / 8)


def test_full_channel_trace_bookkeeping(rng):
    for _ in range(20):
        s = random_pure_state(rng)
        out = measure_and_recover62(damp(projector(encode62(s)), float(rng.uniform())))
        assert abs(out.success_weight + out.failure_weight - 1) < 1e-12
        assert abs(np.trace(out.logical_rho) - 1) < 1e-12
        assert np.linalg.eigvalsh(out.logical_rho)[0] > -1e-12


def test_input_validation():
    with pytest.raises(ValueError, match="64x64"):
        measure_and_recover62(np.eye(4) / 4)
    with pytest.raises(ValueError):
        measure_and_recover62(np.eye(64))


def test_basis_change_route_agrees(rng):
    s = six_two.syndrome_basis_change()
    vecs = six_two.recovery_vectors()
    assert np.array_equal(s @ vecs[3, 2], basis_ket("10" + "0011"))
    # partial isometry: unitary on the 28-dim span
    assert np.max(np.abs(s.conj().T @ s - sum(v.T @ v.conj() for v in vecs))) < 1e-14
    for _ in range(5):
        psi = random_pure_state(rng)
        rho = damp(projector(encode62(psi)), float(rng.uniform()))
        a = six_two.recover_via_basis_change(rho)
        assert np.max(np.abs(a - measure_and_recover62(rho).logical_rho)) < 1e-13


def test_small_gamma_phi_fidelity():
    f = fidelity_fn("phi", np.pi / 4, 0.0, "nonlocal62")
    for g in (1e-3, 3e-3):
        assert abs((1 - f(g)) / g**2 - 5) < 100 * g


@pytest.mark.parametrize("family", ["phi", "psi", "zeta", "xi"])
def test_loss_is_quadratic(family):
    f = fidelity_fn(family, 0.6, 0.4, "nonlocal62")
    gs = np.array([1e-3, 3e-3, 1e-2])
    slope = np.polyfit(np.log(gs), np.log([1 - f(g) for g in gs]), 1)[0]
    assert abs(slope - 2) < 0.05


@pytest.mark.parametrize("alpha", [0.2, 0.7, 1.1])
@pytest.mark.parametrize("beta", [0.0, 1.9])
def test_psi_xi_exact_symmetry(alpha, beta):
    fp = fidelity_fn("psi", alpha, beta, "nonlocal62")
    fx = fidelity_fn("xi", alpha, beta, "nonlocal62")
    for g in np.linspace(0, 1, 21):
        assert abs(fp(g) - fx(g)) < 1e-12


def test_phi_zeta_exact_symmetry():
    fp = fidelity_fn("phi", 0.5, 0.3, "nonlocal62")
    fz = fidelity_fn("zeta", 0.5, 0.3, "nonlocal62")
    for g in np.linspace(0, 1, 21):
        assert abs(fp(g) - fz(g)) < 1e-12
