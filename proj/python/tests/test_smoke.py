import math

import numpy as np
import pytest

import s3modes


def embed(chi, theta, phi):
    return np.array([math.cos(chi) * math.cos(theta), math.sin(chi) * math.cos(phi),
                     math.sin(chi) * math.sin(phi), math.cos(chi) * math.sin(theta)])


def test_change_of_basis_round_trip():
    E = s3modes.t_from_phi_matrix(4)
    F = s3modes.phi_from_t_matrix(4)
    assert np.abs(E @ F - np.eye(25)).max() < 1e-9


def test_phi_is_power_of_null_dot_product():
    k, I, J = 4, 1, 3
    alpha = 2 * math.pi / (k + 1)
    a, b = I * alpha, J * alpha
    n = np.array([math.cos(a), 1j * math.sin(b), 1j * math.cos(b), math.sin(a)])
    assert abs(n @ n) < 1e-14
    chi, theta, phi = 0.4, 1.1, 2.5
    expected = (embed(chi, theta, phi) @ n) ** k
    assert abs(s3modes.eval_Phi(k, I, J, chi, theta, phi) - expected) < 1e-12


def test_coherent_coefficient_at_level_two():
    assert s3modes.coeff_P(2, 0, 0) == pytest.approx(math.pi / (2 * math.sqrt(3)), rel=1e-14)


def test_jacobi_against_scipy():
    special = pytest.importorskip("scipy.special")
    for d, a, b, x in [(3, 2, 1, 0.3), (5, 0, 4, -0.7), (2, 3, 3, 0.9)]:
        assert s3modes.jacobi_poly(d, a, b, x) == pytest.approx(special.eval_jacobi(d, a, b, x), rel=1e-12)


def test_rotation_representation():
    rng = np.random.default_rng(3)

    def rand_rot():
        l, r = rng.normal(size=4), rng.normal(size=4)
        return s3modes.Rotation(l / np.linalg.norm(l), r / np.linalg.norm(r))

    g, h = rand_rot(), rand_rot()
    Gg, Gh = s3modes.g_coeffs(g, 2), s3modes.g_coeffs(h, 2)
    assert np.abs(Gg @ Gh - s3modes.g_coeffs(s3modes.compose(g, h), 2)).max() < 1e-8
    assert np.abs(Gg - s3modes.g_coeffs_oracle(g, 2)).max() < 1e-8
    assert np.abs(s3modes.g_coeffs(s3modes.Rotation.identity(), 4) - np.eye(25)).max() < 1e-12


def test_multiplicities():
    assert s3modes.multiplicity("lens:5,1", 2)["multiplicity"] == 3
    assert s3modes.multiplicity("prism:2", 4)["multiplicity"] == 10
    assert len(s3modes.lens_modes(5, 1, 2)) == 3


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        s3modes.eval_Phi(3, 0, 0, 0.1, 0.2, 0.3)
    with pytest.raises(ValueError):
        s3modes.multiplicity("lens:4,2", 2)
