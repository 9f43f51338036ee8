import numpy as np
import pytest
from hypothesis import given, strategies as st

from cgcsurf.errors import NotOnHyperboloid, NotOnOrbit
from cgcsurf.minkowski import (
    E0,
    E1,
    E2,
    E3,
    EHAT2,
    EHAT3,
    herm_from_mink,
    mink_from_herm,
    mink_inner,
    mink_pairing,
    su2_sphere,
    su11_disk,
    to_poincare_ball,
)

finite = st.floats(
    min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False
)


def test_basis_signature():
    basis = (E0, E1, E2, E3)
    gram = np.array([[mink_inner(a, b) for b in basis] for a in basis])
    assert np.array_equal(gram, np.diag([-1.0, 1.0, 1.0, 1.0]))


def test_null_basis_pairings():
    assert mink_pairing(EHAT2, EHAT2) == 0
    assert mink_pairing(EHAT3, EHAT3) == 0
    assert mink_pairing(EHAT2, EHAT3) == 0.5


@given(finite, finite, finite, finite)
def test_inner_equals_minus_det(x0, x1, x2, x3):
    a = herm_from_mink(np.array([x0, x1, x2, x3]))
    det = np.linalg.det(a).real
    norm2 = np.sum(np.abs(a) ** 2)
    assert abs(mink_inner(a, a) + det) <= 1e-12 * (1.0 + norm2)


@given(finite, finite, finite, finite)
def test_herm_mink_round_trip(x0, x1, x2, x3):
    v = np.array([x0, x1, x2, x3])
    back = mink_from_herm(herm_from_mink(v))
    assert np.allclose(back, v, atol=1e-12)


def test_mink_from_herm_batched():
    rng = np.random.default_rng(1)
    vs = rng.standard_normal((5, 7, 4))
    a = np.zeros((5, 7, 2, 2), dtype=complex)
    for i in range(5):
        for j in range(7):
            a[i, j] = herm_from_mink(vs[i, j])
    assert np.allclose(mink_from_herm(a), vs, atol=1e-12)


def test_poincare_ball_origin():
    assert np.allclose(to_poincare_ball(np.array([1.0, 0, 0, 0])), 0.0)


def test_poincare_ball_known_point():
    # x0 = cosh t, x1 = sinh t maps to tanh(t/2) along the first axis
    t = 0.7
    v = np.array([np.cosh(t), np.sinh(t), 0.0, 0.0])
    b = to_poincare_ball(v)
    assert np.allclose(b, [np.tanh(t / 2.0), 0.0, 0.0], atol=1e-12)


def test_poincare_ball_rejects_off_hyperboloid():
    with pytest.raises(NotOnHyperboloid):
        to_poincare_ball(np.array([1.5, 0.0, 0.0, 0.0]))


def test_su11_disk_identity_orbit_point():
    # i e1 is the base point of the disk orbit and maps to the center
    l = 1j * E1
    assert abs(su11_disk(l[None, None])[0, 0]) <= 1e-12


def test_su11_disk_rejects_wrong_orbit():
    # -i e1 is timelike but on the opposite (x0 < 0) sheet
    with pytest.raises(NotOnOrbit):
        su11_disk((-1j * E1)[None, None])


def test_su2_sphere_base_point():
    l = 1j * E1
    vec = su2_sphere(l[None, None])[0, 0]
    assert np.allclose(vec, [1.0, 0.0, 0.0], atol=1e-12)
