import numpy as np
import pytest

from cgcsurf.errors import DegenerateDenominator, ZeroLambda
from cgcsurf.gauss import MetricField, solve_gauss, umbilic_seed
from cgcsurf.grid import Grid, window_mask
from cgcsurf.lax import (
    SU2,
    SU11,
    build_uv,
    compute_p,
    frame_csv,
    frame_unitarity_residual,
    integrate_frame,
    reality_residual,
    zero_curvature_residual,
)
from cgcsurf.qdiff import PLANE, QDiff

K = -0.75


@pytest.fixture(scope="module")
def umbilic33():
    grid = Grid.centered_square(0.5, 33)
    return grid, umbilic_seed(K, grid)


def test_zero_lambda_rejected(umbilic33):
    grid, mf = umbilic33
    with pytest.raises(ZeroLambda):
        build_uv(mf, grid, QDiff.zero(), 0.0)


def test_uv_entries_at_origin(umbilic33):
    # at z = 0 the umbilic seed has du = 0, e^{u/2} = sqrt(16/3), sigma = 1/2
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), 1.0)
    i, j = grid.base_index
    x = (1.0 + 0.5) / 2.0
    y = (1.0 - 0.5) / 2.0
    e = np.sqrt(16.0 / 3.0)
    u, v = mc.U[i, j], mc.V[i, j]
    assert u[0, 0] == pytest.approx(0.0, abs=1e-12)
    assert u[0, 1] == pytest.approx(1j * x * e, abs=1e-12)
    assert u[1, 0] == 0.0  # Q = 0
    assert v[0, 1] == 0.0
    assert v[1, 0] == pytest.approx(-1j * y * e, abs=1e-12)
    assert np.trace(u) == pytest.approx(0.0, abs=1e-14)
    assert np.trace(v) == pytest.approx(0.0, abs=1e-14)


def test_compute_p_holomorphic_is_small(umbilic33):
    grid, mf = umbilic33
    qs = 0.1 * grid.zmesh
    p = compute_p(mf, qs, grid)
    assert np.max(np.abs(p[grid.interior()])) <= 1e-12


def test_compute_p_antiholomorphic_origin():
    grid = Grid.centered_square(0.5, 33)
    mf = MetricField(u=np.zeros((33, 33)), K=K)
    p = compute_p(mf, np.conj(grid.zmesh), grid)
    i, j = grid.base_index
    assert p[i, j] == pytest.approx(-0.5, abs=1e-12)


def test_compute_p_degenerate_denominator():
    grid = Grid.centered_square(0.5, 33)
    mf = MetricField(u=np.zeros((33, 33)), K=K)
    with pytest.raises(DegenerateDenominator):
        compute_p(mf, np.ones((33, 33), dtype=complex), grid)


def test_flatness_on_solution(umbilic33):
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), 1.0)
    r = zero_curvature_residual(mc, grid)
    assert np.max(r[window_mask(grid)]) <= 0.05


def test_flatness_negative_control():
    grid = Grid.centered_square(0.5, 33)
    mf = MetricField(u=np.zeros((33, 33)), K=K)
    qs = np.conj(grid.zmesh)
    mc = build_uv(mf, grid, None, 1.0, p=compute_p(mf, qs, grid), qs=qs)
    assert np.max(zero_curvature_residual(mc, grid)) >= 1e-2


def test_reality_condition_at_special_modulus(umbilic33):
    grid, mf = umbilic33
    lam0 = np.sqrt(3.0)
    assert reality_residual(build_uv(mf, grid, QDiff.zero(), lam0), SU11) <= 1e-10
    assert reality_residual(build_uv(mf, grid, QDiff.zero(), 1.0), SU11) >= 1e-2


def test_reality_condition_su2():
    grid = Grid.centered_square(0.2, 17)
    q = QDiff((0j, 0.1 + 0j))
    mf = solve_gauss(q, 3.0, grid)
    assert reality_residual(build_uv(mf, grid, q, np.sqrt(3.0)), SU2) <= 1e-10


def test_frame_base_identity_and_det(umbilic33):
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), 1.0)
    frame = integrate_frame(mc, grid)
    i, j = frame.base_index
    assert np.allclose(frame.psi[i, j], np.eye(2), atol=1e-14)
    det = np.linalg.det(frame.psi)
    assert np.max(np.abs(det - 1.0)) <= 1e-12
    assert not frame.drift_warning


def test_frame_unitarity_at_special_modulus(umbilic33):
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), np.sqrt(3.0))
    frame = integrate_frame(mc, grid)
    assert frame_unitarity_residual(frame, SU11) <= 1e-8
    mc1 = build_uv(mf, grid, QDiff.zero(), 1.0)
    assert frame_unitarity_residual(integrate_frame(mc1, grid), SU11) >= 1e-2


def test_integration_order_agreement(umbilic33):
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), 1.0)
    fr = integrate_frame(mc, grid, order="rows-first")
    fc = integrate_frame(mc, grid, order="columns-first")
    assert np.max(np.abs(fr.psi - fc.psi)) <= 1e-2


def test_frame_csv_shape(umbilic33):
    grid, mf = umbilic33
    mc = build_uv(mf, grid, QDiff.zero(), 1.0)
    frame = integrate_frame(mc, grid)
    lines = frame_csv(frame).splitlines()
    assert lines[0].startswith("i,j,re_a11")
    assert len(lines) == 1 + 33 * 33
