import numpy as np
import pytest

from cgcsurf.errors import DomainViolation, ImmersionViolated
from cgcsurf.gauss import (
    MetricField,
    default_boundary,
    gauss_residual,
    metric_field_csv,
    ode_oracle,
    sinh_normal_residual,
    solve_gauss,
    umbilic_seed,
)
from cgcsurf.grid import Grid
from cgcsurf.qdiff import PLANE, QDiff

K = -0.75


def test_metric_field_rejects_bad_k():
    with pytest.raises(ValueError):
        MetricField(u=np.zeros((9, 9)), K=-1.5)
    with pytest.raises(ValueError):
        MetricField(u=np.zeros((9, 9)), K=0.0)


def test_umbilic_seed_value_at_origin():
    grid = Grid.centered_square(0.25, 9)
    mf = umbilic_seed(K, grid)
    i, j = grid.base_index
    assert mf.u[i, j] == pytest.approx(np.log(16.0 / 3.0), abs=1e-14)


def test_umbilic_seed_requires_disk():
    with pytest.raises(DomainViolation):
        umbilic_seed(K, Grid.centered_square(0.8, 9))


def test_umbilic_seed_solves_equation_to_h2():
    residuals = []
    for n in (33, 65):
        grid = Grid.centered_square(0.5, n)
        mf = umbilic_seed(K, grid)
        r = gauss_residual(mf, QDiff.zero(), grid)
        residuals.append(np.max(np.abs(r)))
    assert residuals[0] / residuals[1] == pytest.approx(4.0, rel=0.3)


def test_solve_recovers_seed_with_exact_trace():
    grid = Grid.centered_square(0.5, 33)
    seed = umbilic_seed(K, grid)
    mf = solve_gauss(QDiff.zero(), K, grid, bc=seed.u)
    assert np.max(np.abs(mf.u - seed.u)) <= 5e-4


def test_solve_discrete_residual_at_tolerance():
    grid = Grid.centered_square(0.5, 33)
    q = QDiff((0j, 0.1 + 0j))
    mf = solve_gauss(q, K, grid)
    r = gauss_residual(mf, q, grid)
    assert np.max(np.abs(r)) <= 1e-10


def test_positive_curvature_branch_solves():
    grid = Grid.centered_square(0.2, 17)
    mf = solve_gauss(QDiff((0j, 0.1 + 0j)), 3.0, grid)
    assert np.all(np.isfinite(mf.u))


def test_immersion_violation_detected():
    # boundary data far below log|Q| forces e^{2u} <= |Q|^2 somewhere
    grid = Grid.centered_square(0.2, 9, )
    q = QDiff.constant(50.0, PLANE)
    bc = np.full((9, 9), -3.0)
    with pytest.raises(ImmersionViolated):
        solve_gauss(q, K, grid, bc=bc)


def test_sinh_normal_form_matches_general_residual():
    grid = Grid.centered_square(0.3, 17)
    mf = MetricField(u=0.1 * grid.zmesh.real, K=K)
    r1 = gauss_residual(mf, QDiff.constant(1.0, PLANE), grid)
    r2 = sinh_normal_residual(mf, grid)
    assert np.max(np.abs(r1 - r2)) <= 1e-13


def test_default_boundary_umbilic_limit():
    grid = Grid.centered_square(0.25, 9)
    b = default_boundary(QDiff.zero(), K, grid)
    seed = umbilic_seed(K, grid)
    assert np.allclose(b, seed.u, atol=1e-12)


def test_ode_oracle_frozen_profile():
    sol = ode_oracle(1.0, K, (-0.16, 0.16), (0.5, 0.5))
    assert float(sol.sol(0.0)[0]) == pytest.approx(0.4806848016867676, abs=1e-9)
    assert float(sol.sol(0.08)[0]) == pytest.approx(0.4854877299330067, abs=1e-9)


def test_metric_field_csv_header_and_rows():
    grid = Grid.centered_square(0.25, 9)
    mf = umbilic_seed(K, grid)
    text = metric_field_csv(mf, grid)
    lines = text.splitlines()
    assert lines[0] == "i,j,x,y,u"
    assert len(lines) == 1 + 81
