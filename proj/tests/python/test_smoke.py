import math

import numpy as np
import pytest

import symtop


def test_hat_vee_roundtrip():
    v = np.array([0.3, -1.2, 2.0])
    m = symtop.hat(v)
    assert np.allclose(m, -m.T)
    assert np.allclose(m @ np.array([1.0, 2.0, 3.0]), np.cross(v, [1.0, 2.0, 3.0]))
    assert np.allclose(symtop.vee(m), v)


def test_vee_rejects_symmetric():
    with pytest.raises(symtop.SymtopError):
        symtop.vee(np.eye(3))


def test_exp_so3_quarter_turn():
    r = symtop.exp_so3([0.0, 0.0, math.pi / 2])
    assert np.allclose(r @ [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], atol=1e-15)
    assert symtop.orthogonality_defect(r) < 1e-15


def test_dimensions():
    dims = {s: symtop.dimension(s) for s in
            (symtop.SpaceId.CotSO3, symtop.SpaceId.Se3Dual, symtop.SpaceId.CotSE3, symtop.SpaceId.Reduced)}
    assert list(dims.values()) == [12, 6, 18, 12]


def test_structure_matrix_antisymmetric_and_jacobi():
    for space in (symtop.SpaceId.CotSE3, symtop.SpaceId.Reduced):
        z = symtop.random_chart_state(space, 7)
        lam = symtop.structure_matrix(space, z)
        assert np.array_equal(lam, -lam.T)
        assert symtop.max_jacobi_residual(space, z) <= 1e-10


def test_orbit_witness():
    nu1, pi1 = np.array([0.0, 0.0, 1.0]), np.array([0.3, 0.1, 2.0])
    nu2, pi2 = np.array([0.0, 0.0, -1.0]), np.array([1.0, -0.5, -2.0])
    a, A = symtop.same_orbit_witness(nu1, pi1, nu2, pi2)
    nu, pi = symtop.coadjoint(a, A, nu1, pi1)
    assert np.allclose(nu, nu2, atol=1e-12)
    assert np.allclose(pi, pi2, atol=1e-12)
    with pytest.raises(symtop.SymtopError):
        symtop.same_orbit_witness(nu1, pi1, nu2, [0.0, 0.0, 5.0])


def test_free_top_simulation_matches_closed_form():
    body = symtop.BodyParams(1.0, 0.8, 1.3)
    z0 = np.zeros(12)
    z0[6:9] = np.array([1.0, 1.0, 0.0]) / math.sqrt(2.0)
    z0[9:12] = [0.2, -0.4, 0.9]
    traj = symtop.simulate_reduced(z0, body, symtop.Potential.zero(), 1e-3, 1.0)
    assert traj["z"].shape[1] == 12
    exact = symtop.free_top_analytic(z0, traj["t"][-1], body)
    assert np.max(np.abs(traj["z"][-1] - exact)) < 1e-10
    assert np.max(np.abs(traj["c1"] - 1.0)) < 1e-12


def test_commutation_gravity():
    body = symtop.BodyParams(1.0, 0.8, 1.6)
    z0 = symtop.random_chart_state(symtop.SpaceId.CotSE3, 3)
    v = symtop.potential_presets()["gravity"]
    assert symtop.commutation_residual(z0, body, v, 1e-3, 1.0) < 1e-7


def test_check_suite_passes():
    results = symtop.run_check_suite("casimirs", 0)
    assert results and all(r["passed"] for r in results)


def test_invalid_body():
    with pytest.raises(symtop.SymtopError):
        symtop.BodyParams(-1.0, 1.0, 1.0)
