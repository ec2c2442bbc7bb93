import math

import numpy as np
import pytest

try:
    import genfam as gf
except ImportError:
    import _genfam as gf


def test_metric_signature():
    s = gf.MinkowskiSpace(4)
    assert s.quadratic_form(np.array([1.0, 0, 0, 0])) == 1.0
    assert s.quadratic_form(np.array([0.0, 1, 0, 0])) == -1.0
    assert s.v_norm(np.array([2.0, 0, 0, 0])) == 2.0
    with pytest.raises(Exception):
        s.v_norm(np.array([0.0, 1, 0, 0]))


def test_pairing_and_kappa():
    assert gf.pair(np.array([1.0, 2, 3, 4]), np.array([4.0, 3, 2, 1])) == 20.0
    q, v, qd, vd = (np.array([1.0, 0, 0, 0]), np.array([0.0, 1, 0, 0]),
                    np.array([0.0, 0, 1, 0]), np.array([0.0, 0, 0, 1]))
    q2, v2, qd2, vd2 = gf.kappa_q(q, v, qd, vd)
    assert np.allclose(v2, qd) and np.allclose(qd2, v)
    assert np.allclose(q2, q) and np.allclose(vd2, vd)


def test_hat_kappa_scales_fibers():
    rng = np.random.default_rng(0)
    q, p, qd, pd = (rng.normal(size=4) for _ in range(4))
    q2, p2, qd2, pd2 = gf.hat_kappa(3.0, q, p, qd, pd)
    assert np.allclose(q2, q) and np.allclose(p2, p)
    assert np.allclose(qd2, 3.0 * qd) and np.allclose(pd2, 3.0 * pd)


def test_particle_values_and_membership():
    q = np.zeros(4)
    v = np.array([2.0, 0, 0, 0])
    assert math.isclose(gf.particle_lagrangian(4, 1.0, q, v), 2.0)
    p = np.array([2.0, 0, 0, 0])
    assert math.isclose(gf.particle_hamiltonian(4, 1.0, q, p, 3.0), 3.0)
    # member of the dynamics: p = m g(qdot)/|qdot|, pdot = 0
    assert gf.particle_membership(4, 1.0, q, np.array([1.0, 0, 0, 0]), v, np.zeros(4))
    assert not gf.particle_membership(4, 1.0, q, p, v, np.zeros(4))


def test_optics_trajectory_members():
    q0 = np.zeros(4)
    p0 = np.array([1.0, -1.0, 0, 0])
    traj = gf.optics_trajectory(4, q0, p0, 10, 0.1)
    assert len(traj) == 10
    for q, p, qd, pd in traj:
        assert gf.optics_membership(4, q, p, qd, pd)


def test_run_verify_bundles():
    rep = gf.run_verify(suite="bundles", seed=7)
    assert rep["failed"] == 0
    assert rep["passed"] >= 5
