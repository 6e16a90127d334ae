import numpy as np
import pytest

from conftest import random_pose
from oracles import (
    five_link_oracle,
    fd_jacobian,
    pendulum_closed_form,
    rk4_rollout,
    single_pendulum_oracle,
)
from romopt import model as rbd
from romopt.model import FullOrderModel, FullState


def test_oracle_matches_pendulum_closed_form():
    orc = single_pendulum_oracle(mass=2.0, length=1.0, com=0.4, inertia=0.3)
    rng = np.random.default_rng(0)
    for _ in range(10):
        q, v, a = rng.normal(size=3)
        got = orc.inverse_dynamics([q], [v], [a])[0]
        want = pendulum_closed_form(2.0, 0.4, 0.3, 9.81, q, v, a)
        assert got == pytest.approx(want, rel=1e-12)


def test_mass_matrix_symmetric_positive_definite(model, rng):
    for _ in range(20):
        q = random_pose(rng)
        M = rbd.mass_matrix(model, q)
        assert np.array_equal(M, M.T)
        assert np.linalg.eigvalsh(M).min() > 0


def test_mass_matrix_against_rnea_oracle(model, rng):
    orc = five_link_oracle(model)
    for _ in range(10):
        q = random_pose(rng)
        a = rng.normal(size=7)
        Ma = rbd.mass_matrix(model, q) @ a
        # zero gravity and velocity isolates the inertial term
        Ma_oracle = orc.inverse_dynamics(q, np.zeros(7), a, with_gravity=False)
        assert np.linalg.norm(Ma - Ma_oracle) <= 1e-10 * np.linalg.norm(Ma_oracle)


def test_bias_statics_is_gravity_force(model, rng):
    nodamp = model.with_params(hip_damping=0.0, knee_damping=0.0)
    for _ in range(5):
        q = random_pose(rng)
        got = rbd.bias_terms(nodamp, q, np.zeros(7))
        grad_V = fd_jacobian(lambda qq: rbd.potential_energy(nodamp, qq), q)
        assert np.allclose(got, -grad_V, atol=1e-6)
        orc = five_link_oracle(nodamp)
        assert np.allclose(got, -orc.inverse_dynamics(q, np.zeros(7), np.zeros(7)),
                           atol=1e-10)


def test_bias_against_oracle_with_velocity(model, rng):
    nodamp = model.with_params(hip_damping=0.0, knee_damping=0.0)
    orc = five_link_oracle(nodamp)
    for _ in range(10):
        q = random_pose(rng)
        v = rng.normal(size=7)
        got = rbd.bias_terms(nodamp, q, v)
        want = -orc.inverse_dynamics(q, v, np.zeros(7))
        assert np.allclose(got, want, atol=1e-9)


def test_damping_contribution(model):
    damped = model.with_params(hip_damping=0.7, knee_damping=0.3)
    nodamp = model.with_params(hip_damping=0.0, knee_damping=0.0)
    q = np.array([0.0, 0.9, 0.1, 0.2, 0.5, -0.3, 0.4])
    for joint, coeff in ((3, 0.7), (4, 0.3), (5, 0.7), (6, 0.3)):
        v = np.zeros(7)
        v[joint] = 1.3
        delta = rbd.bias_terms(damped, q, v) - rbd.bias_terms(nodamp, q, v)
        expected = np.zeros(7)
        expected[joint] = -coeff * 1.3
        assert np.allclose(delta, expected, atol=1e-12)


def test_flight_energy_conservation(model):
    nodamp = model.with_params(hip_damping=0.0, knee_damping=0.0)
    x0 = FullState(np.array([0.0, 1.0, 0.1, 0.3, 0.6, -0.2, 0.4]),
                   np.array([0.5, 1.0, 0.3, -0.4, 0.2, 0.5, -0.3]))

    def deriv(x):
        st = FullState.from_vector(x)
        return np.concatenate([st.v, rbd.free_dynamics(nodamp, st, np.zeros(4))])

    traj = rk4_rollout(deriv, x0.as_vector(), 1e-4, 10000)
    e0 = rbd.total_energy(nodamp, x0)
    e1 = rbd.total_energy(nodamp, FullState.from_vector(traj[-1]))
    assert abs(e1 - e0) <= 1e-8


def test_stance_static_equilibrium(model):
    # straight symmetric pose: CoM above the stance foot, u = 0 holds it
    q = np.zeros(7)
    q[1] = model.thigh_length + model.foot_offset
    x = FullState(q, np.zeros(7))
    vdot, lam = rbd.stance_dynamics(model, x, np.zeros(4), stance=rbd.LEFT)
    assert np.linalg.norm(vdot, np.inf) < 1e-9
    assert lam[0] == pytest.approx(0.0, abs=1e-9)
    assert lam[1] == pytest.approx(model.total_mass * model.gravity, rel=1e-10)


def test_stance_dynamics_kkt_residual(model, rng):
    for _ in range(10):
        q = random_pose(rng)
        v = rng.normal(size=7)
        u = rng.normal(size=4) * 20
        x = FullState(q, v)
        vdot, lam = rbd.stance_dynamics(model, x, u, stance=rbd.LEFT)
        M = rbd.mass_matrix(model, q)
        F = rbd.bias_terms(model, q, v) + model.actuation_matrix @ u
        J = rbd.foot_jacobian(model, q, rbd.LEFT)
        jdv = rbd.foot_jacobian_dot(model, q, v, rbd.LEFT) @ v
        r1 = M @ vdot - F - J.T @ lam
        r2 = J @ vdot + jdv
        scale = max(1.0, np.linalg.norm(F))
        assert np.linalg.norm(np.concatenate([r1, r2]), np.inf) <= 1e-10 * scale


def test_stance_dynamics_matches_dense_kkt_oracle(model, rng):
    for _ in range(10):
        q = random_pose(rng)
        v = rng.normal(size=7)
        u = rng.normal(size=4) * 20
        x = FullState(q, v)
        vdot, lam = rbd.stance_dynamics(model, x, u, stance=rbd.RIGHT)
        M = rbd.mass_matrix(model, q)
        F = rbd.bias_terms(model, q, v) + model.actuation_matrix @ u
        J = rbd.foot_jacobian(model, q, rbd.RIGHT)
        jdv = rbd.foot_jacobian_dot(model, q, v, rbd.RIGHT) @ v
        K = np.zeros((9, 9))
        K[:7, :7] = M
        K[:7, 7:] = -J.T
        K[7:, :7] = J
        sol = np.linalg.solve(K, np.concatenate([F, -jdv]))
        assert np.allclose(vdot, sol[:7], atol=1e-9)
        assert np.allclose(lam, sol[7:], atol=1e-9)


def test_impact_no_violation_no_impulse(model, rng):
    for _ in range(5):
        q = random_pose(rng)
        v_any = rng.normal(size=7)
        first = rbd.impact_map(model, FullState(q, v_any), rbd.RIGHT)
        again = rbd.impact_map(model, FullState(q, first.v_plus), rbd.RIGHT)
        assert np.allclose(again.v_plus, first.v_plus, atol=1e-10)
        assert np.allclose(again.impulse, np.zeros(2), atol=1e-9)


def test_impact_conserves_angular_momentum_about_contact(model, rng):
    orc = five_link_oracle(model)
    for _ in range(10):
        q = random_pose(rng)
        v = rng.normal(size=7)
        res = rbd.impact_map(model, FullState(q, v), rbd.RIGHT)
        point = rbd.foot_position(model, q, rbd.RIGHT)
        L_pre = orc.angular_momentum(q, v, point)
        L_post = orc.angular_momentum(q, res.v_plus, point)
        assert abs(L_post - L_pre) <= 1e-10 * max(1.0, abs(L_pre))


def test_impact_dissipates_kinetic_energy(model, rng):
    for _ in range(10):
        q = random_pose(rng)
        v = rng.normal(size=7)
        res = rbd.impact_map(model, FullState(q, v), rbd.LEFT)
        M = rbd.mass_matrix(model, q)
        ke_pre = 0.5 * v @ M @ v
        ke_post = 0.5 * res.v_plus @ M @ res.v_plus
        assert ke_post <= ke_pre + 1e-12


def test_impact_zeroes_contact_velocity(model, rng):
    q = random_pose(rng)
    v = rng.normal(size=7)
    res = rbd.impact_map(model, FullState(q, v), rbd.RIGHT)
    J = rbd.foot_jacobian(model, q, rbd.RIGHT)
    assert np.allclose(J @ res.v_plus, np.zeros(2), atol=1e-12)


def test_contact_kinematics_straight_pose_geometry(model):
    q = np.zeros(7)
    q[0], q[1] = 0.3, model.thigh_length + model.foot_offset
    kin = rbd.contact_kinematics(model, q)
    for side in (rbd.LEFT, rbd.RIGHT):
        assert np.allclose(kin[side].pos, [0.3, 0.0], atol=1e-14)


def test_foot_jacobian_matches_finite_differences(model, rng):
    for side in (rbd.LEFT, rbd.RIGHT):
        q = random_pose(rng)
        J_fd = fd_jacobian(lambda qq: rbd.foot_position(model, qq, side), q)
        assert np.abs(J_fd - rbd.foot_jacobian(model, q, side)).max() <= 1e-6


def test_jacobian_dot_matches_flow_finite_differences(model, rng):
    h = 1e-6
    for side in (rbd.LEFT, rbd.RIGHT):
        q = random_pose(rng)
        v = rng.normal(size=7)
        jdv = rbd.foot_jacobian_dot(model, q, v, side) @ v
        jv = lambda qq: rbd.foot_jacobian(model, qq, side) @ v
        jdv_fd = (jv(q + h * v) - jv(q - h * v)) / (2 * h)
        assert np.linalg.norm(jdv - jdv_fd) <= 1e-5 * max(1.0, np.linalg.norm(jdv))


def test_model_validation():
    with pytest.raises(ValueError):
        FullOrderModel(torso_mass=-1.0)
    with pytest.raises(ValueError):
        rbd.mass_matrix(FullOrderModel(), np.zeros(6))
    B = FullOrderModel().actuation_matrix
    assert np.linalg.matrix_rank(B) == 4
    assert set(np.unique(B)) == {0.0, 1.0}
