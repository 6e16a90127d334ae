import numpy as np
import pytest

from conftest import random_pose
from oracles import fd_jacobian
from romopt import model as rbd
from romopt import rom as R


def randomized_rom(model, rng, n_phi=2, scale=0.3):
    spec = R.init_lip(model, 2, n_phi)
    spec.theta_e = spec.theta_e + rng.normal(size=spec.theta_e.shape) * scale
    spec.theta_d = spec.theta_d + rng.normal(size=spec.theta_d.shape) * scale
    return spec


def test_monomial_counts():
    assert R.monomial_exponents(2, 2).shape[0] == 6
    assert R.monomial_exponents(6, 2).shape[0] == 28
    assert R.monomial_exponents(5, 2).shape[0] == 21
    assert R.monomial_exponents(4, 2).shape[0] == 15


def test_monomial_ordering_graded_lex_and_unique():
    E = R.monomial_exponents(3, 3)
    rows = [tuple(r) for r in E]
    assert len(set(rows)) == len(rows)
    keys = [(sum(r), r) for r in rows]
    assert keys == sorted(keys)
    assert rows[0] == (0, 0, 0)


def test_lip_feature_counts(model):
    lip = R.init_lip(model, 2, 2)
    assert lip.n_e == 2 + 21
    assert lip.n_d == 1 + 15
    lip3 = R.init_lip(model, 3, 2)
    assert lip3.n_e == 3 + 21
    assert lip3.n_d == 2 + 28


def test_lip_dynamics_paper_values(model):
    lip3 = R.init_lip(model, 3, 2)
    acc = R.eval_dynamics(lip3, [0.1, 0.0, 0.9], np.zeros(3))
    assert acc == pytest.approx([1.09, 0.0, 0.0], abs=1e-12)
    acc = R.eval_dynamics(lip3, [0.0, 0.0, 1.0], np.zeros(3))
    assert acc == pytest.approx([0.0, 0.0, 0.0], abs=1e-15)
    acc = R.eval_dynamics(lip3, [0.2, -0.1, 1.0], np.zeros(3))
    assert acc == pytest.approx([1.962, -0.981, 0.0], abs=1e-12)


def test_lip_planar_restriction(model):
    lip = R.init_lip(model, 2, 2)
    acc = R.eval_dynamics(lip, [0.15, 0.85], [0.3, -0.2])
    assert acc == pytest.approx([9.81 * 0.15 / 0.85, 0.0], abs=1e-12)
    with pytest.raises(ValueError):
        R.init_lip(model, 4)


def test_dynamics_height_guard(model):
    lip = R.init_lip(model, 2, 2)
    with pytest.raises(R.SingularFeatureError):
        R.eval_dynamics(lip, [0.1, 5e-4], [0.0, 0.0])


def test_dynamics_affine_in_tau(model, rng):
    spec = R.init_lip(model, 2, 2, n_tau=2)
    spec.B_y = rng.normal(size=(2, 2))
    y, yd = np.array([0.1, 0.9]), np.array([0.4, -0.1])
    t1, t2 = rng.normal(size=2), rng.normal(size=2)
    lhs = R.eval_dynamics(spec, y, yd, t1 + t2) - R.eval_dynamics(spec, y, yd, t1)
    assert np.array_equal(lhs, spec.B_y @ t2)


def test_embedding_fixed_com_matches_kinematics(model, rng):
    lip = R.init_lip(model, 2, 2, embed_mode=R.FIXED_COM)
    for _ in range(5):
        q = random_pose(rng)
        out = R.eval_embedding(lip, model, q)
        want = rbd.com_position(model, q) - rbd.foot_position(model, q, rbd.LEFT)
        assert np.allclose(out.y, want, atol=1e-14)


def test_embedding_jacobian_matches_fd(model, rng):
    spec = randomized_rom(model, rng)
    for _ in range(5):
        q = random_pose(rng)
        J = R.eval_embedding(spec, model, q).J
        J_fd = fd_jacobian(lambda qq: R.eval_embedding(spec, model, qq).y, q)
        assert np.abs(J - J_fd).max() <= 1e-6


def test_embedding_acc_derivatives_match_fd(model, rng):
    spec = randomized_rom(model, rng)
    q = random_pose(rng)
    v, a = rng.normal(size=7), rng.normal(size=7)
    out = R.eval_embedding(spec, model, q, v, a, derivs=True)

    def yddot_of(qq, vv):
        return R.eval_embedding(spec, model, qq, vv, a).yddot

    dq_fd = fd_jacobian(lambda qq: yddot_of(qq, v), q)
    dv_fd = fd_jacobian(lambda vv: yddot_of(q, vv), v)
    assert np.abs(out.dyddot_dq - dq_fd).max() <= 1e-5
    assert np.abs(out.dyddot_dv - dv_fd).max() <= 1e-6


def test_mirror_map_involution_and_swap(model, rng):
    mm = R.planar_mirror_map()
    q = random_pose(rng)
    qm = R.mirror_configuration(mm, q)
    assert np.array_equal(R.mirror_configuration(mm, qm), q)
    assert np.array_equal(qm[:3], q[:3])
    assert np.array_equal(qm[3:5], q[5:7])
    assert np.array_equal(qm[5:7], q[3:5])
    sym = q.copy()
    sym[5:7] = sym[3:5]
    assert np.array_equal(R.mirror_configuration(mm, sym), sym)


def test_mirror_map_validation():
    bad = np.eye(7)
    bad[0, 0] = 2.0
    with pytest.raises(ValueError):
        R.MirrorMap(bad)


def test_mirrored_embedding_jacobian_fd(model, rng):
    mm = R.planar_mirror_map()
    spec = randomized_rom(model, rng)
    q = random_pose(rng)
    out = R.mirrored_embedding(spec, mm, model, q)
    J_fd = fd_jacobian(
        lambda qq: R.mirrored_embedding(spec, mm, model, qq).y, q)
    assert np.abs(out.J - J_fd).max() <= 1e-6


def test_mirrored_embedding_symmetric_pose(model, rng):
    mm = R.planar_mirror_map()
    spec = R.init_lip(model, 2, 2)
    # symmetric weights: equal load on left/right joint monomials is implied
    # by LIP init (all monomial weights zero)
    q = random_pose(rng)
    q[5:7] = q[3:5]
    ym = R.mirrored_embedding(spec, mm, model, q).y
    y = R.eval_embedding(spec, model, q).y
    assert np.allclose(ym, y, atol=1e-12)


def test_mirrored_embedding_acc_matches_flow_fd(model, rng):
    mm = R.planar_mirror_map()
    spec = randomized_rom(model, rng)
    q = random_pose(rng)
    v, a = rng.normal(size=7) * 0.5, rng.normal(size=7) * 0.5
    out = R.mirrored_embedding(spec, mm, model, q, v, a)

    def ym(t):
        return R.mirrored_embedding(spec, mm, model,
                                    q + v * t + 0.5 * a * t * t).y

    h = 1e-4
    fd = (ym(h) - 2 * ym(0.0) + ym(-h)) / h**2
    assert np.abs(out.yddot - fd).max() <= 1e-4 * max(1.0, np.abs(fd).max())


def test_checkpoint_roundtrip_bit_exact(model, rng, tmp_path):
    spec = R.init_lip(model, 2, 2, n_tau=1)
    spec.theta_e = rng.normal(size=spec.theta_e.shape)
    spec.theta_d = rng.normal(size=spec.theta_d.shape)
    spec.B_y = rng.normal(size=spec.B_y.shape)
    path = tmp_path / "theta.txt"
    R.save_checkpoint(spec, path)
    back = R.load_checkpoint(path, model)
    assert np.array_equal(back.theta_e, spec.theta_e)
    assert np.array_equal(back.theta_d, spec.theta_d)
    assert np.array_equal(back.B_y, spec.B_y)
    assert back.embed_mode == spec.embed_mode
    with pytest.raises(ValueError):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2\n")
        R.load_checkpoint(bad, model)


def test_free_theta_roundtrip(model, rng):
    spec = randomized_rom(model, rng)
    vec = spec.free_theta
    assert vec.shape == (spec.n_free,)
    clone = spec.with_free_theta(vec)
    assert np.array_equal(clone.theta_e, spec.theta_e)
    assert np.array_equal(clone.theta_d, spec.theta_d)
    fixed = R.init_lip(model, 2, 2, embed_mode=R.FIXED_COM)
    assert fixed.n_free == 2 * fixed.n_d
    moved = fixed.with_free_theta(np.arange(fixed.n_free, dtype=float))
    assert np.array_equal(moved.theta_e, fixed.theta_e)


def test_gc_theta_jacobian_matches_fd(model, rng):
    spec = randomized_rom(model, rng)
    q = random_pose(rng)
    v, a = rng.normal(size=7) * 0.5, rng.normal(size=7) * 0.5

    def gc_of(theta):
        s = spec.with_free_theta(theta)
        emb = R.eval_embedding(s, model, q, v, a)
        return emb.yddot - R.eval_dynamics(s, emb.y, emb.ydot)

    got = R.gc_theta_jacobian(spec, model, q, v, a)
    want = fd_jacobian(gc_of, spec.free_theta, h=1e-6)
    assert np.abs(got - want).max() <= 1e-6 * max(1.0, np.abs(want).max())


def test_gc_theta_jacobian_fixed_com(model, rng):
    spec = R.init_lip(model, 2, 2, embed_mode=R.FIXED_COM)
    spec.theta_d = spec.theta_d + rng.normal(size=spec.theta_d.shape) * 0.2
    q = random_pose(rng)
    v, a = rng.normal(size=7) * 0.5, rng.normal(size=7) * 0.5

    def gc_of(theta):
        s = spec.with_free_theta(theta)
        emb = R.eval_embedding(s, model, q, v, a)
        return emb.yddot - R.eval_dynamics(s, emb.y, emb.ydot)

    got = R.gc_theta_jacobian(spec, model, q, v, a)
    want = fd_jacobian(gc_of, spec.free_theta, h=1e-6)
    assert np.abs(got - want).max() <= 1e-6 * max(1.0, np.abs(want).max())
