"""Planar five-link biped: continuous dynamics, stance-constrained dynamics
and the inelastic impact map.

Generalized coordinates q = [base_x, base_z, torso_pitch, left_hip,
left_knee, right_hip, right_knee] with n_q = n_v = 7. Angles are
CCW-positive in the x-z plane; hips measure from the torso axis, knees from
the thigh, and q = 0 is the upright pose with both legs hanging straight
down. Four actuators drive the hip and knee joints; the floating base and,
in stance, one remaining DoF are unactuated.
"""

from dataclasses import dataclass, field, replace

import numpy as np
from numpy.linalg import LinAlgError

from romopt import kernels

NQ = 7
NV = 7
NU = 4
LEFT = "left"
RIGHT = "right"


class SingularityError(RuntimeError):
    """Contact Jacobian lost rank (leg at full extension)."""


@dataclass(frozen=True)
class FullOrderModel:
    torso_length: float = 0.63
    thigh_length: float = 0.5
    shank_length: float = 0.5
    torso_com: float = 0.315
    thigh_com: float = 0.25
    shank_com: float = 0.25
    torso_mass: float = 16.0
    thigh_mass: float = 5.0
    shank_mass: float = 3.0
    torso_inertia: float = 0.529
    thigh_inertia: float = 0.104
    shank_inertia: float = 0.0625
    gravity: float = 9.81
    hip_damping: float = 0.1
    knee_damping: float = 0.1
    foot_offset: float = 0.5
    friction: float = 0.8
    n_q: int = field(default=NQ, init=False)
    n_v: int = field(default=NV, init=False)
    n_u: int = field(default=NU, init=False)

    def __post_init__(self):
        for name in ("torso_mass", "thigh_mass", "shank_mass",
                     "torso_inertia", "thigh_inertia", "shank_inertia"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if self.friction <= 0.0:
            raise ValueError("friction must be strictly positive")
        params = np.array([getattr(self, name) for name in kernels.PARAM_ORDER])
        object.__setattr__(self, "_params", params)

    @property
    def params(self):
        return self._params

    @property
    def total_mass(self):
        return self.torso_mass + 2 * (self.thigh_mass + self.shank_mass)

    @property
    def actuation_matrix(self):
        B = np.zeros((NV, NU))
        B[3:, :] = np.eye(NU)
        return B

    def with_params(self, **kwargs):
        return replace(self, **kwargs)


@dataclass
class FullState:
    q: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        self.q = np.asarray(self.q, dtype=float)
        self.v = np.asarray(self.v, dtype=float)
        if self.q.shape != (NQ,) or self.v.shape != (NV,):
            raise ValueError("state dimensions must be (7,), (7,)")

    def as_vector(self):
        return np.concatenate([self.q, self.v])

    @staticmethod
    def from_vector(x):
        x = np.asarray(x, dtype=float)
        return FullState(x[:NQ], x[NQ:])

    def copy(self):
        return FullState(self.q.copy(), self.v.copy())


@dataclass
class ImpactResult:
    v_plus: np.ndarray
    impulse: np.ndarray


@dataclass
class FootKinematics:
    pos: np.ndarray
    jac: np.ndarray
    jacdot_v: np.ndarray


def _check_q(q):
    q = np.asarray(q, dtype=float)
    if q.shape != (NQ,):
        raise ValueError(f"q must have shape ({NQ},), got {q.shape}")
    return q


def _check_v(v):
    v = np.asarray(v, dtype=float)
    if v.shape != (NV,):
        raise ValueError(f"v must have shape ({NV},), got {v.shape}")
    return v


def mass_matrix(model, q):
    """Joint-space mass matrix M(q), symmetric positive definite."""
    return kernels.mass_matrix(model.params, _check_q(q))


def bias_terms(model, q, v):
    """Coriolis/centrifugal, gravity and joint-damping generalized forces.

    Returns the right-hand side f(q, v) of M(q) v̇ = f + B u + Jᵀ λ.
    """
    return kernels.bias(model.params, _check_q(q), _check_v(v))


def gravity_force(model, q):
    return kernels.gravity_force(model.params, _check_q(q))


def potential_energy(model, q):
    return kernels.potential_energy(model.params, _check_q(q))


def total_energy(model, x):
    M = mass_matrix(model, x.q)
    return 0.5 * x.v @ M @ x.v + potential_energy(model, x.q)


def com_position(model, q):
    return kernels.com_pos(model.params, _check_q(q))


def com_velocity(model, q, v):
    return kernels.com_jac(model.params, _check_q(q)) @ _check_v(v)


def foot_position(model, q, side):
    fn = kernels.foot_pos_l if side == LEFT else kernels.foot_pos_r
    return fn(model.params, _check_q(q))


def foot_jacobian(model, q, side):
    fn = kernels.foot_jac_l if side == LEFT else kernels.foot_jac_r
    return fn(model.params, _check_q(q))


def foot_jacobian_dot(model, q, v, side):
    fn = kernels.foot_jacdot_l if side == LEFT else kernels.foot_jacdot_r
    return fn(model.params, _check_q(q), _check_v(v))


def contact_kinematics(model, q, v=None):
    """Forward kinematics of both point feet: positions, Jacobians, J̇v."""
    q = _check_q(q)
    v = np.zeros(NV) if v is None else _check_v(v)
    out = {}
    for side in (LEFT, RIGHT):
        J = foot_jacobian(model, q, side)
        Jd = foot_jacobian_dot(model, q, v, side)
        out[side] = FootKinematics(foot_position(model, q, side), J, Jd @ v)
    return out


def free_dynamics(model, x, u):
    """Accelerations of the unconstrained (flight) model."""
    u = np.asarray(u, dtype=float)
    M = mass_matrix(model, x.q)
    rhs = bias_terms(model, x.q, x.v) + model.actuation_matrix @ u
    return np.linalg.solve(M, rhs)


def stance_dynamics(model, x, u, stance=LEFT):
    """Accelerations and contact force with one foot pinned.

    Solves M v̇ = f + B u + Jᵀ λ together with J v̇ + J̇ v = 0 by a Schur
    complement on the contact block. Raises SingularityError when the
    contact Jacobian loses rank (straight leg).
    """
    u = np.asarray(u, dtype=float)
    M = mass_matrix(model, x.q)
    F = bias_terms(model, x.q, x.v) + model.actuation_matrix @ u
    J = foot_jacobian(model, x.q, stance)
    jdv = foot_jacobian_dot(model, x.q, x.v, stance) @ x.v
    try:
        Minv_F = np.linalg.solve(M, F)
        Minv_JT = np.linalg.solve(M, J.T)
    except LinAlgError as exc:  # pragma: no cover - M is SPD by construction
        raise SingularityError(str(exc)) from exc
    S = J @ Minv_JT
    if abs(np.linalg.det(S)) < 1e-10:
        raise SingularityError("contact Jacobian rank loss (leg extended)")
    lam = np.linalg.solve(S, -(jdv + J @ Minv_F))
    vdot = Minv_F + Minv_JT @ lam
    return vdot, lam


def impact_map(model, x_minus, new_stance):
    """Perfectly inelastic impact transferring stance to `new_stance`.

    Positions are unchanged; the returned velocity satisfies
    M (v⁺ − v⁻) = Jᵀ Λ and J v⁺ = 0 for the new stance foot. Leg
    relabeling, when wanted, is applied by the caller.
    """
    M = mass_matrix(model, x_minus.q)
    J = foot_jacobian(model, x_minus.q, new_stance)
    Minv_JT = np.linalg.solve(M, J.T)
    S = J @ Minv_JT
    if abs(np.linalg.det(S)) < 1e-10:
        raise SingularityError("impact Jacobian rank loss")
    impulse = np.linalg.solve(S, -(J @ x_minus.v))
    v_plus = x_minus.v + Minv_JT @ impulse
    return ImpactResult(v_plus, impulse)
