"""Independent numerical oracles used by the test suite.

Everything here is derived from first principles with its own kinematics so
it shares no code path with the package: a Newton-Euler style inverse
dynamics recursion over a generic planar link tree, energy and angular
momentum audits, and finite-difference helpers.
"""

from dataclasses import dataclass

import numpy as np


def cross2(r, f):
    """Planar moment of force f applied at offset r (CCW positive)."""
    return r[0] * f[1] - r[1] * f[0]


def dvec(angle):
    """Unit vector of a link hanging at CCW angle `angle` from straight down."""
    return np.array([np.sin(angle), -np.cos(angle)])


def dvec_prime(angle):
    return np.array([np.cos(angle), np.sin(angle)])


@dataclass
class OracleLink:
    parent: int          # -1 = attaches at the floating base point
    length: float        # attach point of children, along the link
    com: float           # CoM offset along the link
    mass: float
    inertia: float
    angle_dofs: tuple    # q indices summed into the absolute link angle
    pivot_dof: int       # dof introduced by this link's own joint


@dataclass
class LinkKin:
    angle: float
    omega: float
    omega_dot: float
    attach: np.ndarray   # joint point position / velocity / acceleration
    attach_v: np.ndarray
    attach_a: np.ndarray
    com: np.ndarray
    com_v: np.ndarray
    com_a: np.ndarray


class PlanarTreeOracle:
    """Inverse dynamics for a planar tree of rigid links.

    With a floating base, q = [base_x, base_z, angles...]; otherwise q holds
    the joint angles only and the base point is fixed at the origin.
    """

    def __init__(self, links, gravity, floating_base=True):
        self.links = links
        self.gravity = gravity
        self.floating_base = floating_base

    def _kinematics(self, q, v, a):
        off = 2 if self.floating_base else 0
        if self.floating_base:
            base = (q[:2], v[:2], a[:2])
        else:
            base = (np.zeros(2), np.zeros(2), np.zeros(2))
        kin = []
        for link in self.links:
            ang = sum(q[off + i] for i in link.angle_dofs)
            om = sum(v[off + i] for i in link.angle_dofs)
            omd = sum(a[off + i] for i in link.angle_dofs)
            if link.parent < 0:
                p, pv, pa = base
            else:
                par = self.links[link.parent]
                pk = kin[link.parent]
                d, dp = dvec(pk.angle), dvec_prime(pk.angle)
                p = pk.attach + par.length * d
                pv = pk.attach_v + par.length * pk.omega * dp
                pa = (pk.attach_a + par.length *
                      (pk.omega_dot * dp - pk.omega**2 * d))
            d, dp = dvec(ang), dvec_prime(ang)
            c = p + link.com * d
            cv = pv + link.com * om * dp
            ca = pa + link.com * (omd * dp - om**2 * d)
            kin.append(LinkKin(ang, om, omd, p, pv, pa, c, cv, ca))
        return kin

    def inverse_dynamics(self, q, v, a, with_gravity=True):
        """Generalized force required to realize acceleration a at (q, v)."""
        q, v, a = map(np.asarray, (q, v, a))
        kin = self._kinematics(q, v, a)
        g = np.array([0.0, -self.gravity]) if with_gravity else np.zeros(2)
        off = 2 if self.floating_base else 0
        n = off + max(max(l.angle_dofs) for l in self.links) + 1
        tau = np.zeros(n)
        forces = [l.mass * (k.com_a - g) for l, k in zip(self.links, kin)]
        moments = [l.inertia * k.omega_dot for l, k in zip(self.links, kin)]
        pivots = {}
        for link, k in zip(self.links, kin):
            pivots[link.pivot_dof] = k.attach
        for link, k, F, N in zip(self.links, kin, forces, moments):
            if self.floating_base:
                tau[:2] += F
            for dof in link.angle_dofs:
                tau[off + dof] += N + cross2(k.com - pivots[dof], F)
        return tau

    def energy(self, q, v):
        kin = self._kinematics(q, v, np.zeros_like(q))
        e = 0.0
        for link, k in zip(self.links, kin):
            e += 0.5 * link.mass * k.com_v @ k.com_v
            e += 0.5 * link.inertia * k.omega**2
            e += link.mass * self.gravity * k.com[1]
        return e

    def angular_momentum(self, q, v, point):
        """Total angular momentum about a fixed point (CCW positive)."""
        kin = self._kinematics(q, v, np.zeros_like(q))
        L = 0.0
        for link, k in zip(self.links, kin):
            L += link.inertia * k.omega
            L += link.mass * cross2(k.com - point, k.com_v)
        return L


def five_link_oracle(model):
    """Instantiate the oracle tree matching FullOrderModel's topology.

    Angle dofs (after the 2 base dofs): 0 pitch, 1 left hip, 2 left knee,
    3 right hip, 4 right knee. The torso link points up, which the tree
    handles by an angle offset of pi folded into a negative CoM offset.
    """
    links = [
        # torso: up(angle) == -com * dvec(angle)
        OracleLink(-1, 0.0, -model.torso_com, model.torso_mass,
                   model.torso_inertia, (0,), 0),
        OracleLink(-1, model.thigh_length, model.thigh_com, model.thigh_mass,
                   model.thigh_inertia, (0, 1), 1),
        OracleLink(1, 0.0, model.shank_com, model.shank_mass,
                   model.shank_inertia, (0, 1, 2), 2),
        OracleLink(-1, model.thigh_length, model.thigh_com, model.thigh_mass,
                   model.thigh_inertia, (0, 3), 3),
        OracleLink(3, 0.0, model.shank_com, model.shank_mass,
                   model.shank_inertia, (0, 3, 4), 4),
    ]
    return PlanarTreeOracle(links, model.gravity, floating_base=True)


def single_pendulum_oracle(mass=2.0, length=1.0, com=0.5, inertia=0.3,
                           gravity=9.81):
    link = OracleLink(-1, length, com, mass, inertia, (0,), 0)
    return PlanarTreeOracle([link], gravity, floating_base=False)


def pendulum_closed_form(mass, com, inertia, gravity, q, v, a):
    """Required torque for the hanging rod pendulum, from the textbook."""
    return (inertia + mass * com**2) * a + mass * gravity * com * np.sin(q)


def fd_jacobian(f, x, h=1e-7):
    """Central finite differences of vector- or scalar-valued f."""
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(x.size):
        xp, xm = x.copy(), x.copy()
        xp[i] += h
        xm[i] -= h
        cols.append((np.asarray(f(xp)) - np.asarray(f(xm))) / (2 * h))
    return np.stack(cols, axis=-1)


def rk4_rollout(deriv, x0, dt, steps):
    x = np.asarray(x0, dtype=float)
    traj = [x]
    for _ in range(steps):
        k1 = deriv(x)
        k2 = deriv(x + 0.5 * dt * k1)
        k3 = deriv(x + 0.5 * dt * k2)
        k4 = deriv(x + dt * k3)
        x = x + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        traj.append(x)
    return np.array(traj)


def dense_active_set_qp(H, g, A_eq=None, b_eq=None, A_in=None, b_in=None,
                        x0=None, max_iter=200):
    """Textbook primal active-set solver for strictly convex QPs.

    minimize 0.5 xᵀHx + gᵀx  s.t.  A_eq x = b_eq,  A_in x <= b_in.
    Requires a feasible x0 when inequalities are present. Returns
    (x, lam_eq, mu_in) with mu_in >= 0 on active rows, 0 elsewhere.
    """
    n = len(g)
    A_eq = np.zeros((0, n)) if A_eq is None else np.atleast_2d(A_eq)
    b_eq = np.zeros(0) if b_eq is None else np.atleast_1d(b_eq)
    A_in = np.zeros((0, n)) if A_in is None else np.atleast_2d(A_in)
    b_in = np.zeros(0) if b_in is None else np.atleast_1d(b_in)
    m_in = A_in.shape[0]
    if x0 is None:
        if m_in:
            raise ValueError("feasible x0 required with inequalities")
        x = np.zeros(n)
    else:
        x = np.asarray(x0, dtype=float).copy()
    active = [i for i in range(m_in) if A_in[i] @ x >= b_in[i] - 1e-10]

    def kkt_solve(xcur, act):
        Aw = np.vstack([A_eq, A_in[act]]) if (len(act) or A_eq.size) else \
            np.zeros((0, n))
        m = Aw.shape[0]
        K = np.zeros((n + m, n + m))
        K[:n, :n] = H
        K[:n, n:] = Aw.T
        K[n:, :n] = Aw
        rhs = np.concatenate([-(H @ xcur + g), np.zeros(m)])
        sol = np.linalg.solve(K, rhs)
        return sol[:n], sol[n:]

    for _ in range(max_iter):
        p, lam = kkt_solve(x, active)
        if np.linalg.norm(p, np.inf) < 1e-12:
            mu = lam[A_eq.shape[0]:]
            if len(mu) == 0 or mu.min() >= -1e-10:
                lam_eq = lam[:A_eq.shape[0]]
                mu_full = np.zeros(m_in)
                for k, idx in enumerate(active):
                    mu_full[idx] = mu[k]
                return x, lam_eq, mu_full
            active.pop(int(np.argmin(mu)))
            continue
        alpha, blocking = 1.0, None
        for i in range(m_in):
            if i in active:
                continue
            Ap = A_in[i] @ p
            if Ap > 1e-14:
                a = (b_in[i] - A_in[i] @ x) / Ap
                if a < alpha:
                    alpha, blocking = a, i
        x = x + alpha * p
        if blocking is not None:
            active.append(blocking)
    raise RuntimeError("active-set oracle did not converge")
