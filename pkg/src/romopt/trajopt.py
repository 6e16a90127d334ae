"""One-stride walking trajectory optimization with ROM embedding.

Trapezoidal direct collocation of the left-support stride: per knot the
decision variables are (q, v, v̇, u, λ [, τ]); accelerations are explicit
so dynamics rows stay free of mass-matrix inverses, and the stance force
is solved simultaneously with states and inputs. Half-gait periodicity
maps the final state through the swing-foot impact and the left-right
mirror back onto the first knot. The embedding constraint rows g_c tie
the full model to the ROM at every knot and are the only θ-dependent rows
in the problem, which is what the envelope gradient consumes.
"""

import hashlib
from dataclasses import dataclass, field, replace

import numpy as np
import scipy.sparse as sp

from romopt import kernels, nlp
from romopt import rom as romlib
from romopt.model import LEFT, RIGHT, FullState, NQ, NU

NX = 27  # q(7) v(7) vd(7) u(4) lam(2) per knot, before tau

OPTIMAL = nlp.OPTIMAL


@dataclass
class Task:
    stride_length: float = 0.0
    incline: float = 0.0
    duration: float = 0.35
    w_u: float = 1.0
    w_v: float = 0.1
    w_vdot: float = 2e-3
    w_cop: float = 1e-4      # CoP surrogate: tangential stance-force penalty
    w_tau: float = 1e-4

    def validate(self, model):
        if self.duration <= 0:
            raise ValueError("stride duration must be positive")
        weights = (self.w_u, self.w_v, self.w_vdot)
        if any(w < 0 for w in weights) or not any(w > 0 for w in weights):
            raise ValueError("cost weights must be >= 0 with at least one > 0")
        if abs(np.tan(self.incline)) >= model.friction:
            raise ValueError("incline outside the friction cone")


@dataclass
class TaskDistribution:
    stride_range: tuple = (-0.4, 0.4)
    incline_range: tuple = (0.0, 0.0)
    duration_range: tuple = (0.35, 0.35)
    base: Task = field(default_factory=Task)

    def sample(self, rng):
        def draw(lo_hi):
            lo, hi = lo_hi
            if lo == hi:
                return lo
            return rng.uniform(lo, hi)

        return replace(self.base,
                       stride_length=draw(self.stride_range),
                       incline=draw(self.incline_range),
                       duration=draw(self.duration_range))


@dataclass
class TrajOptSolution:
    w: np.ndarray
    duals: np.ndarray
    status: str
    cost: float
    residuals: dict
    report: nlp.KktReport


class Transcription:
    def __init__(self, model, rom, task, n=16, guess_jitter=0.0, seed=0):
        if n < 4:
            raise ValueError("need at least 4 knot points")
        task.validate(model)
        self.model = model
        self.rom = rom
        self.task = task
        self.n = n
        self.delta = task.duration / (n - 1)
        self.n_tau = 0 if rom is None else rom.n_tau
        self.n_y = 0 if rom is None else rom.n_y
        self.stride = NX + self.n_tau
        self.n_w = n * self.stride + 9  # + v_plus(7), impulse(2)
        self.guess_jitter = guess_jitter
        self.seed = seed
        phi = task.incline
        self.normal = np.array([-np.sin(phi), np.cos(phi)])
        self.tangent = np.array([np.cos(phi), np.sin(phi)])
        self.mirror = romlib.planar_mirror_map().matrix
        self._layout_rows()
        self._build_bounds_scales()
        self._build_cost()

    # ----- variable layout -----
    def q_idx(self, i):
        return slice(i * self.stride, i * self.stride + 7)

    def v_idx(self, i):
        return slice(i * self.stride + 7, i * self.stride + 14)

    def vd_idx(self, i):
        return slice(i * self.stride + 14, i * self.stride + 21)

    def u_idx(self, i):
        return slice(i * self.stride + 21, i * self.stride + 25)

    def lam_idx(self, i):
        return slice(i * self.stride + 25, i * self.stride + 27)

    def tau_idx(self, i):
        return slice(i * self.stride + 27, i * self.stride + 27 + self.n_tau)

    @property
    def vplus_idx(self):
        return slice(self.n * self.stride, self.n * self.stride + 7)

    @property
    def impulse_idx(self):
        return slice(self.n * self.stride + 7, self.n * self.stride + 9)

    def unpack(self, w):
        n = self.n
        Q = np.stack([w[self.q_idx(i)] for i in range(n)])
        V = np.stack([w[self.v_idx(i)] for i in range(n)])
        VD = np.stack([w[self.vd_idx(i)] for i in range(n)])
        U = np.stack([w[self.u_idx(i)] for i in range(n)])
        LAM = np.stack([w[self.lam_idx(i)] for i in range(n)])
        TAU = (np.stack([w[self.tau_idx(i)] for i in range(n)])
               if self.n_tau else np.zeros((n, 0)))
        return Q, V, VD, U, LAM, TAU, w[self.vplus_idx], w[self.impulse_idx]

    # ----- row layout -----
    def _layout_rows(self):
        n = self.n
        blocks = [
            ("dynamics", 7 * n, True),
            ("colloc_q", 7 * (n - 1), True),
            ("colloc_v", 7 * (n - 1), True),
            ("holonomic", 2 * n, True),
            ("pin_pos", 2, True),
            ("pin_vel", 2, True),
        ]
        if self.rom is not None:
            blocks.append(("rom_gc", self.n_y * n, True))
        blocks += [
            ("touchdown", 2, True),
            ("periodic_q", 7, True),
            ("periodic_v", 7, True),
            ("impact_dyn", 7, True),
            ("impact_vel", 2, True),
            ("friction", 3 * n, False),
            ("impulse_cone", 3, False),
            ("clearance", max(n - 2, 0), False),
            ("guard_vel", 1, False),
        ]
        self.blocks = {}
        self.row_eq = []
        start = 0
        for tag, count, eq in blocks:
            self.blocks[tag] = slice(start, start + count)
            self.row_eq.extend([eq] * count)
            start += count
        self.n_rows = start
        self.row_eq = np.array(self.row_eq, dtype=bool)

    # ----- bounds and scaling -----
    def _build_bounds_scales(self):
        n = self.n
        lb = np.full(self.n_w, -np.inf)
        ub = np.full(self.n_w, np.inf)
        scale = np.ones(self.n_w)
        q_lb = np.array([-np.inf, 0.4, -0.9, -1.7, 0.06, -1.7, 0.06])
        q_ub = np.array([np.inf, 1.3, 0.9, 1.7, 2.6, 1.7, 2.6])
        for i in range(n):
            lb[self.q_idx(i)], ub[self.q_idx(i)] = q_lb, q_ub
            lb[self.v_idx(i)], ub[self.v_idx(i)] = -40.0, 40.0
            lb[self.vd_idx(i)], ub[self.vd_idx(i)] = -500.0, 500.0
            lb[self.u_idx(i)], ub[self.u_idx(i)] = -150.0, 150.0
            lb[self.lam_idx(i)], ub[self.lam_idx(i)] = -900.0, 900.0
            scale[self.v_idx(i)] = 1 / 3.0
            scale[self.vd_idx(i)] = 1 / 30.0
            scale[self.u_idx(i)] = 1 / 50.0
            scale[self.lam_idx(i)] = 1 / 300.0
        lb[self.vplus_idx], ub[self.vplus_idx] = -40.0, 40.0
        scale[self.vplus_idx] = 1 / 3.0
        lb[self.impulse_idx], ub[self.impulse_idx] = -200.0, 200.0
        scale[self.impulse_idx] = 1 / 30.0
        self.lb, self.ub, self.var_scale = lb, ub, scale

        rs = np.ones(self.n_rows)
        rs[self.blocks["dynamics"]] = 1 / 50.0
        rs[self.blocks["colloc_v"]] = 1 / 3.0
        rs[self.blocks["holonomic"]] = 1 / 10.0
        if self.rom is not None:
            rs[self.blocks["rom_gc"]] = 1 / 10.0
        rs[self.blocks["periodic_v"]] = 1 / 3.0
        rs[self.blocks["impact_dyn"]] = 1 / 50.0
        rs[self.blocks["impact_vel"]] = 1 / 3.0
        rs[self.blocks["friction"]] = 1 / 300.0
        rs[self.blocks["impulse_cone"]] = 1 / 30.0
        self.row_scale = rs

    # ----- cost -----
    def _build_cost(self):
        t = self.task
        n = self.n
        wts = np.full(n, self.delta)
        wts[0] = wts[-1] = self.delta / 2.0
        diag = np.zeros(self.n_w)
        rows, cols, vals = [], [], []
        tt = np.outer(self.tangent, self.tangent)
        for i in range(n):
            diag[self.v_idx(i)] = wts[i] * t.w_v
            diag[self.vd_idx(i)] = wts[i] * t.w_vdot
            diag[self.u_idx(i)] = wts[i] * t.w_u
            if self.n_tau:
                diag[self.tau_idx(i)] = wts[i] * t.w_tau
            sl = self.lam_idx(i)
            for a in range(2):
                for b in range(2):
                    rows.append(sl.start + a)
                    cols.append(sl.start + b)
                    vals.append(wts[i] * t.w_cop * tt[a, b])
        D = sp.coo_matrix((vals, (rows, cols)), shape=(self.n_w, self.n_w))
        D = D + sp.diags(diag)
        self._H_cost = (2.0 * D).tocsr()

    def cost(self, w):
        Hw = self._H_cost @ w
        return 0.5 * w @ Hw, Hw

    def cost_hess(self, w):
        return self._H_cost

    # ----- constraints -----
    def constraints(self, w):
        """Residual vector and sparse Jacobian of every constraint row."""
        mdl, task, n = self.model, self.task, self.n
        P = mdl.params
        B_act = mdl.actuation_matrix
        nhat, that = self.normal, self.tangent
        L = task.stride_length
        land = L * that
        c = np.zeros(self.n_rows)
        rows, cols, vals = [], [], []

        def put(r0, c0, block):
            block = np.atleast_2d(block)
            rr, cc = np.nonzero(np.ones_like(block, dtype=bool))
            rows.append(r0 + rr)
            cols.append(c0 + cc)
            vals.append(block.ravel())

        Q, V, VD, U, LAM, TAU, v_plus, Lam = self.unpack(w)

        b = self.blocks
        for i in range(n):
            q, v, vd, u, lam = Q[i], V[i], VD[i], U[i], LAM[i]
            M = kernels.mass_matrix(P, q)
            bias = kernels.bias(P, q, v)
            Jl = kernels.foot_jac_l(P, q)
            Jld = kernels.foot_jacdot_l(P, q, v)
            # dynamics: M vd - bias - B u - Jl^T lam = 0
            r0 = b["dynamics"].start + 7 * i
            c[r0:r0 + 7] = M @ vd - bias - B_act @ u - Jl.T @ lam
            put(r0, self.q_idx(i).start,
                kernels.dMa_dq(P, q, vd) - kernels.dbias_dq(P, q, v)
                - kernels.dfoot_jtlam_dq_l(P, q, lam))
            put(r0, self.v_idx(i).start, -kernels.dbias_dv(P, q, v))
            put(r0, self.vd_idx(i).start, M)
            put(r0, self.u_idx(i).start, -B_act)
            put(r0, self.lam_idx(i).start, -Jl.T)
            # holonomic acceleration: Jl vd + Jld v = 0
            r0 = b["holonomic"].start + 2 * i
            c[r0:r0 + 2] = Jl @ vd + Jld @ v
            put(r0, self.q_idx(i).start, kernels.dfoot_acc_dq_l(P, q, v, vd))
            put(r0, self.v_idx(i).start, 2.0 * Jld)
            put(r0, self.vd_idx(i).start, Jl)
            # friction cone in the incline frame
            r0 = b["friction"].start + 3 * i
            lam_n, lam_t = nhat @ lam, that @ lam
            mu = mdl.friction
            c[r0] = -lam_n
            c[r0 + 1] = lam_t - mu * lam_n
            c[r0 + 2] = -lam_t - mu * lam_n
            cone = np.vstack([-nhat, that - mu * nhat, -that - mu * nhat])
            put(r0, self.lam_idx(i).start, cone)
            # swing-foot clearance at interior knots
            if 1 <= i <= n - 2:
                r0 = b["clearance"].start + (i - 1)
                pr = kernels.foot_pos_r(P, q)
                c[r0] = -(nhat @ pr)
                put(r0, self.q_idx(i).start, -(nhat @ kernels.foot_jac_r(P, q)))
            # rom embedding rows
            if self.rom is not None:
                r0 = b["rom_gc"].start + self.n_y * i
                tau = TAU[i] if self.n_tau else None
                emb = romlib.eval_embedding(self.rom, mdl, q, v, vd, derivs=True)
                dyn = self.rom.dyn_basis.eval(
                    np.concatenate([emb.y, emb.ydot]), self.rom.gravity, jac=True)
                gc = emb.yddot - self.rom.theta_d @ dyn.value
                if self.n_tau:
                    gc = gc - self.rom.B_y @ tau
                c[r0:r0 + self.n_y] = gc
                Gy = self.rom.theta_d @ dyn.jac[:, :self.n_y]
                Gyd = self.rom.theta_d @ dyn.jac[:, self.n_y:]
                dydot_dq = self.rom.theta_e @ (emb.feats.dacc_dv / 2.0)
                put(r0, self.q_idx(i).start,
                    emb.dyddot_dq - Gy @ emb.J - Gyd @ dydot_dq)
                put(r0, self.v_idx(i).start, emb.dyddot_dv - Gyd @ emb.J)
                put(r0, self.vd_idx(i).start, emb.J)
                if self.n_tau:
                    put(r0, self.tau_idx(i).start, -self.rom.B_y)

        # collocation
        d2 = self.delta / 2.0
        I7 = np.eye(7)
        for i in range(n - 1):
            r0 = b["colloc_q"].start + 7 * i
            c[r0:r0 + 7] = Q[i + 1] - Q[i] - d2 * (V[i] + V[i + 1])
            put(r0, self.q_idx(i + 1).start, I7)
            put(r0, self.q_idx(i).start, -I7)
            put(r0, self.v_idx(i).start, -d2 * I7)
            put(r0, self.v_idx(i + 1).start, -d2 * I7)
            r0 = b["colloc_v"].start + 7 * i
            c[r0:r0 + 7] = V[i + 1] - V[i] - d2 * (VD[i] + VD[i + 1])
            put(r0, self.v_idx(i + 1).start, I7)
            put(r0, self.v_idx(i).start, -I7)
            put(r0, self.vd_idx(i).start, -d2 * I7)
            put(r0, self.vd_idx(i + 1).start, -d2 * I7)

        q0, v0 = Q[0], V[0]
        qn, vn = Q[n - 1], V[n - 1]
        Jl0 = kernels.foot_jac_l(P, q0)
        # stance pin at the first knot
        r0 = b["pin_pos"].start
        c[r0:r0 + 2] = kernels.foot_pos_l(P, q0)
        put(r0, self.q_idx(0).start, Jl0)
        r0 = b["pin_vel"].start
        c[r0:r0 + 2] = Jl0 @ v0
        put(r0, self.q_idx(0).start, kernels.foot_jacdot_l(P, q0, v0))
        put(r0, self.v_idx(0).start, Jl0)
        # swing touchdown at the landing point
        Jr_n = kernels.foot_jac_r(P, qn)
        r0 = b["touchdown"].start
        c[r0:r0 + 2] = kernels.foot_pos_r(P, qn) - land
        put(r0, self.q_idx(n - 1).start, Jr_n)
        # periodicity: q0 = shift(R qn), v0 = R v+
        R = self.mirror
        r0 = b["periodic_q"].start
        shift = np.zeros(7)
        shift[:2] = land
        c[r0:r0 + 7] = q0 - R @ qn + shift
        put(r0, self.q_idx(0).start, I7)
        put(r0, self.q_idx(n - 1).start, -R)
        r0 = b["periodic_v"].start
        c[r0:r0 + 7] = v0 - R @ v_plus
        put(r0, self.v_idx(0).start, I7)
        put(r0, self.vplus_idx.start, -R)
        # impact at touchdown: M(v+ - v-) = Jr^T Lam, Jr v+ = 0
        Mn = kernels.mass_matrix(P, qn)
        r0 = b["impact_dyn"].start
        c[r0:r0 + 7] = Mn @ (v_plus - vn) - Jr_n.T @ Lam
        put(r0, self.q_idx(n - 1).start,
            kernels.dMa_dq(P, qn, v_plus - vn)
            - kernels.dfoot_jtlam_dq_r(P, qn, Lam))
        put(r0, self.v_idx(n - 1).start, -Mn)
        put(r0, self.vplus_idx.start, Mn)
        put(r0, self.impulse_idx.start, -Jr_n.T)
        r0 = b["impact_vel"].start
        c[r0:r0 + 2] = Jr_n @ v_plus
        put(r0, self.q_idx(n - 1).start, kernels.foot_jacdot_r(P, qn, v_plus))
        put(r0, self.vplus_idx.start, Jr_n)
        # impulse friction cone
        r0 = b["impulse_cone"].start
        mu = mdl.friction
        Ln, Lt = nhat @ Lam, that @ Lam
        c[r0] = -Ln
        c[r0 + 1] = Lt - mu * Ln
        c[r0 + 2] = -Lt - mu * Ln
        cone = np.vstack([-nhat, that - mu * nhat, -that - mu * nhat])
        put(r0, self.impulse_idx.start, cone)
        # pre-impact normal velocity must point into the ground
        r0 = b["guard_vel"].start
        Jrd_n = kernels.foot_jacdot_r(P, qn, vn)
        c[r0] = nhat @ (Jr_n @ vn)
        put(r0, self.q_idx(n - 1).start, (nhat @ Jrd_n)[None, :])
        put(r0, self.v_idx(n - 1).start, (nhat @ Jr_n)[None, :])

        J = sp.coo_matrix(
            (np.concatenate(vals),
             (np.concatenate(rows), np.concatenate(cols))),
            shape=(self.n_rows, self.n_w)).tocsr()
        return c, J

    # ----- envelope support -----
    def theta_jacobian(self, w):
        """∂(g_c rows)/∂θ_free stacked over knots; zero rows elsewhere."""
        if self.rom is None:
            raise ValueError("problem has no ROM rows")
        Q, V, VD, _, _, TAU, _, _ = self.unpack(w)
        out = np.zeros((self.n_y * self.n, self.rom.n_free))
        for i in range(self.n):
            tau = TAU[i] if self.n_tau else None
            out[self.n_y * i:self.n_y * (i + 1)] = romlib.gc_theta_jacobian(
                self.rom, self.model, Q[i], V[i], VD[i], tau)
        return out

    # ----- initial guess -----
    def initial_guess(self):
        """Kinematic walking seed: base ribbon, IK legs, inverse dynamics."""
        mdl, task, n = self.model, self.task, self.n
        P = mdl.params
        L, that, nhat = task.stride_length, self.tangent, self.normal
        h0 = 0.9 * (mdl.thigh_length + mdl.foot_offset)
        w = np.zeros(self.n_w)
        ts = np.linspace(0.0, 1.0, n)
        for i, s in enumerate(ts):
            base = (-L / 2 + L * s) * that + h0 * nhat
            swing = (-L + 2 * L * s) * that + 0.08 * np.sin(np.pi * s) * nhat
            pitch = 0.0
            lh, lk = _leg_ik(mdl, base, np.zeros(2), pitch)
            rh, rk = _leg_ik(mdl, base, swing, pitch)
            w[self.q_idx(i)] = [base[0], base[1], pitch, lh, lk, rh, rk]
        for i in range(n):
            im, ip = max(i - 1, 0), min(i + 1, n - 1)
            dq = w[self.q_idx(ip)] - w[self.q_idx(im)]
            w[self.v_idx(i)] = dq / ((ip - im) * self.delta)
        for i in range(n):
            im, ip = max(i - 1, 0), min(i + 1, n - 1)
            dv = w[self.v_idx(ip)] - w[self.v_idx(im)]
            w[self.vd_idx(i)] = dv / ((ip - im) * self.delta)
        for i in range(n):
            q, v, vd = w[self.q_idx(i)], w[self.v_idx(i)], w[self.vd_idx(i)]
            rhs = kernels.mass_matrix(P, q) @ vd - kernels.bias(P, q, v)
            A = np.hstack([mdl.actuation_matrix,
                           kernels.foot_jac_l(P, q).T])
            sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
            w[self.u_idx(i)] = sol[:4]
            w[self.lam_idx(i)] = sol[4:]
        qn, vn = w[self.q_idx(n - 1)], w[self.v_idx(n - 1)]
        M = kernels.mass_matrix(P, qn)
        Jr = kernels.foot_jac_r(P, qn)
        Minv_JT = np.linalg.solve(M, Jr.T)
        imp = np.linalg.solve(Jr @ Minv_JT, -(Jr @ vn))
        w[self.impulse_idx] = imp
        w[self.vplus_idx] = vn + Minv_JT @ imp
        if self.guess_jitter:
            rng = np.random.default_rng(self.seed)
            w = w + self.guess_jitter * rng.standard_normal(self.n_w)
        return np.clip(w, self.lb, self.ub)

    def layout_hash(self):
        parts = [f"{tag}:{sl.start}:{sl.stop}" for tag, sl in self.blocks.items()]
        parts.append(f"n_w={self.n_w};stride={self.stride};n={self.n}")
        return hashlib.sha256(";".join(parts).encode()).hexdigest()[:16]

    def as_nlp(self):
        guess = self.initial_guess()
        base_cost = self.cost(guess)[0]
        return nlp.NlpProblem(
            n=self.n_w, cost=self.cost, constraints=self.constraints,
            row_eq=self.row_eq, lb=self.lb, ub=self.ub,
            cost_hess=self.cost_hess, var_scale=self.var_scale,
            row_scale=self.row_scale,
            cost_scale=max(1.0, base_cost), name="trajopt")


def _leg_ik(model, base, foot, pitch):
    """Hip/knee angles placing the point foot; knee kept on the bent side."""
    l1, l2 = model.thigh_length, model.foot_offset
    r = np.asarray(foot) - np.asarray(base)
    d = min(np.linalg.norm(r), 0.999 * (l1 + l2))
    d = max(d, abs(l1 - l2) + 1e-6)
    phi_r = np.arctan2(r[0], -r[1])
    cos_beta = np.clip((l1**2 + l2**2 - d**2) / (2 * l1 * l2), -1.0, 1.0)
    knee = np.pi - np.arccos(cos_beta)
    cos_gamma = np.clip((l1**2 + d**2 - l2**2) / (2 * l1 * d), -1.0, 1.0)
    hip_abs = phi_r - np.arccos(cos_gamma)
    return hip_abs - pitch, knee


def build(model, rom, task, n=16, guess_jitter=0.0, seed=0):
    """Transcribe one left-support stride; rom=None drops the g_c rows."""
    return Transcription(model, rom, task, n=n,
                        guess_jitter=guess_jitter, seed=seed)


def solve(tr, warm_start=None, warm_duals=None, options=None):
    problem = tr.as_nlp()
    w0 = tr.initial_guess() if warm_start is None else warm_start
    try:
        sol = nlp.solve(problem, w0, duals0=warm_duals, options=options)
    except nlp.NlpNanError:
        empty = nlp.KktReport()
        return TrajOptSolution(w0, np.zeros(tr.n_rows), nlp.SINGULAR,
                               np.nan, {}, empty)
    c, _ = tr.constraints(sol.w)
    residuals = {}
    for tag, slc in tr.blocks.items():
        vi = c[slc]
        if vi.size == 0:
            continue
        if tr.row_eq[slc].all():
            residuals[tag] = np.abs(vi).max()
        else:
            residuals[tag] = np.maximum(vi, 0.0).max()
    return TrajOptSolution(sol.w, sol.duals, sol.status, sol.cost,
                           residuals, sol.report)


def envelope_gradient(sol, tr):
    """∇_θ J via the dual solution: λ*ᵀ ∂f̃/∂θ over the g_c rows only."""
    if sol.status != OPTIMAL:
        raise ValueError(f"need an optimal solution, got {sol.status}")
    if sol.duals.size != tr.n_rows:
        raise ValueError("missing duals")
    G = tr.theta_jacobian(sol.w)
    lam_gc = sol.duals[tr.blocks["rom_gc"]]
    return lam_gc @ G


def cost_breakdown(sol, tr):
    """Per-term costs; exactly sums to the reported objective."""
    Q, V, VD, U, LAM, TAU, _, _ = tr.unpack(sol.w)
    t = tr.task
    wts = np.full(tr.n, tr.delta)
    wts[0] = wts[-1] = tr.delta / 2.0
    lam_t = LAM @ tr.tangent
    out = {
        "torque": float(t.w_u * wts @ np.sum(U**2, axis=1)),
        "velocity": float(t.w_v * wts @ np.sum(V**2, axis=1)),
        "acceleration": float(t.w_vdot * wts @ np.sum(VD**2, axis=1)),
        "cop_reg": float(t.w_cop * wts @ lam_t**2),
    }
    if tr.n_tau:
        out["tau_reg"] = float(t.w_tau * wts @ np.sum(TAU**2, axis=1))
    return out


def embedding_rank_ok(tr, w):
    """Remark-level diagnostic: J M⁻¹ B full row rank at every knot."""
    if tr.rom is None:
        return True
    Q = [w[tr.q_idx(i)] for i in range(tr.n)]
    B = tr.model.actuation_matrix
    for q in Q:
        M = kernels.mass_matrix(tr.model.params, q)
        J = romlib.eval_embedding(tr.rom, tr.model, q).J
        JMB = J @ np.linalg.solve(M, B)
        if np.linalg.matrix_rank(JMB, tol=1e-8) < tr.n_y:
            return False
    return True


def dump_trajectory_csv(sol, tr, path):
    """Optional per-solve trajectory dump: t, q, v, u, lambda, y, ydot, tau."""
    Q, V, VD, U, LAM, TAU, _, _ = tr.unpack(sol.w)
    with open(path, "w") as fh:
        fh.write("# schema=trajopt-trajectory-v1\n")
        cols = (["t"] + [f"q{i}" for i in range(7)] + [f"v{i}" for i in range(7)]
                + [f"u{i}" for i in range(4)] + ["lam_x", "lam_z"]
                + [f"y{i}" for i in range(tr.n_y)]
                + [f"yd{i}" for i in range(tr.n_y)]
                + [f"tau{i}" for i in range(tr.n_tau)])
        fh.write(",".join(cols) + "\n")
        for i in range(tr.n):
            t = i * tr.delta
            row = [t, *Q[i], *V[i], *U[i], *LAM[i]]
            if tr.rom is not None:
                emb = romlib.eval_embedding(tr.rom, tr.model, Q[i], V[i])
                row += [*emb.y, *emb.ydot]
            row += list(TAU[i]) if tr.n_tau else []
            fh.write(",".join(f"{x:.17g}" for x in row) + "\n")
