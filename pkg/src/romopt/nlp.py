"""Sparse constrained nonlinear solver with primal and dual solutions.

Method of multipliers on equality rows (inequalities get slack variables
with a nonnegativity bound), with a projected damped-Newton inner solve on
the regularized sparse KKT system

    [ H + sigma*I   Jt ] [dw]   [ -g          ]
    [ J            -I/rho ] [p ] = [ -lam/rho - c ]

which is the Gauss-Newton step for the augmented Lagrangian. Duals are
reported in the original (unscaled) problem units under the convention
L = h + lam^T f with f <= 0 on inequality rows, so lam >= 0 there.
"""

import time
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
ITERATION_LIMIT = "iteration-limit"
SINGULAR = "singular"


class NlpNanError(RuntimeError):
    def __init__(self, what, row=None):
        self.row = row
        msg = f"non-finite value in {what}"
        if row is not None:
            msg += f" (row {row})"
        super().__init__(msg)


@dataclass
class NlpProblem:
    n: int
    cost: callable                    # w -> (value, gradient)
    constraints: callable = None      # w -> (values, jacobian csr)
    row_eq: np.ndarray = None         # True for =0 rows, False for <=0 rows
    lb: np.ndarray = None
    ub: np.ndarray = None
    cost_hess: callable = None        # w -> sparse Hessian of the cost
    var_scale: np.ndarray = None      # s: solver works on s*w
    row_scale: np.ndarray = None
    cost_scale: float = 1.0
    name: str = ""

    def __post_init__(self):
        if self.lb is None:
            self.lb = np.full(self.n, -np.inf)
        if self.ub is None:
            self.ub = np.full(self.n, np.inf)
        self.lb = np.asarray(self.lb, dtype=float)
        self.ub = np.asarray(self.ub, dtype=float)
        if self.row_eq is not None:
            self.row_eq = np.asarray(self.row_eq, dtype=bool)
        if self.var_scale is not None:
            self.var_scale = np.asarray(self.var_scale, dtype=float)
        if self.row_scale is not None:
            self.row_scale = np.asarray(self.row_scale, dtype=float)

    @property
    def m(self):
        return 0 if self.row_eq is None else self.row_eq.size


@dataclass
class SolverOptions:
    tol_stat: float = 1e-6
    tol_feas: float = 1e-6
    tol_comp: float = 1e-6
    max_major: int = 200
    max_inner: int = 40
    rho0: float = 10.0
    rho_max: float = 1e10
    omega0: float = 1e-2
    verbose: bool = False


@dataclass
class KktReport:
    stationarity: float = np.inf
    feasibility: float = np.inf
    complementarity: float = np.inf
    iterations: int = 0


@dataclass
class NlpSolution:
    w: np.ndarray
    duals: np.ndarray
    bound_duals: np.ndarray
    report: KktReport
    status: str
    cost: float = np.nan
    slacks: np.ndarray = None
    wall_time: float = 0.0
    problem: NlpProblem = None

    def log_line(self):
        r = self.report
        return (f"status={self.status} iters={r.iterations} "
                f"cost={self.cost:.9g} stat={r.stationarity:.3e} "
                f"feas={r.feasibility:.3e} comp={r.complementarity:.3e} "
                f"wall={self.wall_time:.3f}")


def apply_scaling(problem, s, row_scale=None, cost_scale=None):
    """Change of variables w_s = s*w (plus row/cost scaling).

    Returns (scaled_problem, unscale) where unscale(w_s, duals_s) maps a
    scaled solution back to original units; duals pick up the row and cost
    factors so the Lagrangian is invariant.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("variable scales must be positive")
    m = problem.m
    r = np.ones(m) if row_scale is None else np.asarray(row_scale, dtype=float)
    if np.any(r <= 0):
        raise ValueError("row scales must be positive")
    c_s = problem.cost_scale if cost_scale is None else cost_scale

    def cost(ws):
        val, grad = problem.cost(ws / s)
        return val / c_s, grad / (s * c_s)

    constraints = None
    if problem.constraints is not None:
        def constraints(ws):
            vals, J = problem.constraints(ws / s)
            Js = sp.diags(r) @ J @ sp.diags(1.0 / s)
            return r * vals, Js.tocsr()

    cost_hess = None
    if problem.cost_hess is not None:
        def cost_hess(ws):
            H = problem.cost_hess(ws / s)
            D = sp.diags(1.0 / s)
            return (D @ H @ D) / c_s

    scaled = NlpProblem(
        n=problem.n, cost=cost, constraints=constraints,
        row_eq=problem.row_eq, lb=problem.lb * s, ub=problem.ub * s,
        cost_hess=cost_hess, name=problem.name)

    def unscale(ws, duals_s, bound_duals_s=None):
        w = ws / s
        duals = c_s * r * duals_s if m else np.zeros(0)
        if bound_duals_s is None:
            return w, duals
        return w, duals, c_s * s * bound_duals_s

    return scaled, unscale


def _merit(problem, w, lam, rho):
    val, _ = problem.cost(w)
    if problem.m == 0:
        return val if np.isfinite(val) else np.inf
    c, _ = problem.constraints(w)
    if not (np.isfinite(val) and np.all(np.isfinite(c))):
        return np.inf
    return val + lam @ c + 0.5 * rho * (c @ c)


def _kkt_unscaled(problem, w, duals, bound_duals, slacks=None):
    _, g = problem.cost(w)
    if problem.m:
        c, J = problem.constraints(w)
        grad_L = g + J.T @ duals
        eq = problem.row_eq
        feas = 0.0
        if eq.any():
            feas = np.abs(c[eq]).max()
        comp = 0.0
        if (~eq).any():
            viol = np.maximum(c[~eq], 0.0).max()
            feas = max(feas, viol)
            comp = np.abs(duals[~eq] * c[~eq]).max()
    else:
        grad_L = g
        feas = comp = 0.0
    grad_L = grad_L + bound_duals
    at_lb = _near_bound(w, problem.lb, 1e-9, side=+1)
    at_ub = _near_bound(w, problem.ub, 1e-9, side=-1)
    masked = (at_lb & (grad_L > 0)) | (at_ub & (grad_L < 0))
    stat = np.abs(np.where(masked, 0.0, grad_L)).max(initial=0.0)
    return stat, feas, comp


def _near_bound(w, bound, tol, side):
    """Elementwise |w - bound| <= tol*max(1,|bound|); False on inf bounds."""
    finite = np.isfinite(bound)
    out = np.zeros(w.shape, dtype=bool)
    if finite.any():
        b = bound[finite]
        margin = tol * np.maximum(1.0, np.abs(b))
        if side > 0:
            out[finite] = w[finite] <= b + margin
        else:
            out[finite] = w[finite] >= b - margin
    return out


class _SlackProblem:
    """Equality-only reformulation: inequality rows get slacks t >= 0."""

    def __init__(self, problem):
        self.base = problem
        self.ineq = np.where(~problem.row_eq)[0] if problem.m else np.array([], dtype=int)
        self.n_slack = self.ineq.size
        self.n = problem.n + self.n_slack
        self.lb = np.concatenate([problem.lb, np.zeros(self.n_slack)])
        self.ub = np.concatenate([problem.ub, np.full(self.n_slack, np.inf)])
        self.m = problem.m
        if self.n_slack:
            cols = sp.csr_matrix(
                (np.ones(self.n_slack), (self.ineq, np.arange(self.n_slack))),
                shape=(problem.m, self.n_slack))
            self._slack_jac = cols

    def split(self, z):
        return z[:self.base.n], z[self.base.n:]

    def cost(self, z):
        w, _ = self.split(z)
        val, g = self.base.cost(w)
        return val, np.concatenate([g, np.zeros(self.n_slack)])

    def constraints(self, z):
        w, t = self.split(z)
        c, J = self.base.constraints(w)
        if not np.all(np.isfinite(c)):
            raise NlpNanError("constraints", int(np.argmax(~np.isfinite(c))))
        if self.n_slack:
            c = c.copy()
            c[self.ineq] += t
            J = sp.hstack([J, self._slack_jac], format="csr")
        return c, J

    def cost_hess(self, z):
        w, _ = self.split(z)
        if self.base.cost_hess is not None:
            H = self.base.cost_hess(w).tocoo()
            return sp.coo_matrix((H.data, (H.row, H.col)),
                                 shape=(self.n, self.n)).tocsr()
        H = _fd_cost_hessian(self.base, w)
        return sp.block_diag(
            [H, sp.csr_matrix((self.n_slack, self.n_slack))]).tocsr()

    def init_slack(self, w0):
        if not self.n_slack:
            return np.zeros(0)
        c, _ = self.base.constraints(w0)
        return np.maximum(-c[self.ineq], 0.0)


def _fd_cost_hessian(problem, w, h=1e-6):
    n = problem.n
    H = np.zeros((n, n))
    for i in range(n):
        wp, wm = w.copy(), w.copy()
        wp[i] += h
        wm[i] -= h
        gp = problem.cost(wp)[1]
        gm = problem.cost(wm)[1]
        H[:, i] = (gp - gm) / (2 * h)
    return sp.csr_matrix(0.5 * (H + H.T))


def _newton_step(H, J, g, lam_hat, rho, free, sigma):
    """Gauss-Newton step on the augmented Lagrangian via the sparse KKT
    system; equivalent to (H + rho JtJ) d = -(g + Jt lam_hat) on the free
    variables but keeps the factorization sparse and better conditioned."""
    nf = free.size
    Hff = H[free][:, free] if sp.issparse(H) else sp.csr_matrix(H[np.ix_(free, free)])
    blocks_reg = Hff + sigma * sp.eye(nf)
    if J is not None:
        m = J.shape[0]
        Jf = J[:, free]
        K = sp.bmat([[blocks_reg, Jf.T],
                     [Jf, -sp.eye(m) / rho]], format="csc")
        rhs = np.concatenate([-g[free], -lam_hat / rho])
    else:
        K = blocks_reg.tocsc()
        rhs = -g[free]
    try:
        solve = spla.splu(K)
        sol = solve.solve(rhs)
    except RuntimeError:
        return None
    if not np.all(np.isfinite(sol)):
        return None
    return sol[:nf]


def _refine_step(sl, z, y_est):
    """One Newton step on the active-set KKT system.

    Quadratic tail convergence after the multiplier loop gets close; lands
    QPs at machine precision and sharpens trajopt duals.
    """
    H = sl.cost_hess(z)
    _, g = sl.cost(z)
    c, J = sl.constraints(z)
    g_ref = g + J.T @ y_est
    at_lb = (z <= sl.lb + 1e-10) & (g_ref > 0)
    at_ub = (z >= sl.ub - 1e-10) & (g_ref < 0)
    free = np.where(~(at_lb | at_ub))[0]
    if free.size == 0:
        return None
    m = c.size
    Hff = H[free][:, free]
    Jf = J[:, free]
    K = sp.bmat([[Hff + 1e-12 * sp.eye(free.size), Jf.T],
                 [Jf, -1e-12 * sp.eye(m)]], format="csc")
    try:
        sol = spla.splu(K).solve(np.concatenate([-g[free], -c]))
    except RuntimeError:
        return None
    if not np.all(np.isfinite(sol)):
        return None
    d = np.zeros(sl.n)
    d[free] = sol[:free.size]
    z_new = np.clip(z + d, sl.lb, sl.ub)
    return z_new, sol[free.size:]


def _polish_duals(problem, w, duals, act_tol=1e-6):
    """Least-squares fit of duals on the active set at the solution."""
    _, g = problem.cost(w)
    n = problem.n
    at_lb = _near_bound(w, problem.lb, act_tol, side=+1)
    at_ub = _near_bound(w, problem.ub, act_tol, side=-1)
    bound_idx = np.where(at_lb | at_ub)[0]
    if problem.m:
        c, J = problem.constraints(w)
        eq = problem.row_eq
        active_rows = np.where(eq | (c >= -act_tol))[0]
    else:
        active_rows = np.array([], dtype=int)
        J = None

    for _ in range(3):
        cols = []
        if active_rows.size:
            cols.append(J[active_rows].T.toarray())
        if bound_idx.size:
            Bcols = np.zeros((n, bound_idx.size))
            for k, i in enumerate(bound_idx):
                Bcols[i, k] = 1.0
            cols.append(Bcols)
        if not cols:
            return duals, np.zeros(n)
        A = np.hstack(cols)
        sol, *_ = np.linalg.lstsq(A, -g, rcond=None)
        lam_act = sol[:active_rows.size]
        if problem.m:
            bad = []
            for k, row in enumerate(active_rows):
                if not problem.row_eq[row] and lam_act[k] < -act_tol:
                    bad.append(k)
            if bad:
                active_rows = np.delete(active_rows, bad)
                continue
        break

    new_duals = np.zeros(problem.m)
    if active_rows.size:
        lam_act = sol[:active_rows.size]
        if problem.m:
            neg = (~problem.row_eq[active_rows]) & (lam_act < 0)
            lam_act = np.where(neg, 0.0, lam_act)
        new_duals[active_rows] = lam_act
    bound_duals = np.zeros(n)
    if bound_idx.size:
        bound_duals[bound_idx] = sol[active_rows.size:]
    return new_duals, bound_duals


def solve(problem, w0, duals0=None, options=None):
    """Minimize problem.cost subject to constraints/bounds from w0.

    Returns an NlpSolution whose duals satisfy L = h + lam^T f in original
    units. Inequality rows follow f <= 0 with lam >= 0.
    """
    opts = options or SolverOptions()
    t_start = time.perf_counter()
    w0 = np.asarray(w0, dtype=float)
    if not np.all(np.isfinite(w0)):
        raise NlpNanError("initial guess")
    if problem.m and problem.row_eq.size != problem.constraints(w0)[0].size:
        raise ValueError("row_eq length does not match constraint rows")

    s = problem.var_scale if problem.var_scale is not None else np.ones(problem.n)
    scaled, unscale = apply_scaling(problem, s, problem.row_scale,
                                    problem.cost_scale)
    sl = _SlackProblem(scaled)
    z = np.concatenate([np.clip(w0 * s, scaled.lb, scaled.ub), sl.init_slack(w0 * s)])
    lam = np.zeros(sl.m)
    if duals0 is not None and duals0.size == sl.m:
        r = problem.row_scale if problem.row_scale is not None else np.ones(sl.m)
        lam = np.asarray(duals0, dtype=float) / (problem.cost_scale * r)

    rho = opts.rho0
    omega = opts.omega0
    iters = 0
    status = ITERATION_LIMIT
    feas_hist = []

    def al_value(zz):
        val, _ = sl.cost(zz)
        if sl.m:
            c, _ = sl.constraints(zz)
            if not (np.isfinite(val) and np.all(np.isfinite(c))):
                return np.inf
            return val + lam @ c + 0.5 * rho * (c @ c)
        return val if np.isfinite(val) else np.inf

    best = None
    for outer in range(60):
        # inner projected damped Newton on the augmented Lagrangian
        for _ in range(opts.max_inner):
            if iters >= opts.max_major:
                break
            H = sl.cost_hess(z)
            val, g = sl.cost(z)
            if not np.all(np.isfinite(g)):
                raise NlpNanError("cost gradient")
            if sl.m:
                c, J = sl.constraints(z)
                lam_hat = lam + rho * c
                g_al = g + J.T @ lam_hat
            else:
                c = np.zeros(0)
                J = None
                lam_hat = np.zeros(0)
                g_al = g
            pg = np.clip(z - g_al, sl.lb, sl.ub) - z
            if np.abs(pg).max(initial=0.0) <= omega:
                break
            tol_act = 1e-10
            at_lb = (z <= sl.lb + tol_act) & (g_al > 0)
            at_ub = (z >= sl.ub - tol_act) & (g_al < 0)
            free = np.where(~(at_lb | at_ub))[0]
            if free.size == 0:
                break
            sigma = 0.0
            d = None
            for _ in range(20):
                dfree = _newton_step(H, J, g, lam_hat, rho, free, sigma)
                if dfree is not None and dfree @ g_al[free] < 0:
                    d = np.zeros(sl.n)
                    d[free] = dfree
                    break
                sigma = max(sigma * 10, 1e-6)
            if d is None:
                status = SINGULAR
                break
            base = al_value(z)
            slope = g_al[free] @ d[free]
            alpha = 1.0
            accepted = False
            for _ in range(40):
                trial = np.clip(z + alpha * d, sl.lb, sl.ub)
                if al_value(trial) <= base + 1e-4 * alpha * slope:
                    z = trial
                    accepted = True
                    break
                alpha *= 0.5
            iters += 1
            if not accepted:
                break
        if status == SINGULAR:
            break

        if sl.m:
            # Newton acceleration on the identified active set
            y_est = lam + rho * sl.constraints(z)[0]
            for _ in range(4):
                c_now, _ = sl.constraints(z)
                feas_now = np.abs(c_now).max(initial=0.0)
                if feas_now <= 1e-14:
                    break
                out = _refine_step(sl, z, y_est)
                if out is None:
                    break
                z_new, y_new = out
                try:
                    c_new, _ = sl.constraints(z_new)
                except NlpNanError:
                    break
                feas_new = np.abs(c_new).max(initial=0.0)
                if not np.isfinite(feas_new) or feas_new > 0.9 * feas_now:
                    break
                z, y_est = z_new, y_new
                lam = y_new - rho * c_new

        if sl.m:
            c, _ = sl.constraints(z)
            feas_scaled = np.abs(c).max(initial=0.0)
        else:
            feas_scaled = 0.0
        feas_hist.append(feas_scaled)

        # report in original units to test convergence honestly
        w_cur, duals_cur = unscale(z[:scaled.n], lam + rho * c if sl.m else lam)
        duals_pol, bounds_pol = _polish_duals(problem, w_cur, duals_cur)
        stat, feas, comp = _kkt_unscaled(problem, w_cur, duals_pol, bounds_pol)
        cand = (stat, feas, comp, w_cur, duals_pol, bounds_pol)
        if best is None or (feas, stat) < (best[1], best[0]):
            best = cand
        if stat <= opts.tol_stat and feas <= opts.tol_feas and comp <= opts.tol_comp:
            status = OPTIMAL
            best = cand
            break
        if iters >= opts.max_major:
            status = ITERATION_LIMIT
            break

        if feas_scaled <= max(1e-8, 0.1 * omega):
            lam = lam + rho * c
            omega = max(omega * 0.2, 0.1 * opts.tol_stat)
        else:
            if rho >= opts.rho_max:
                if len(feas_hist) >= 4 and feas_hist[-1] > 0.9 * feas_hist[-4]:
                    status = INFEASIBLE
                    break
            rho = min(rho * 10.0, opts.rho_max)
            lam = lam + 0.0
        if opts.verbose:
            print(f"  outer {outer}: feas={feas:.2e} stat={stat:.2e} "
                  f"rho={rho:.1e} iters={iters}")

    stat, feas, comp, w_fin, duals_fin, bounds_fin = best
    report = KktReport(stat, feas, comp, iters)
    cost_val, _ = problem.cost(w_fin)
    sol = NlpSolution(w=w_fin, duals=duals_fin, bound_duals=bounds_fin,
                      report=report, status=status, cost=cost_val,
                      wall_time=time.perf_counter() - t_start,
                      problem=problem)
    if status == ITERATION_LIMIT and stat <= opts.tol_stat and \
            feas <= opts.tol_feas and comp <= opts.tol_comp:
        sol.status = OPTIMAL
    return sol


def check_differentiability(solution, act_tol=1e-6, dual_tol=1e-6):
    """LICQ and strict-complementarity diagnostic at a solution.

    Never blocks the pipeline; the outer optimization proceeds regardless
    of the flags.
    """
    problem = solution.problem
    w = solution.w
    rows = []
    if problem.m:
        c, J = problem.constraints(w)
        active = np.where(problem.row_eq | (c >= -act_tol))[0]
        if active.size:
            rows.append(J[active].toarray())
    at_lb = w <= problem.lb + act_tol
    at_ub = w >= problem.ub - act_tol
    for i in np.where(at_lb | at_ub)[0]:
        e = np.zeros(problem.n)
        e[i] = 1.0
        rows.append(e[None, :])
    licq_ok = True
    rank = 0
    n_active = 0
    if rows:
        A = np.vstack(rows)
        n_active = A.shape[0]
        rank = np.linalg.matrix_rank(A, tol=1e-9 * max(1.0, np.abs(A).max()))
        licq_ok = rank == n_active
    strict_ok = True
    min_active_dual = np.inf
    if problem.m:
        ineq_active = np.where((~problem.row_eq) & (c >= -act_tol))[0]
        for row in ineq_active:
            mag = abs(solution.duals[row])
            min_active_dual = min(min_active_dual, mag)
            if mag <= dual_tol:
                strict_ok = False
    from types import SimpleNamespace
    return SimpleNamespace(licq_ok=licq_ok, strict_complementarity_ok=strict_ok,
                           active_rank=int(rank), n_active=int(n_active),
                           min_active_dual=min_active_dual)
