import numpy as np
import pytest
import scipy.sparse as sp

from oracles import dense_active_set_qp
from romopt import nlp


def quadratic_problem(H, g, A=None, b=None, row_eq=None, lb=None, ub=None,
                      var_scale=None):
    H = np.asarray(H, dtype=float)
    g = np.asarray(g, dtype=float)
    n = g.size

    def cost(w):
        return 0.5 * w @ H @ w + g @ w, H @ w + g

    constraints = None
    if A is not None:
        A = np.asarray(A, dtype=float)
        b = np.asarray(b, dtype=float)
        J = sp.csr_matrix(A)

        def constraints(w):
            return A @ w - b, J

    return nlp.NlpProblem(
        n=n, cost=cost, constraints=constraints,
        row_eq=None if A is None else np.asarray(row_eq, dtype=bool),
        lb=lb, ub=ub, cost_hess=lambda w: sp.csr_matrix(H),
        var_scale=var_scale)


def test_hand_kkt_inequality():
    # min (x-1)^2  s.t.  x >= 2  (row: 2 - x <= 0)
    def cost(w):
        return (w[0] - 1.0) ** 2, np.array([2.0 * (w[0] - 1.0)])

    def con(w):
        return np.array([2.0 - w[0]]), sp.csr_matrix(np.array([[-1.0]]))

    p = nlp.NlpProblem(n=1, cost=cost, constraints=con,
                       row_eq=np.array([False]))
    sol = nlp.solve(p, np.array([0.0]))
    assert sol.status == nlp.OPTIMAL
    assert sol.w[0] == pytest.approx(2.0, abs=1e-6)
    assert sol.duals[0] == pytest.approx(2.0, abs=2e-6)
    assert sol.duals[0] >= 0.0


def test_hand_kkt_equality():
    # min x^2 + y^2  s.t.  x + y - 1 = 0  ->  (0.5, 0.5), lam = -1
    def cost(w):
        return w @ w, 2.0 * w

    def con(w):
        return np.array([w[0] + w[1] - 1.0]), sp.csr_matrix(np.array([[1.0, 1.0]]))

    p = nlp.NlpProblem(n=2, cost=cost, constraints=con,
                       row_eq=np.array([True]))
    sol = nlp.solve(p, np.zeros(2))
    assert sol.status == nlp.OPTIMAL
    assert sol.w == pytest.approx([0.5, 0.5], abs=1e-6)
    assert sol.duals[0] == pytest.approx(-1.0, abs=1e-6)


def test_hand_kkt_envelope_toy():
    # min w^2 s.t. theta - w <= 0 at theta = 3 -> w* = 3, lam* = 6
    theta = 3.0

    def cost(w):
        return w[0] ** 2, np.array([2.0 * w[0]])

    def con(w):
        return np.array([theta - w[0]]), sp.csr_matrix(np.array([[-1.0]]))

    p = nlp.NlpProblem(n=1, cost=cost, constraints=con,
                       row_eq=np.array([False]))
    sol = nlp.solve(p, np.array([0.0]))
    assert sol.status == nlp.OPTIMAL
    assert sol.w[0] == pytest.approx(3.0, abs=1e-6)
    assert sol.duals[0] == pytest.approx(6.0, abs=5e-6)


def test_rosenbrock_unconstrained():
    def cost(w):
        x, y = w
        val = (1 - x) ** 2 + 100 * (y - x * x) ** 2
        grad = np.array([-2 * (1 - x) - 400 * x * (y - x * x),
                         200 * (y - x * x)])
        return val, grad

    p = nlp.NlpProblem(n=2, cost=cost)
    sol = nlp.solve(p, np.array([-1.2, 1.0]))
    assert sol.status == nlp.OPTIMAL
    assert sol.w == pytest.approx([1.0, 1.0], abs=1e-6)


def test_random_convex_qps_match_active_set_oracle():
    rng = np.random.default_rng(7)
    for trial in range(10):
        n = rng.integers(4, 50)
        A0 = rng.normal(size=(n, n))
        H = A0.T @ A0 + np.eye(n)
        g = rng.normal(size=n)
        x_feas = rng.normal(size=n)
        m_eq = int(rng.integers(0, 3))
        m_in = int(rng.integers(2, 8))
        A_eq = rng.normal(size=(m_eq, n))
        b_eq = A_eq @ x_feas
        A_in = rng.normal(size=(m_in, n))
        b_in = A_in @ x_feas + rng.uniform(0.1, 1.0, size=m_in)

        x_orc, lam_orc, mu_orc = dense_active_set_qp(
            H, g, A_eq, b_eq, A_in, b_in, x0=x_feas)

        A = np.vstack([A_eq, A_in])
        b = np.concatenate([b_eq, b_in])
        row_eq = np.array([True] * m_eq + [False] * m_in)
        p = quadratic_problem(H, g, A, b, row_eq)
        sol = nlp.solve(p, x_feas)
        assert sol.status == nlp.OPTIMAL, f"trial {trial}: {sol.log_line()}"
        assert np.abs(sol.w - x_orc).max() <= 1e-8, f"trial {trial}"
        ineq_duals = sol.duals[m_eq:]
        assert ineq_duals.min() >= -1e-9
        assert np.abs(ineq_duals - mu_orc).max() <= 1e-6


def test_dual_sign_convention_on_inequalities():
    rng = np.random.default_rng(3)
    for _ in range(5):
        n = 6
        H = np.eye(n)
        g = rng.normal(size=n)
        A_in = rng.normal(size=(4, n))
        b_in = A_in @ rng.normal(size=n) + 0.5
        p = quadratic_problem(H, g, A_in, b_in, [False] * 4)
        sol = nlp.solve(p, np.zeros(n))
        assert sol.status == nlp.OPTIMAL
        assert sol.duals.min() >= -1e-9


def test_scaling_identity():
    p = quadratic_problem(np.eye(2), np.array([1.0, -2.0]))
    scaled, unscale = nlp.apply_scaling(p, np.ones(2))
    w = np.array([0.3, 0.7])
    val_s, grad_s = scaled.cost(w)
    val, grad = p.cost(w)
    assert val_s == val and np.array_equal(grad_s, grad)
    w_back, duals = unscale(w, np.zeros(0))
    assert np.array_equal(w_back, w)


def test_scaling_roundtrip_bit_exact_power_of_two():
    p = quadratic_problem(np.diag([1.0, 4.0]), np.array([1.0, -2.0]))
    s = np.array([4.0, 0.25])
    scaled, unscale = nlp.apply_scaling(p, s)
    w = np.array([0.1238712, -3.912837])
    w_back, _ = unscale(w * s, np.zeros(0))
    assert np.array_equal(w_back, w)


def test_scaling_reproduces_solution_and_duals():
    rng = np.random.default_rng(11)
    n = 8
    A0 = rng.normal(size=(n, n))
    H = A0.T @ A0 + np.eye(n)
    g = rng.normal(size=n)
    A = rng.normal(size=(3, n))
    b = A @ rng.normal(size=n)
    row_eq = [True, True, False]
    p_plain = quadratic_problem(H, g, A, b, row_eq)
    sol_plain = nlp.solve(p_plain, np.zeros(n))
    p_scaled = quadratic_problem(H, g, A, b, row_eq,
                                 var_scale=np.full(n, 8.0))
    sol_scaled = nlp.solve(p_scaled, np.zeros(n))
    assert sol_scaled.status == nlp.OPTIMAL
    assert np.abs(sol_plain.w - sol_scaled.w).max() <= 1e-7
    assert np.abs(sol_plain.duals - sol_scaled.duals).max() <= 1e-5


def test_scaling_cuts_iterations_on_badly_scaled_fixture():
    # variables at scales 1 and 1e4 tied by a nonlinear row of matching
    # magnitude; matched scales must strictly reduce inner iterations.
    # (On pure QPs the exact-Newton inner solve is affine invariant, so the
    # effect only shows once the multiplier loop meets a nonlinear row.)
    S = 1e4

    def make(scaled):
        def cost(w):
            x, y = w
            val = (x - 1.0) ** 2 + (y / S - 1.0) ** 2
            return val, np.array([2 * (x - 1.0), 2 * (y / S - 1.0) / S])

        def con(w):
            x, y = w
            return (np.array([y - S * x * x]),
                    sp.csr_matrix(np.array([[-2 * S * x, 1.0]])))

        return nlp.NlpProblem(
            n=2, cost=cost, constraints=con, row_eq=np.array([True]),
            var_scale=np.array([1.0, 1 / S]) if scaled else None,
            row_scale=np.array([1 / S]) if scaled else None)

    for w0 in (np.array([0.1, 3e3]), np.array([-0.5, 8e3]), np.array([0.4, 1e3])):
        sol_raw = nlp.solve(make(False), w0)
        sol_scaled = nlp.solve(make(True), w0)
        assert sol_scaled.status == nlp.OPTIMAL
        assert sol_raw.report.iterations > sol_scaled.report.iterations


def test_check_differentiability_vacuous():
    p = quadratic_problem(np.eye(2), np.array([1.0, 1.0]))
    sol = nlp.solve(p, np.zeros(2))
    diag = nlp.check_differentiability(sol)
    assert diag.licq_ok and diag.strict_complementarity_ok


def test_check_differentiability_degenerate():
    # min x^2 s.t. x >= 0: active at x* = 0 with zero multiplier
    def cost(w):
        return w[0] ** 2, np.array([2.0 * w[0]])

    def con(w):
        return np.array([-w[0]]), sp.csr_matrix(np.array([[-1.0]]))

    p = nlp.NlpProblem(n=1, cost=cost, constraints=con,
                       row_eq=np.array([False]))
    sol = nlp.solve(p, np.array([1.0]))
    assert abs(sol.w[0]) <= 1e-6
    diag = nlp.check_differentiability(sol)
    assert not diag.strict_complementarity_ok


def test_check_differentiability_licq_violation():
    def cost(w):
        return (w[0] - 1.0) ** 2 + w[1] ** 2, np.array([2 * (w[0] - 1.0), 2 * w[1]])

    A = np.array([[1.0, 0.0], [1.0, 0.0]])  # duplicated rows

    def con(w):
        return A @ w - 0.5, sp.csr_matrix(A)

    p = nlp.NlpProblem(n=2, cost=cost, constraints=con,
                       row_eq=np.array([True, True]))
    sol = nlp.solve(p, np.zeros(2))
    diag = nlp.check_differentiability(sol)
    assert not diag.licq_ok


def test_nan_initial_guess_raises():
    p = quadratic_problem(np.eye(2), np.zeros(2))
    with pytest.raises(nlp.NlpNanError):
        nlp.solve(p, np.array([np.nan, 0.0]))


def test_bounds_respected():
    p = quadratic_problem(np.eye(2), np.array([1.0, 1.0]),
                          lb=np.array([-0.2, -np.inf]),
                          ub=np.array([np.inf, 0.1]))
    sol = nlp.solve(p, np.zeros(2))
    assert sol.status == nlp.OPTIMAL
    assert sol.w[0] == pytest.approx(-0.2, abs=1e-8)
    assert sol.w[1] == pytest.approx(-1.0, abs=1e-8)
