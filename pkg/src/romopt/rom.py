"""Reduced-order model representation.

A ROM is an embedding y = Θ_e φ_e(q) plus second-order dynamics
ÿ = Θ_d φ_d(y, ẏ) + B_y τ. Both bases mix named closed-form features
(CoM relative to the stance foot, pendulum terms) with monomials so the
weights can be initialized to exactly the linear inverted pendulum. The
embedding is defined for the left-support phase; right support reuses it
through the sagittal mirror map.
"""

import itertools
from dataclasses import dataclass, field
from types import SimpleNamespace

import numpy as np

from romopt import kernels
from romopt.model import LEFT, NQ

PARAMETERIZED = "parameterized"
FIXED_COM = "fixed-com"

EPS_HEIGHT = 1e-3

# q indices feeding the embedding monomials: pitch and the four leg joints.
# Base translation is excluded so the embedding is translation invariant.
SHAPE_COORDS = (2, 3, 4, 5, 6)


class SingularFeatureError(RuntimeError):
    """Pendulum feature evaluated at (numerically) zero height."""


def monomial_exponents(n_vars, order):
    """All exponent tuples with total degree <= order, graded lex order."""
    exps = [e for e in itertools.product(range(order + 1), repeat=n_vars)
            if sum(e) <= order]
    exps.sort(key=lambda e: (sum(e), e))
    return np.array(exps, dtype=int)


@dataclass(frozen=True)
class BasisSet:
    n_vars: int
    order: int
    pinned: tuple
    exponents: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.exponents is None:
            object.__setattr__(self, "exponents",
                               monomial_exponents(self.n_vars, self.order))

    @property
    def n_monomials(self):
        return self.exponents.shape[0]

    @property
    def n_features(self):
        return len(self.pinned) + self.n_monomials


class _MonomialTables:
    """Per-point factor tables shared by value/derivative contractions."""

    def __init__(self, E, x):
        F, m = E.shape
        self.E, self.m = E, m
        e = E.astype(float)
        pw = x[None, :] ** np.maximum(E, 0)
        pw1 = x[None, :] ** np.maximum(E - 1, 0)
        pw2 = x[None, :] ** np.maximum(E - 2, 0)
        pw3 = x[None, :] ** np.maximum(E - 3, 0)
        self.P0 = pw.T                          # (m, F)
        self.P1 = (e * pw1).T
        self.P2 = (e * (e - 1) * pw2).T
        self.P3 = (e * (e - 1) * (e - 2) * pw3).T
        # prefix/suffix products of P0 avoid division by zero factors
        self.pre = np.ones((m + 1, F))
        for j in range(m):
            self.pre[j + 1] = self.pre[j] * self.P0[j]
        self.suf = np.ones((m + 1, F))
        for j in range(m - 1, -1, -1):
            self.suf[j] = self.suf[j + 1] * self.P0[j]

    def excl1(self, i):
        return self.pre[i] * self.suf[i + 1]

    def excl(self, idx):
        mask = np.ones(self.m, dtype=bool)
        mask[list(idx)] = False
        if not mask.any():
            return np.ones(self.P0.shape[1])
        return np.prod(self.P0[mask], axis=0)

    def value(self):
        return self.pre[self.m]

    def jac(self):
        return np.stack([self.P1[j] * self.excl1(j)
                         for j in range(self.m)], axis=1)

    def hess_dot(self, w):
        """(F, m) contraction H[f, i, j] w_j of the feature Hessians."""
        m = self.m
        out = np.zeros((self.P0.shape[1], m))
        for i in range(m):
            acc = self.P2[i] * self.excl1(i) * w[i]
            for j in range(m):
                if j != i:
                    acc = acc + self.P1[i] * self.P1[j] * self.excl((i, j)) * w[j]
            out[:, i] = acc
        return out

    def third_dot_dot(self, v):
        """(F, m) contraction T[f, l, i, j] v_i v_j of third derivatives."""
        m = self.m
        F = self.P0.shape[1]
        out = np.zeros((F, m))
        for l in range(m):
            acc = np.zeros(F)
            for i in range(m):
                for j in range(m):
                    w = v[i] * v[j]
                    if w == 0.0:
                        continue
                    idx = (l, i, j)
                    kinds = {l, i, j}
                    if len(kinds) == 3:
                        term = (self.P1[l] * self.P1[i] * self.P1[j]
                                * self.excl(idx))
                    elif len(kinds) == 1:
                        term = self.P3[l] * self.excl1(l)
                    else:
                        # one repeated index, one single
                        if l == i:
                            rep, single = l, j
                        elif l == j:
                            rep, single = l, i
                        else:
                            rep, single = i, l
                        term = (self.P2[rep] * self.P1[single]
                                * self.excl((rep, single)))
                    acc = acc + term * w
            out[:, l] = acc
        return out


class EmbeddingBasis:
    """Features of q: pinned CoM-relative coordinates plus shape monomials."""

    def __init__(self, n_phi, pinned=("com_x", "com_z"), coords=SHAPE_COORDS):
        self.coords = tuple(coords)
        self.basis = BasisSet(len(self.coords), n_phi, tuple(pinned))

    @property
    def n_features(self):
        return self.basis.n_features

    def _pinned_eval(self, model, q, v, a, derivs):
        P, names = model.params, self.basis.pinned
        n_pin = len(names)
        out = SimpleNamespace(
            value=np.zeros(n_pin), jac=np.zeros((n_pin, NQ)),
            acc=None, dacc_dq=None, dacc_dv=None)
        if a is not None:
            out.acc = np.zeros(n_pin)
        if derivs:
            out.dacc_dq = np.zeros((n_pin, NQ))
            out.dacc_dv = np.zeros((n_pin, NQ))
        com = kernels.com_pos(P, q)
        foot = kernels.foot_pos_l(P, q)
        Jc = kernels.com_jac(P, q) - kernels.foot_jac_l(P, q)
        rel = com - foot
        if a is not None or derivs:
            Jd = kernels.com_jacdot(P, q, v) - kernels.foot_jacdot_l(P, q, v)
        for k, name in enumerate(names):
            if name == "zero":
                continue
            row = {"com_x": 0, "com_z": 1}[name]
            out.value[k] = rel[row]
            out.jac[k] = Jc[row]
            if a is not None:
                out.acc[k] = Jc[row] @ a + Jd[row] @ v
            if derivs:
                dacc = (kernels.dcom_acc_dq(P, q, v, a)
                        - kernels.dfoot_acc_dq_l(P, q, v, a))
                out.dacc_dq[k] = dacc[row]
                out.dacc_dv[k] = 2.0 * Jd[row]
        return out

    def eval(self, model, q, v=None, a=None, derivs=False):
        """Feature values, Jacobians and along-trajectory accelerations.

        acc[f] = dφ_f/dq·a + vᵀ(d²φ_f/dq²)v; derivs adds its q and v
        partials, everything padded to full 7-wide coordinate blocks.
        """
        q = np.asarray(q, dtype=float)
        pin = self._pinned_eval(model, q, v, a, derivs)
        x = q[list(self.coords)]
        tab = _MonomialTables(self.basis.exponents, x)
        F = self.basis.n_monomials
        value = np.concatenate([pin.value, tab.value()])
        jac = np.zeros((self.n_features, NQ))
        jac[:len(pin.value)] = pin.jac
        jac[len(pin.value):, list(self.coords)] = tab.jac()
        out = SimpleNamespace(value=value, jac=jac)
        if a is not None:
            vx, ax = v[list(self.coords)], a[list(self.coords)]
            hv = tab.hess_dot(vx)
            acc_mono = tab.jac() @ ax + hv @ vx
            out.acc = np.concatenate([pin.acc, acc_mono])
            if derivs:
                dacc_dq = np.zeros((self.n_features, NQ))
                dacc_dq[:len(pin.value)] = pin.dacc_dq
                dacc_dq[len(pin.value):, list(self.coords)] = (
                    tab.hess_dot(ax) + tab.third_dot_dot(vx))
                dacc_dv = np.zeros((self.n_features, NQ))
                dacc_dv[:len(pin.value)] = pin.dacc_dv
                dacc_dv[len(pin.value):, list(self.coords)] = 2.0 * hv
                out.dacc_dq = dacc_dq
                out.dacc_dv = dacc_dv
        return out


class DynamicsBasis:
    """Features of z = (y, ẏ): pendulum terms plus monomials."""

    def __init__(self, n_y, n_phi, pinned):
        self.n_y = n_y
        self.basis = BasisSet(2 * n_y, n_phi, tuple(pinned))

    @property
    def n_features(self):
        return self.basis.n_features

    def eval(self, z, c_g, jac=False):
        z = np.asarray(z, dtype=float)
        n_pin = len(self.basis.pinned)
        h = z[self.n_y - 1]
        if n_pin and abs(h) <= EPS_HEIGHT:
            raise SingularFeatureError(
                f"pendulum feature singular: height {h:.2e} <= {EPS_HEIGHT}")
        tab = _MonomialTables(self.basis.exponents, z)
        value = np.empty(self.n_features)
        J = np.zeros((self.n_features, 2 * self.n_y)) if jac else None
        for k, name in enumerate(self.basis.pinned):
            idx = {"lip_x": 0, "lip_y": 1}[name]
            value[k] = c_g * z[idx] / h
            if jac:
                J[k, idx] = c_g / h
                J[k, self.n_y - 1] = -c_g * z[idx] / h**2
        value[n_pin:] = tab.value()
        if jac:
            J[n_pin:] = tab.jac()
        return SimpleNamespace(value=value, jac=J)


@dataclass
class RomSpec:
    n_y: int
    n_tau: int
    embed_basis: EmbeddingBasis
    dyn_basis: DynamicsBasis
    theta_e: np.ndarray       # (n_y, n_e)
    theta_d: np.ndarray       # (n_y, n_d)
    B_y: np.ndarray           # (n_y, n_tau)
    embed_mode: str = PARAMETERIZED
    n_phi: int = 2
    gravity: float = 9.81

    def __post_init__(self):
        self.theta_e = np.asarray(self.theta_e, dtype=float).reshape(
            self.n_y, self.embed_basis.n_features)
        self.theta_d = np.asarray(self.theta_d, dtype=float).reshape(
            self.n_y, self.dyn_basis.n_features)
        self.B_y = np.asarray(self.B_y, dtype=float).reshape(self.n_y, self.n_tau)

    @property
    def n_e(self):
        return self.embed_basis.n_features

    @property
    def n_d(self):
        return self.dyn_basis.n_features

    @property
    def theta(self):
        return np.concatenate([self.theta_e.ravel(), self.theta_d.ravel()])

    @property
    def n_free(self):
        if self.embed_mode == FIXED_COM:
            return self.n_y * self.n_d
        return self.n_y * (self.n_e + self.n_d)

    @property
    def free_theta(self):
        if self.embed_mode == FIXED_COM:
            return self.theta_d.ravel().copy()
        return self.theta

    def with_free_theta(self, vec):
        vec = np.asarray(vec, dtype=float)
        if vec.shape != (self.n_free,):
            raise ValueError(f"expected {self.n_free} parameters")
        spec = RomSpec(self.n_y, self.n_tau, self.embed_basis, self.dyn_basis,
                       self.theta_e.copy(), self.theta_d.copy(), self.B_y.copy(),
                       self.embed_mode, self.n_phi, self.gravity)
        if self.embed_mode == FIXED_COM:
            spec.theta_d = vec.reshape(self.n_y, self.n_d).copy()
        else:
            ne = self.n_y * self.n_e
            spec.theta_e = vec[:ne].reshape(self.n_y, self.n_e).copy()
            spec.theta_d = vec[ne:].reshape(self.n_y, self.n_d).copy()
        return spec


_GRAVITY_DEFAULT = 9.81


def init_lip(model, n_y=2, n_phi=2, n_tau=0, embed_mode=PARAMETERIZED):
    """ROM initialized exactly to the linear inverted pendulum.

    Pinned features carry the LIP terms with unit weight and every monomial
    weight starts at zero, so the initial model reproduces the pendulum
    dynamics bit-for-bit.
    """
    if n_y == 2:
        pinned_e = ("com_x", "com_z")
        pinned_d = ("lip_x",)
    elif n_y == 3:
        pinned_e = ("com_x", "zero", "com_z")
        pinned_d = ("lip_x", "lip_y")
    else:
        raise ValueError("n_y must be 2 or 3")
    embed = EmbeddingBasis(n_phi, pinned_e)
    dyn = DynamicsBasis(n_y, n_phi, pinned_d)
    theta_e = np.zeros((n_y, embed.n_features))
    for k in range(n_y):
        theta_e[k, k] = 1.0
    theta_d = np.zeros((n_y, dyn.n_features))
    for k, _ in enumerate(pinned_d):
        theta_d[k, k] = 1.0
    B_y = np.zeros((n_y, n_tau))
    c_g = _GRAVITY_DEFAULT if model is None else model.gravity
    return RomSpec(n_y, n_tau, embed, dyn, theta_e, theta_d, B_y,
                   embed_mode, n_phi, c_g)


def eval_embedding(rom, model, q, v=None, a=None, derivs=False):
    """Embedding y = Θ_e φ_e(q) with Jacobian and optional acceleration.

    Returns a namespace with y, J (= ∂r/∂q), and when (v, a) are given,
    ydot, yddot plus the partials the transcription needs.
    """
    feats = rom.embed_basis.eval(model, q, v, a, derivs)
    Te = rom.theta_e
    out = SimpleNamespace(y=Te @ feats.value, J=Te @ feats.jac, feats=feats)
    if v is not None:
        out.ydot = out.J @ np.asarray(v, dtype=float)
    if a is not None:
        out.yddot = Te @ feats.acc
        if derivs:
            out.dyddot_dq = Te @ feats.dacc_dq
            out.dyddot_dv = Te @ feats.dacc_dv
    return out


def eval_dynamics(rom, y, ydot, tau=None):
    """Reduced dynamics ÿ = Θ_d φ_d(y, ẏ) + B_y τ."""
    z = np.concatenate([np.atleast_1d(y), np.atleast_1d(ydot)])
    feats = rom.dyn_basis.eval(z, _gravity(rom))
    acc = rom.theta_d @ feats.value
    if rom.n_tau:
        acc = acc + rom.B_y @ np.asarray(tau, dtype=float)
    return acc


def _gravity(rom):
    return rom.gravity


@dataclass(frozen=True)
class MirrorMap:
    matrix: np.ndarray

    def __post_init__(self):
        R = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", R)
        if not np.array_equal(R @ R, np.eye(R.shape[0])):
            raise ValueError("mirror map must be an involution")
        if not set(np.unique(R)).issubset({-1.0, 0.0, 1.0}):
            raise ValueError("mirror map entries must be 0 or ±1")


def planar_mirror_map():
    """Swap left/right leg coordinates; base row untouched."""
    R = np.eye(NQ)
    R[3:5, 3:5] = 0.0
    R[5:7, 5:7] = 0.0
    R[3, 5] = R[4, 6] = R[5, 3] = R[6, 4] = 1.0
    return MirrorMap(R)


def mirror_configuration(mm, q):
    return mm.matrix @ np.asarray(q, dtype=float)


def mirrored_embedding(rom, mm, model, q, v=None, a=None):
    """Embedding of the mirrored configuration: y_m = r(M(q)).

    J_m = J(q_m) ∂M/∂q and ÿ_m = J̇(q_m, v_m) q̇_m + J_m v̇, with the
    original-model Jacobian evaluated at the mirrored position.
    """
    R = mm.matrix
    qm = R @ np.asarray(q, dtype=float)
    vm = None if v is None else R @ np.asarray(v, dtype=float)
    am = None if a is None else R @ np.asarray(a, dtype=float)
    inner = eval_embedding(rom, model, qm, vm, am)
    out = SimpleNamespace(y=inner.y, J=inner.J @ R)
    if v is not None:
        out.ydot = out.J @ v
    if a is not None:
        out.yddot = inner.yddot
    return out


def gc_theta_jacobian(rom, model, q, v, a, tau=None):
    """∂g_c/∂θ over the free parameters, one row per ROM coordinate.

    g_c = Θ_e φ̈_e − Θ_d φ_d(y, ẏ) − B_y τ; the embedding weights enter
    every row through (y, ẏ) inside φ_d, the dynamics weights only their
    own row.
    """
    feats = rom.embed_basis.eval(model, q, v, a)
    y = rom.theta_e @ feats.value
    Jv = feats.jac @ v
    ydot = rom.theta_e @ Jv
    z = np.concatenate([y, ydot])
    dfeats = rom.dyn_basis.eval(z, _gravity(rom), jac=True)
    n_y, n_e, n_d = rom.n_y, rom.n_e, rom.n_d
    Gy = rom.theta_d @ dfeats.jac[:, :n_y]          # (n_y, n_y)
    Gyd = rom.theta_d @ dfeats.jac[:, n_y:]
    out = np.zeros((n_y, rom.n_free))
    d_block_off = 0
    if rom.embed_mode != FIXED_COM:
        for kp in range(n_y):
            cols = slice(kp * n_e, (kp + 1) * n_e)
            block = -np.outer(Gy[:, kp], feats.value) - np.outer(Gyd[:, kp], Jv)
            block[kp] += feats.acc
            out[:, cols] = block
        d_block_off = n_y * n_e
    for kp in range(n_y):
        cols = slice(d_block_off + kp * n_d, d_block_off + (kp + 1) * n_d)
        out[kp, cols] = -dfeats.value
    return out


def save_checkpoint(rom, path):
    """Plain-text θ checkpoint; round-trips weights bit-exactly."""
    with open(path, "w") as fh:
        fh.write(f"{rom.n_y} {rom.n_e} {rom.n_d} {rom.n_tau} "
                 f"{rom.n_phi} {rom.embed_mode}\n")
        for block in (rom.theta_e, rom.theta_d, rom.B_y):
            if block.size == 0:
                continue
            for row in block.reshape(block.shape[0], -1):
                fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")


def load_checkpoint(path, model=None):
    with open(path) as fh:
        tokens = fh.read().split("\n")
    head = tokens[0].split()
    if len(head) != 6:
        raise ValueError(f"malformed checkpoint header: {tokens[0]!r}")
    n_y, n_e, n_d, n_tau, n_phi = (int(t) for t in head[:5])
    embed_mode = head[5]
    if embed_mode not in (PARAMETERIZED, FIXED_COM):
        raise ValueError(f"unknown embed mode {embed_mode!r}")
    spec = init_lip(model, n_y=n_y, n_phi=n_phi, n_tau=n_tau,
                    embed_mode=embed_mode)
    if spec.n_e != n_e or spec.n_d != n_d:
        raise ValueError("checkpoint feature counts do not match basis")
    values = []
    for line in tokens[1:]:
        if line.strip():
            values.extend(float(t) for t in line.split())
    values = np.array(values)
    want = n_y * (n_e + n_d + n_tau)
    if values.size != want:
        raise ValueError(f"checkpoint has {values.size} weights, expected {want}")
    spec.theta_e = values[:n_y * n_e].reshape(n_y, n_e)
    spec.theta_d = values[n_y * n_e:n_y * (n_e + n_d)].reshape(n_y, n_d)
    spec.B_y = values[n_y * (n_e + n_d):].reshape(n_y, n_tau)
    return spec
