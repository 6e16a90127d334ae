"""Generate the planar five-link biped dynamics kernels.

Derives mass matrix, bias forces, contact/CoM kinematics and every first
derivative the sparse NLP needs from a symbolic Lagrangian model, then emits
two twin modules:

    src/romopt/_kernels_py.py   pure-Python fallback
    src/romopt/_kernels.pyx     Cython source for the compiled core

Both expose identical signatures; `romopt.kernels` picks one at import time.
Run from the repository root:

    python tools/gen_dynamics.py
"""

import pathlib

import sympy as sp
from sympy.printing.str import StrPrinter

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT_PY = ROOT / "src" / "romopt" / "_kernels_py.py"
OUT_PYX = ROOT / "src" / "romopt" / "_kernels.pyx"

PARAM_ORDER = (
    "torso_length",
    "thigh_length",
    "shank_length",
    "torso_com",
    "thigh_com",
    "shank_com",
    "torso_mass",
    "thigh_mass",
    "shank_mass",
    "torso_inertia",
    "thigh_inertia",
    "shank_inertia",
    "gravity",
    "hip_damping",
    "knee_damping",
    "foot_offset",
)

NQ = 7


class FloatRationalPrinter(StrPrinter):
    """Print rationals as float literals so Cython's cdivision stays safe."""

    def _print_Rational(self, expr):
        return repr(float(expr))

    def _print_Half(self, expr):
        return "0.5"


_printer = FloatRationalPrinter()


def build_symbolic_model():
    """Return dict of named expression blocks for the five-link biped.

    Generalized coordinates: base x, base z, torso pitch, left hip, left
    knee, right hip, right knee. Angles are CCW-positive in the x-z plane;
    the torso measures from +z (upright = 0), legs hang from the hip with
    zero angle pointing straight down. Hip angles are relative to the torso,
    knee angles relative to the thigh.
    """
    P = sp.symbols(f"p0:{len(PARAM_ORDER)}")
    q = sp.symbols(f"q0:{NQ}")
    v = sp.symbols(f"v0:{NQ}")
    a = sp.symbols(f"a0:{NQ}")
    lam = sp.symbols("lam0:2")

    (l_t, l_th, l_sh, c_t, c_th, c_sh,
     m_t, m_th, m_sh, I_t, I_th, I_sh, c_g, d_hip, d_knee, c_ft) = P
    xb, zb, pitch, lhip, lknee, rhip, rknee = q

    qv = sp.Matrix(q)
    vv = sp.Matrix(v)
    av = sp.Matrix(a)

    def up(angle):
        return sp.Matrix([-sp.sin(angle), sp.cos(angle)])

    def down(angle):
        return sp.Matrix([sp.sin(angle), -sp.cos(angle)])

    base = sp.Matrix([xb, zb])
    legs = {}
    for side, hip_angle, knee_angle in (("l", lhip, lknee), ("r", rhip, rknee)):
        a_thigh = pitch + hip_angle
        a_shank = a_thigh + knee_angle
        knee = base + l_th * down(a_thigh)
        legs[side] = {
            "com_thigh": base + c_th * down(a_thigh),
            "com_shank": knee + c_sh * down(a_shank),
            "foot": knee + c_ft * down(a_shank),
            "a_thigh": a_thigh,
            "a_shank": a_shank,
        }

    links = [(m_t, I_t, base + c_t * up(pitch), pitch)]
    for side in ("l", "r"):
        links.append((m_th, I_th, legs[side]["com_thigh"], legs[side]["a_thigh"]))
        links.append((m_sh, I_sh, legs[side]["com_shank"], legs[side]["a_shank"]))

    kinetic = sp.S.Zero
    potential = sp.S.Zero
    com = sp.zeros(2, 1)
    total_mass = sp.S.Zero
    for mass, inertia, pos, angle in links:
        vel = pos.jacobian(qv) * vv
        omega = (sp.Matrix([angle]).jacobian(qv) * vv)[0]
        kinetic += mass / 2 * vel.dot(vel) + inertia / 2 * omega**2
        potential += mass * c_g * pos[1]
        com += mass * pos
        total_mass += mass
    com = com / total_mass

    M = sp.hessian(kinetic, v)
    gvec = sp.Matrix([potential]).jacobian(qv).T
    dT_dq = sp.Matrix([kinetic]).jacobian(qv).T
    Mdot = sp.zeros(NQ, NQ)
    for k in range(NQ):
        Mdot += M.diff(q[k]) * v[k]
    damping = sp.Matrix([0, 0, 0,
                         -d_hip * v[3], -d_knee * v[4],
                         -d_hip * v[5], -d_knee * v[6]])
    bias = dT_dq - Mdot * vv - gvec + damping

    lamv = sp.Matrix(lam)

    def jacdot(J):
        out = sp.zeros(*J.shape)
        for k in range(NQ):
            out += J.diff(q[k]) * v[k]
        return out

    blocks = {}

    def add(name, args, expr):
        blocks[name] = (args, expr)

    args_q = [("P", P), ("q", q)]
    args_qv = args_q + [("v", v)]
    args_qa = args_q + [("a", a)]
    args_qva = args_qv + [("a", a)]
    args_qlam = args_q + [("lam", lam)]

    add("mass_matrix", args_q, M)
    add("bias", args_qv, bias)
    add("dbias_dq", args_qv, bias.jacobian(qv))
    add("dbias_dv", args_qv, bias.jacobian(vv))
    add("dMa_dq", args_qa, (M * av).jacobian(qv))
    add("potential_energy", args_q, sp.Matrix([potential]))
    add("gravity_force", args_q, -gvec)
    add("com_pos", args_q, com)
    Jcom = com.jacobian(qv)
    add("com_jac", args_q, Jcom)
    add("com_jacdot", args_qv, jacdot(Jcom))
    add("dcom_acc_dq", args_qva, (Jcom * av + jacdot(Jcom) * vv).jacobian(qv))
    for side in ("l", "r"):
        foot = legs[side]["foot"]
        J = foot.jacobian(qv)
        add(f"foot_pos_{side}", args_q, foot)
        add(f"foot_jac_{side}", args_q, J)
        add(f"foot_jacdot_{side}", args_qv, jacdot(J))
        add(f"dfoot_jtlam_dq_{side}", args_qlam, (J.T * lamv).jacobian(qv))
        add(f"dfoot_acc_dq_{side}", args_qva,
            (J * av + jacdot(J) * vv).jacobian(qv))
    return blocks


def _flatten(expr):
    if expr.shape[1] == 1:
        return [expr[i, 0] for i in range(expr.shape[0])], (expr.shape[0],)
    return [expr[i, j] for i in range(expr.shape[0])
            for j in range(expr.shape[1])], expr.shape


def render_function(name, args, expr, target):
    exprs, shape = _flatten(expr)
    scalar = name == "potential_energy"
    temps, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("t"))

    lines = []
    if target == "py":
        argnames = ", ".join(a for a, _ in args)
        lines.append(f"def {name}({argnames}):")
    else:
        argnames = ", ".join(f"double[:] {a}" for a, _ in args)
        lines.append(f"def {name}({argnames}):")
    for arg, syms in args:
        if target == "py":
            unpack = "; ".join(f"{s} = {arg}[{i}]" for i, s in enumerate(syms))
            lines.append("    " + unpack)
        else:
            lines.extend(f"    cdef double {s} = {arg}[{i}]"
                         for i, s in enumerate(syms))
    for tmp, val in temps:
        code = _printer.doprint(val)
        if target == "py":
            lines.append(f"    {tmp} = {code}")
        else:
            lines.append(f"    cdef double {tmp} = {code}")

    body = [_printer.doprint(e) for e in reduced]
    if scalar:
        lines.append(f"    return {body[0]}")
    elif target == "py":
        joined = ", ".join(body)
        lines.append(f"    out = np.array(({joined},))")
        if len(shape) == 2:
            lines.append(f"    return out.reshape({shape[0]}, {shape[1]})")
        else:
            lines.append("    return out")
    else:
        if len(shape) == 2:
            lines.append(f"    out = np.empty(({shape[0]}, {shape[1]}))")
            lines.append("    cdef double[:, ::1] o = out")
            ncol = shape[1]
            for k, code in enumerate(body):
                lines.append(f"    o[{k // ncol}, {k % ncol}] = {code}")
        else:
            lines.append(f"    out = np.empty({shape[0]})")
            lines.append("    cdef double[::1] o = out")
            for k, code in enumerate(body):
                lines.append(f"    o[{k}] = {code}")
        lines.append("    return out")
    return "\n".join(lines)


HEADER = '''"""{title}

Generated by tools/gen_dynamics.py -- do not edit by hand.

Planar five-link biped: q = [base_x, base_z, torso_pitch, left_hip,
left_knee, right_hip, right_knee]; parameters packed per PARAM_ORDER.
"""
'''


def emit(blocks, target):
    if target == "py":
        head = [
            HEADER.format(title="Pure-Python dynamics kernels (generated fallback)."),
            "from math import cos, sin",
            "",
            "import numpy as np",
        ]
    else:
        head = [
            "# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True",
            HEADER.format(title="Compiled dynamics kernels (generated Cython source)."),
            "from libc.math cimport cos, sin",
            "",
            "import numpy as np",
        ]
    head.append("")
    impl = "python" if target == "py" else "cython"
    head.append(f'IMPL = "{impl}"')
    head.append(f"PARAM_ORDER = {PARAM_ORDER!r}")
    head.append(f"N_Q = {NQ}")
    head.append("")
    parts = [render_function(name, args, expr, target)
             for name, (args, expr) in blocks.items()]
    return "\n".join(head) + "\n\n" + "\n\n\n".join(parts) + "\n"


def main():
    blocks = build_symbolic_model()
    OUT_PY.write_text(emit(blocks, "py"))
    OUT_PYX.write_text(emit(blocks, "pyx"))
    total = sum(len(_flatten(e)[0]) for _, e in blocks.values())
    print(f"wrote {OUT_PY.name} and {OUT_PYX.name}: "
          f"{len(blocks)} kernels, {total} scalar expressions")


if __name__ == "__main__":
    main()
