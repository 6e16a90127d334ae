# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dynamics kernels (generated Cython source).

Generated by tools/gen_dynamics.py -- do not edit by hand.

Planar five-link biped: q = [base_x, base_z, torso_pitch, left_hip,
left_knee, right_hip, right_knee]; parameters packed per PARAM_ORDER.
"""

from libc.math cimport cos, sin

import numpy as np

IMPL = "cython"
PARAM_ORDER = ('torso_length', 'thigh_length', 'shank_length', 'torso_com', 'thigh_com', 'shank_com', 'torso_mass', 'thigh_mass', 'shank_mass', 'torso_inertia', 'thigh_inertia', 'shank_inertia', 'gravity', 'hip_damping', 'knee_damping', 'foot_offset')
N_Q = 7


def mass_matrix(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = p6 + 2*p7 + 2*p8
    cdef double t1 = cos(q2)
    cdef double t2 = p3*p6
    cdef double t3 = q2 + q3
    cdef double t4 = cos(t3)
    cdef double t5 = p4*p7
    cdef double t6 = p1*t4
    cdef double t7 = q4 + t3
    cdef double t8 = cos(t7)
    cdef double t9 = p5*t8
    cdef double t10 = 2*t6 + 2*t9
    cdef double t11 = p8/2
    cdef double t12 = t10*t11 + t4*t5
    cdef double t13 = q2 + q5
    cdef double t14 = cos(t13)
    cdef double t15 = p1*t14
    cdef double t16 = q6 + t13
    cdef double t17 = cos(t16)
    cdef double t18 = p5*t17
    cdef double t19 = 2*t15 + 2*t18
    cdef double t20 = t11*t19 + t14*t5
    cdef double t21 = -t1*t2 + t12 + t20
    cdef double t22 = p8*t9
    cdef double t23 = p8*t18
    cdef double t24 = sin(q2)
    cdef double t25 = sin(t3)
    cdef double t26 = p1*t25
    cdef double t27 = sin(t7)
    cdef double t28 = p5*t27
    cdef double t29 = 2*t26 + 2*t28
    cdef double t30 = t11*t29 + t25*t5
    cdef double t31 = sin(t13)
    cdef double t32 = p1*t31
    cdef double t33 = sin(t16)
    cdef double t34 = p5*t33
    cdef double t35 = 2*t32 + 2*t34
    cdef double t36 = t11*t35 + t31*t5
    cdef double t37 = -t2*t24 + t30 + t36
    cdef double t38 = p8*t28
    cdef double t39 = p8*t34
    cdef double t40 = 2*p3**2
    cdef double t41 = 2*p4**2
    cdef double t42 = p7/2
    cdef double t43 = t11*(t10*(t6 + t9) + t29*(t26 + t28)) + t42*(t25**2*t41 + t4**2*t41)
    cdef double t44 = t11*(t19*(t15 + t18) + t35*(t32 + t34)) + t42*(t14**2*t41 + t31**2*t41)
    cdef double t45 = p10 + p11
    cdef double t46 = t43 + t45
    cdef double t47 = p11 + t11*(t10*t9 + t28*t29)
    cdef double t48 = t44 + t45
    cdef double t49 = p11 + t11*(t18*t19 + t34*t35)
    cdef double t50 = 2*p5**2
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = t0
    o[0, 1] = 0
    o[0, 2] = t21
    o[0, 3] = t12
    o[0, 4] = t22
    o[0, 5] = t20
    o[0, 6] = t23
    o[1, 0] = 0
    o[1, 1] = t0
    o[1, 2] = t37
    o[1, 3] = t30
    o[1, 4] = t38
    o[1, 5] = t36
    o[1, 6] = t39
    o[2, 0] = t21
    o[2, 1] = t37
    o[2, 2] = 2*p10 + 2*p11 + p6*(t1**2*t40 + t24**2*t40)/2 + p9 + t43 + t44
    o[2, 3] = t46
    o[2, 4] = t47
    o[2, 5] = t48
    o[2, 6] = t49
    o[3, 0] = t12
    o[3, 1] = t30
    o[3, 2] = t46
    o[3, 3] = t46
    o[3, 4] = t47
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = t22
    o[4, 1] = t38
    o[4, 2] = t47
    o[4, 3] = t47
    o[4, 4] = p11 + t11*(t27**2*t50 + t50*t8**2)
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = t20
    o[5, 1] = t36
    o[5, 2] = t48
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = t48
    o[5, 6] = t49
    o[6, 0] = t23
    o[6, 1] = t39
    o[6, 2] = t49
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = t49
    o[6, 6] = p11 + t11*(t17**2*t50 + t33**2*t50)
    return out


def bias(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    cdef double t2 = p5*sin(t1)
    cdef double t3 = p8*t2
    cdef double t4 = t2*v4
    cdef double t5 = p8*t4
    cdef double t6 = -t3*v2 - t3*v3 - t5
    cdef double t7 = q2 + q5
    cdef double t8 = q6 + t7
    cdef double t9 = p5*sin(t8)
    cdef double t10 = p8*t9
    cdef double t11 = t9*v6
    cdef double t12 = p8*t11
    cdef double t13 = -t10*v2 - t10*v5 - t12
    cdef double t14 = sin(t0)
    cdef double t15 = p4*p7
    cdef double t16 = t14*t15
    cdef double t17 = p1*t14
    cdef double t18 = 2*t2
    cdef double t19 = 2*t17 + t18
    cdef double t20 = -t19
    cdef double t21 = p8*t20/2 - t16
    cdef double t22 = t21*v3 - t5
    cdef double t23 = t21*v2 + t22
    cdef double t24 = sin(t7)
    cdef double t25 = t15*t24
    cdef double t26 = p1*t24
    cdef double t27 = 2*t9
    cdef double t28 = 2*t26 + t27
    cdef double t29 = -t28
    cdef double t30 = p8*t29/2 - t25
    cdef double t31 = -t12 + t30*v5
    cdef double t32 = t30*v2 + t31
    cdef double t33 = sin(q2)
    cdef double t34 = p3*p6
    cdef double t35 = p8/2
    cdef double t36 = t22 + t31 + v2*(-t16 + t20*t35 - t25 + t29*t35 + t33*t34)
    cdef double t37 = 2*p12
    cdef double t38 = p5*cos(t1)
    cdef double t39 = p8*t38
    cdef double t40 = t38*v4
    cdef double t41 = p8*t40
    cdef double t42 = t39*v2 + t39*v3 + t41
    cdef double t43 = p5*cos(t8)
    cdef double t44 = p8*t43
    cdef double t45 = t43*v6
    cdef double t46 = p8*t45
    cdef double t47 = t44*v2 + t44*v5 + t46
    cdef double t48 = cos(t0)
    cdef double t49 = p1*t48
    cdef double t50 = 2*t38
    cdef double t51 = 2*t49 + t50
    cdef double t52 = t15*t48 + t35*t51
    cdef double t53 = t41 + t52*v3
    cdef double t54 = t52*v2 + t53
    cdef double t55 = cos(t7)
    cdef double t56 = p1*t55
    cdef double t57 = 2*t43
    cdef double t58 = 2*t56 + t57
    cdef double t59 = t15*t55 + t35*t58
    cdef double t60 = t46 + t59*v5
    cdef double t61 = t59*v2 + t60
    cdef double t62 = cos(q2)
    cdef double t63 = t53 + t60 + v2*(-t34*t62 + t52 + t59)
    cdef double t64 = t38 + t49
    cdef double t65 = t17 + t2
    cdef double t66 = -t65
    cdef double t67 = t35*(t19*t64 + t20*t64 + t51*t65 + t51*t66)
    cdef double t68 = t43 + t56
    cdef double t69 = t26 + t9
    cdef double t70 = -t69
    cdef double t71 = t35*(t28*t68 + t29*t68 + t58*t69 + t58*t70)
    cdef double t72 = t19*t38
    cdef double t73 = -t2*t51 + t72
    cdef double t74 = t35*v4
    cdef double t75 = t67*v3 + t74*(-t18*t64 + t50*t65 + t73)
    cdef double t76 = t28*t43
    cdef double t77 = -t58*t9 + t76
    cdef double t78 = t35*v6
    cdef double t79 = t71*v5 + t78*(-t27*t68 + t57*t69 + t77)
    cdef double t80 = p3*v2
    cdef double t81 = t62*t80
    cdef double t82 = t67*v2 + t75
    cdef double t83 = t35*(t20*t38 + t72)
    cdef double t84 = t73*t74 + t83*v2 + t83*v3
    cdef double t85 = p4*t48
    cdef double t86 = t85*v2
    cdef double t87 = t85*v3
    cdef double t88 = p4*t14
    cdef double t89 = t88*v2
    cdef double t90 = t88*v3
    cdef double t91 = t4 + t65*v2 + t65*v3 + v1
    cdef double t92 = t50*v4
    cdef double t93 = t64*v2
    cdef double t94 = t64*v3
    cdef double t95 = t40 + t93 + t94 + v0
    cdef double t96 = t18*v4
    cdef double t97 = 2*t66
    cdef double t98 = p12*p8
    cdef double t99 = p12*t16 - p7*((2*t86 + 2*t87)*(t89 + t90 + v1) + (-2*t89 - 2*t90)*(t86 + t87 + v0))/2 - p8*(t91*(t92 + 2*t93 + 2*t94) + t95*(-t96 + t97*v2 + t97*v3))/2 + t65*t98 + t82*v3 + t84*v4
    cdef double t100 = t71*v2 + t79
    cdef double t101 = t35*(t29*t43 + t76)
    cdef double t102 = t101*v2 + t101*v5 + t77*t78
    cdef double t103 = p4*t55
    cdef double t104 = t103*v2
    cdef double t105 = t103*v5
    cdef double t106 = p4*t24
    cdef double t107 = t106*v2
    cdef double t108 = t106*v5
    cdef double t109 = t11 + t69*v2 + t69*v5 + v1
    cdef double t110 = t57*v6
    cdef double t111 = t68*v2
    cdef double t112 = t68*v5
    cdef double t113 = t111 + t112 + t45 + v0
    cdef double t114 = t27*v6
    cdef double t115 = 2*t70
    cdef double t116 = p12*t25 - p7*((2*t104 + 2*t105)*(t107 + t108 + v1) + (-2*t107 - 2*t108)*(t104 + t105 + v0))/2 - p8*(t109*(t110 + 2*t111 + 2*t112) + t113*(-t114 + t115*v2 + t115*v5))/2 + t100*v5 + t102*v6 + t69*t98
    out = np.empty(7)
    cdef double[::1] o = out
    o[0] = -t13*v6 - t23*v3 - t32*v5 - t36*v2 - t6*v4
    o[1] = -p12*p6 - p7*t37 - p8*t37 - t42*v4 - t47*v6 - t54*v3 - t61*v5 - t63*v2
    o[2] = p12*p3*p6*t33 + p6*(2*p3*t33*v2*(-t81 + v0) - 2*t81*(-t33*t80 + v1))/2 - t116 - t36*v0 - t63*v1 - t99 - v2*(t75 + t79 + v2*(t67 + t71))
    o[3] = -p13*v3 - t23*v0 - t54*v1 - t82*v2 - t99
    o[4] = -p14*v4 + p8*(t91*(t50*v2 + t50*v3 + t92) + t95*(-t18*v2 - t18*v3 - t96))/2 - t2*t98 - t42*v1 - t6*v0 - t84*v2 - t84*v3
    o[5] = -p13*v5 - t100*v2 - t116 - t32*v0 - t61*v1
    o[6] = -p14*v6 + p8*(t109*(t110 + t57*v2 + t57*v5) + t113*(-t114 - t27*v2 - t27*v5))/2 - t102*v2 - t102*v5 - t13*v0 - t47*v1 - t9*t98
    return out


def dbias_dq(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = cos(q2)
    cdef double t1 = p3*p6
    cdef double t2 = q2 + q3
    cdef double t3 = cos(t2)
    cdef double t4 = p4*p7
    cdef double t5 = t3*t4
    cdef double t6 = q2 + q5
    cdef double t7 = cos(t6)
    cdef double t8 = t4*t7
    cdef double t9 = p1*t3
    cdef double t10 = q4 + t2
    cdef double t11 = cos(t10)
    cdef double t12 = p5*t11
    cdef double t13 = 2*t12
    cdef double t14 = t13 + 2*t9
    cdef double t15 = -t14
    cdef double t16 = p8/2
    cdef double t17 = p1*t7
    cdef double t18 = q6 + t6
    cdef double t19 = cos(t18)
    cdef double t20 = p5*t19
    cdef double t21 = 2*t20
    cdef double t22 = 2*t17 + t21
    cdef double t23 = -t22
    cdef double t24 = p8*t15/2 - t5
    cdef double t25 = t12*v4
    cdef double t26 = p8*t25
    cdef double t27 = t24*v3 - t26
    cdef double t28 = p8*t23/2 - t8
    cdef double t29 = t20*v6
    cdef double t30 = p8*t29
    cdef double t31 = t28*v5 - t30
    cdef double t32 = t27 + t31 + v2*(t0*t1 + t15*t16 + t16*t23 - t5 - t8)
    cdef double t33 = t24*v2 + t27
    cdef double t34 = t12*v2
    cdef double t35 = t12*v3
    cdef double t36 = -p8*t34 - p8*t35 - t26
    cdef double t37 = t36*v4
    cdef double t38 = t33*v3 + t37
    cdef double t39 = t28*v2 + t31
    cdef double t40 = t20*v2
    cdef double t41 = t20*v5
    cdef double t42 = -p8*t40 - p8*t41 - t30
    cdef double t43 = t42*v6
    cdef double t44 = t39*v5 + t43
    cdef double t45 = sin(q2)
    cdef double t46 = sin(t2)
    cdef double t47 = t4*t46
    cdef double t48 = sin(t6)
    cdef double t49 = t4*t48
    cdef double t50 = p1*t46
    cdef double t51 = sin(t10)
    cdef double t52 = p5*t51
    cdef double t53 = 2*t52
    cdef double t54 = 2*t50 + t53
    cdef double t55 = -t54
    cdef double t56 = p1*t48
    cdef double t57 = sin(t18)
    cdef double t58 = p5*t57
    cdef double t59 = 2*t58
    cdef double t60 = 2*t56 + t59
    cdef double t61 = -t60
    cdef double t62 = p8*t55/2 - t47
    cdef double t63 = t52*v4
    cdef double t64 = p8*t63
    cdef double t65 = t62*v3 - t64
    cdef double t66 = p8*t61/2 - t49
    cdef double t67 = t58*v6
    cdef double t68 = p8*t67
    cdef double t69 = t66*v5 - t68
    cdef double t70 = t65 + t69 + v2*(t1*t45 + t16*t55 + t16*t61 - t47 - t49)
    cdef double t71 = t62*v2 + t65
    cdef double t72 = t52*v2
    cdef double t73 = t52*v3
    cdef double t74 = -p8*t72 - p8*t73 - t64
    cdef double t75 = t74*v4
    cdef double t76 = t71*v3 + t75
    cdef double t77 = t66*v2 + t69
    cdef double t78 = t58*v2
    cdef double t79 = t58*v5
    cdef double t80 = -p8*t78 - p8*t79 - t68
    cdef double t81 = t80*v6
    cdef double t82 = t77*v5 + t81
    cdef double t83 = t50 + t52
    cdef double t84 = t12 + t9
    cdef double t85 = -t83
    cdef double t86 = -t84
    cdef double t87 = t16*(2*t14*t84 + t14*t86 + t15*t84 + t54*t85 + t55*t83 + 2*t55*t85)
    cdef double t88 = t56 + t58
    cdef double t89 = t17 + t20
    cdef double t90 = -t88
    cdef double t91 = -t89
    cdef double t92 = t16*(2*t22*t89 + t22*t91 + t23*t89 + t60*t90 + t61*t88 + 2*t61*t90)
    cdef double t93 = t53*t83
    cdef double t94 = t52*t54
    cdef double t95 = t52*t55 + t94
    cdef double t96 = -t53*t85 - t93 - t95
    cdef double t97 = t16*v4
    cdef double t98 = t87*v3 + t96*t97
    cdef double t99 = t59*t88
    cdef double t100 = t58*t60
    cdef double t101 = t100 + t58*t61
    cdef double t102 = -t101 - t59*t90 - t99
    cdef double t103 = t16*v6
    cdef double t104 = t102*t103 + t92*v5
    cdef double t105 = 2*p3**2*v2**2
    cdef double t106 = p3*v2
    cdef double t107 = t106*t45
    cdef double t108 = t0*t106
    cdef double t109 = t87*v2 + t98
    cdef double t110 = -t95
    cdef double t111 = t12*t14
    cdef double t112 = -t111
    cdef double t113 = t16*(p5*t11*t15 - t112 - t95)
    cdef double t114 = t110*t97 + t113*v2 + t113*v3
    cdef double t115 = p4*t3
    cdef double t116 = t115*v2
    cdef double t117 = t115*v3
    cdef double t118 = t116 + t117
    cdef double t119 = 2*t116 + 2*t117
    cdef double t120 = p4*t46
    cdef double t121 = t120*v2
    cdef double t122 = t120*v3
    cdef double t123 = t121 + t122
    cdef double t124 = -2*t121 - 2*t122
    cdef double t125 = t84*v2
    cdef double t126 = t84*v3
    cdef double t127 = t125 + t126 + t25
    cdef double t128 = t13*v4
    cdef double t129 = 2*t125 + 2*t126 + t128
    cdef double t130 = t63 + t83*v2 + t83*v3 + v1
    cdef double t131 = t53*v4
    cdef double t132 = t85*v2
    cdef double t133 = t85*v3
    cdef double t134 = -t131 + 2*t132 + 2*t133
    cdef double t135 = t127 + v0
    cdef double t136 = 2*t86
    cdef double t137 = t132 + t133 - t63
    cdef double t138 = p12*p8
    cdef double t139 = p12*t5 - p7*(t118*t119 - t119*(t118 + v0) - t123*t124 + t124*(t123 + v1))/2 - p8*(t127*t129 + t130*t134 + t134*t137 + t135*(-t128 + t136*v2 + t136*v3))/2 + t109*v3 + t114*v4 + t138*t84
    cdef double t140 = t104 + t92*v2
    cdef double t141 = -t101
    cdef double t142 = t20*t22
    cdef double t143 = -t142
    cdef double t144 = t16*(p5*t19*t23 - t101 - t143)
    cdef double t145 = t103*t141 + t144*v2 + t144*v5
    cdef double t146 = p4*t7
    cdef double t147 = t146*v2
    cdef double t148 = t146*v5
    cdef double t149 = t147 + t148
    cdef double t150 = 2*t147 + 2*t148
    cdef double t151 = p4*t48
    cdef double t152 = t151*v2
    cdef double t153 = t151*v5
    cdef double t154 = t152 + t153
    cdef double t155 = -2*t152 - 2*t153
    cdef double t156 = t89*v2
    cdef double t157 = t89*v5
    cdef double t158 = t156 + t157 + t29
    cdef double t159 = t21*v6
    cdef double t160 = 2*t156 + 2*t157 + t159
    cdef double t161 = t67 + t88*v2 + t88*v5 + v1
    cdef double t162 = t59*v6
    cdef double t163 = t90*v2
    cdef double t164 = t90*v5
    cdef double t165 = -t162 + 2*t163 + 2*t164
    cdef double t166 = t158 + v0
    cdef double t167 = 2*t91
    cdef double t168 = t163 + t164 - t67
    cdef double t169 = p12*t8 - p7*(t149*t150 - t150*(t149 + v0) - t154*t155 + t155*(t154 + v1))/2 - p8*(t158*t160 + t161*t165 + t165*t168 + t166*(-t159 + t167*v2 + t167*v5))/2 + t138*t89 + t140*v5 + t145*v6
    cdef double t170 = -t109*v2 - t139 - t33*v0 - t71*v1
    cdef double t171 = t16*t96
    cdef double t172 = p5**2
    cdef double t173 = t51**2
    cdef double t174 = t11**2
    cdef double t175 = t171*v2 + t171*v3 + t97*(-t111 - t13*t84 + 4*t172*t173 + 4*t172*t174 - t93 - t94)
    cdef double t176 = t110*t16
    cdef double t177 = 2*t172
    cdef double t178 = t176*v2 + t176*v3 + t97*(t112 + t173*t177 + t174*t177 - t94)
    cdef double t179 = t25 + t34 + t35
    cdef double t180 = -t63 - t72 - t73
    cdef double t181 = t128 + t13*v2 + t13*v3
    cdef double t182 = -t131 - t53*v2 - t53*v3
    cdef double t183 = t130*t182 - t135*t181
    cdef double t184 = t12*t138 + t36*v0 + t74*v1
    cdef double t185 = p8*(t129*t179 + t134*t180 + t183)/2 - t175*v2 - t175*v3 - t178*v4 - t184
    cdef double t186 = -t140*v2 - t169 - t39*v0 - t77*v1
    cdef double t187 = t102*t16
    cdef double t188 = t57**2
    cdef double t189 = t19**2
    cdef double t190 = t103*(-t100 - t142 + 4*t172*t188 + 4*t172*t189 - t21*t89 - t99) + t187*v2 + t187*v5
    cdef double t191 = t141*t16
    cdef double t192 = t103*(-t100 + t143 + t177*t188 + t177*t189) + t191*v2 + t191*v5
    cdef double t193 = t29 + t40 + t41
    cdef double t194 = -t67 - t78 - t79
    cdef double t195 = t159 + t21*v2 + t21*v5
    cdef double t196 = -t162 - t59*v2 - t59*v5
    cdef double t197 = t161*t196 - t166*t195
    cdef double t198 = t138*t20 + t42*v0 + t80*v1
    cdef double t199 = p8*(t160*t193 + t165*t194 + t197)/2 - t190*v2 - t190*v5 - t192*v6 - t198
    cdef double t200 = p8*(t127*t181 + t137*t182 + t183)/2 - t114*v2 - t114*v3 - t184
    cdef double t201 = p8*(t158*t195 + t168*t196 + t197)/2 - t145*v2 - t145*v5 - t198
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = -t32*v2 - t38 - t44
    o[0, 3] = -t33*v2 - t38
    o[0, 4] = -t36*v2 - t36*v3 - t37
    o[0, 5] = -t39*v2 - t44
    o[0, 6] = -t42*v2 - t42*v5 - t43
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = -t70*v2 - t76 - t82
    o[1, 3] = -t71*v2 - t76
    o[1, 4] = -t74*v2 - t74*v3 - t75
    o[1, 5] = -t77*v2 - t82
    o[1, 6] = -t80*v2 - t80*v5 - t81
    o[2, 0] = 0
    o[2, 1] = 0
    o[2, 2] = p12*p3*p6*t0 + p6*(t0**2*t105 + t105*t45**2 + 2*t107*(-t107 + v1) + 2*t108*(-t108 + v0))/2 - t139 - t169 - t32*v0 - t70*v1 - v2*(t104 + t98 + v2*(t87 + t92))
    o[2, 3] = t170
    o[2, 4] = t185
    o[2, 5] = t186
    o[2, 6] = t199
    o[3, 0] = 0
    o[3, 1] = 0
    o[3, 2] = t170
    o[3, 3] = t170
    o[3, 4] = t185
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = 0
    o[4, 1] = 0
    o[4, 2] = t200
    o[4, 3] = t200
    o[4, 4] = p8*(t179*t181 + t180*t182 + t183)/2 - t178*v2 - t178*v3 - t184
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = 0
    o[5, 1] = 0
    o[5, 2] = t186
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = t186
    o[5, 6] = t199
    o[6, 0] = 0
    o[6, 1] = 0
    o[6, 2] = t201
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = t201
    o[6, 6] = p8*(t193*t195 + t194*t196 + t197)/2 - t192*v2 - t192*v5 - t198
    return out


def dbias_dv(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = sin(q2)
    cdef double t1 = p3*p6
    cdef double t2 = t0*t1
    cdef double t3 = q2 + q3
    cdef double t4 = sin(t3)
    cdef double t5 = p4*p7
    cdef double t6 = t4*t5
    cdef double t7 = q2 + q5
    cdef double t8 = sin(t7)
    cdef double t9 = t5*t8
    cdef double t10 = p1*t4
    cdef double t11 = q4 + t3
    cdef double t12 = sin(t11)
    cdef double t13 = p5*t12
    cdef double t14 = 2*t13
    cdef double t15 = 2*t10 + t14
    cdef double t16 = -t15
    cdef double t17 = p8/2
    cdef double t18 = p1*t8
    cdef double t19 = q6 + t7
    cdef double t20 = sin(t19)
    cdef double t21 = p5*t20
    cdef double t22 = 2*t21
    cdef double t23 = 2*t18 + t22
    cdef double t24 = -t23
    cdef double t25 = t16*t17 + t17*t24 + t2 - t6 - t9
    cdef double t26 = t25*v2
    cdef double t27 = p8*t16/2 - t6
    cdef double t28 = t27*v3
    cdef double t29 = -2*p5*p8*t12*v4 + 2*t28
    cdef double t30 = p8*t24/2 - t9
    cdef double t31 = t30*v5
    cdef double t32 = -2*p5*p8*t20*v6 + 2*t31
    cdef double t33 = t27*v2
    cdef double t34 = t14*v2
    cdef double t35 = t14*v3
    cdef double t36 = t14*v4
    cdef double t37 = t30*v2
    cdef double t38 = t22*v2
    cdef double t39 = t22*v5
    cdef double t40 = t22*v6
    cdef double t41 = cos(q2)
    cdef double t42 = t1*t41
    cdef double t43 = cos(t3)
    cdef double t44 = p1*t43
    cdef double t45 = p5*cos(t11)
    cdef double t46 = 2*t45
    cdef double t47 = 2*t44 + t46
    cdef double t48 = t17*t47 + t43*t5
    cdef double t49 = cos(t7)
    cdef double t50 = p1*t49
    cdef double t51 = p5*cos(t19)
    cdef double t52 = 2*t51
    cdef double t53 = 2*t50 + t52
    cdef double t54 = t17*t53 + t49*t5
    cdef double t55 = -t42 + t48 + t54
    cdef double t56 = t55*v2
    cdef double t57 = t48*v3
    cdef double t58 = t46*v4
    cdef double t59 = p8*t58
    cdef double t60 = 2*t57 + t59
    cdef double t61 = t54*v5
    cdef double t62 = t52*v6
    cdef double t63 = p8*t62
    cdef double t64 = 2*t61 + t63
    cdef double t65 = t48*v2
    cdef double t66 = t46*v2
    cdef double t67 = t46*v3
    cdef double t68 = t54*v2
    cdef double t69 = t52*v2
    cdef double t70 = t52*v5
    cdef double t71 = t13*v4
    cdef double t72 = p8*t71
    cdef double t73 = p4*t4
    cdef double t74 = t73*v2
    cdef double t75 = t73*v3
    cdef double t76 = -2*t74 - 2*t75
    cdef double t77 = p7/2
    cdef double t78 = t10 + t13
    cdef double t79 = -t78
    cdef double t80 = 2*t79
    cdef double t81 = -t36 + t80*v2 + t80*v3
    cdef double t82 = t17*t81 - t28 + t72 + t76*t77
    cdef double t83 = t21*v6
    cdef double t84 = p8*t83
    cdef double t85 = p4*t8
    cdef double t86 = t85*v2
    cdef double t87 = t85*v5
    cdef double t88 = -2*t86 - 2*t87
    cdef double t89 = t18 + t21
    cdef double t90 = -t89
    cdef double t91 = 2*t90
    cdef double t92 = -t40 + t91*v2 + t91*v5
    cdef double t93 = t17*t92 - t31 + t77*t88 + t84
    cdef double t94 = t45*v4
    cdef double t95 = p8*t94
    cdef double t96 = p4*t43
    cdef double t97 = t96*v2
    cdef double t98 = t96*v3
    cdef double t99 = 2*t97 + 2*t98
    cdef double t100 = t44 + t45
    cdef double t101 = t100*v2
    cdef double t102 = t100*v3
    cdef double t103 = 2*t101 + 2*t102 + t58
    cdef double t104 = -p7*t99/2 - p8*t103/2 + t57 + t95
    cdef double t105 = t51*v6
    cdef double t106 = p8*t105
    cdef double t107 = p4*t49
    cdef double t108 = t107*v2
    cdef double t109 = t107*v5
    cdef double t110 = 2*t108 + 2*t109
    cdef double t111 = t50 + t51
    cdef double t112 = t111*v2
    cdef double t113 = t111*v5
    cdef double t114 = 2*t112 + 2*t113 + t62
    cdef double t115 = -p7*t110/2 - p8*t114/2 + t106 + t61
    cdef double t116 = t100*t15 + t100*t16 + t47*t78 + t47*t79
    cdef double t117 = t111*t23 + t111*t24 + t53*t89 + t53*t90
    cdef double t118 = p3*v2
    cdef double t119 = t101 + t102 + t94 + v0
    cdef double t120 = t71 + t78*v2 + t78*v3 + v1
    cdef double t121 = p8*t116
    cdef double t122 = t15*t45
    cdef double t123 = t122 + t16*t45
    cdef double t124 = t17*v4
    cdef double t125 = t122 - t13*t47
    cdef double t126 = -t100*t14 + t125 + t46*t78
    cdef double t127 = -p7*(t73*t99 - 2*t73*(t97 + t98 + v0) + t76*t96 + 2*t96*(t74 + t75 + v1))/2 - p8*(t100*t81 + t103*t78 + t119*t16 + t120*t47)/2 + t121*v3 + t123*t124 + t124*t126
    cdef double t128 = t105 + t112 + t113 + v0
    cdef double t129 = t83 + t89*v2 + t89*v5 + v1
    cdef double t130 = p8*t117
    cdef double t131 = t23*t51
    cdef double t132 = t131 + t24*t51
    cdef double t133 = t17*v6
    cdef double t134 = t131 - t21*t53
    cdef double t135 = -t111*t22 + t134 + t52*t89
    cdef double t136 = -p7*(t107*t88 + 2*t107*(t86 + t87 + v1) + t110*t85 - 2*t85*(t108 + t109 + v0))/2 - p8*(t111*t92 + t114*t89 + t128*t24 + t129*t53)/2 + t130*v5 + t132*t133 + t133*t135
    cdef double t137 = t121*v2 + t127 + t27*v0 + t48*v1
    cdef double t138 = -t137
    cdef double t139 = -t119*t14 + t120*t46
    cdef double t140 = t125*v4
    cdef double t141 = t17*v2
    cdef double t142 = t17*v3
    cdef double t143 = p8*v1
    cdef double t144 = -p5*p8*t12*v0 + t143*t45
    cdef double t145 = -p8*t140 + p8*(t103*t13 + t139 + t45*t81)/2 - t123*t141 - t123*t142 - t126*t141 - t126*t142 - t144
    cdef double t146 = t130*v2 + t136 + t30*v0 + t54*v1
    cdef double t147 = -t146
    cdef double t148 = -t128*t22 + t129*t52
    cdef double t149 = t134*v6
    cdef double t150 = t17*v5
    cdef double t151 = -p5*p8*t20*v0 + t143*t51
    cdef double t152 = -p8*t149 + p8*(t114*t21 + t148 + t51*t92)/2 - t132*t141 - t132*t150 - t135*t141 - t135*t150 - t151
    cdef double t153 = p8*t13
    cdef double t154 = -t34 - t35 - t36
    cdef double t155 = p8*t45
    cdef double t156 = t58 + t66 + t67
    cdef double t157 = p8*t123
    cdef double t158 = p8*(t100*t154 + t139 + t156*t78)/2 - t140*t17 - t144 - t157*v2 - t157*v3
    cdef double t159 = p8*t21
    cdef double t160 = -t38 - t39 - t40
    cdef double t161 = p8*t51
    cdef double t162 = t62 + t69 + t70
    cdef double t163 = p8*t132
    cdef double t164 = p8*(t111*t160 + t148 + t162*t89)/2 - t149*t17 - t151 - t163*v2 - t163*v5
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = -2*t26 - t29 - t32
    o[0, 3] = -t29 - 2*t33
    o[0, 4] = p8*t34 + p8*t35 + p8*t36
    o[0, 5] = -t32 - 2*t37
    o[0, 6] = p8*t38 + p8*t39 + p8*t40
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = -2*t56 - t60 - t64
    o[1, 3] = -t60 - 2*t65
    o[1, 4] = -p8*t66 - p8*t67 - t59
    o[1, 5] = -t64 - 2*t68
    o[1, 6] = -p8*t69 - p8*t70 - t63
    o[2, 0] = t2*v2 - t26 + t82 + t93
    o[2, 1] = -t104 - t115 - t42*v2 - t56
    o[2, 2] = p6*(2*p3*t0*(-t118*t41 + v0) - 2*p3*t41*(-t0*t118 + v1))/2 - t127 - t136 - t25*v0 - t55*v1 - 2*v2*(t116*t17 + t117*t17)
    o[2, 3] = t138
    o[2, 4] = t145
    o[2, 5] = t147
    o[2, 6] = t152
    o[3, 0] = -t33 + t82
    o[3, 1] = -t104 - t65
    o[3, 2] = t138
    o[3, 3] = -p13 - t137
    o[3, 4] = t145
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = t153*v2 + t153*v3 + t154*t17 + t72
    o[4, 1] = p8*t156/2 - t155*v2 - t155*v3 - t95
    o[4, 2] = t158
    o[4, 3] = t158
    o[4, 4] = -p14 + p8*(t13*t156 + t139 + t154*t45)/2 - t125*t141 - t125*t142 - t144
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = -t37 + t93
    o[5, 1] = -t115 - t68
    o[5, 2] = t147
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = -p13 - t146
    o[5, 6] = t152
    o[6, 0] = t159*v2 + t159*v5 + t160*t17 + t84
    o[6, 1] = p8*t162/2 - t106 - t161*v2 - t161*v5
    o[6, 2] = t164
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = t164
    o[6, 6] = -p14 + p8*(t148 + t160*t51 + t162*t21)/2 - t134*t141 - t134*t150 - t151
    return out


def dMa_dq(double[:] P, double[:] q, double[:] a):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double a0 = a[0]
    cdef double a1 = a[1]
    cdef double a2 = a[2]
    cdef double a3 = a[3]
    cdef double a4 = a[4]
    cdef double a5 = a[5]
    cdef double a6 = a[6]
    cdef double t0 = p3*p6
    cdef double t1 = q2 + q3
    cdef double t2 = sin(t1)
    cdef double t3 = p4*p7
    cdef double t4 = t2*t3
    cdef double t5 = q2 + q5
    cdef double t6 = sin(t5)
    cdef double t7 = t3*t6
    cdef double t8 = p1*t2
    cdef double t9 = q4 + t1
    cdef double t10 = p5*sin(t9)
    cdef double t11 = 2*t10
    cdef double t12 = t11 + 2*t8
    cdef double t13 = -t12
    cdef double t14 = p8/2
    cdef double t15 = p1*t6
    cdef double t16 = q6 + t5
    cdef double t17 = p5*sin(t16)
    cdef double t18 = 2*t17
    cdef double t19 = 2*t15 + t18
    cdef double t20 = -t19
    cdef double t21 = t0*sin(q2) + t13*t14 + t14*t20 - t4 - t7
    cdef double t22 = p8*t13/2 - t4
    cdef double t23 = p8*t10
    cdef double t24 = a4*t23
    cdef double t25 = a3*t22 - t24
    cdef double t26 = p8*t20/2 - t7
    cdef double t27 = p8*t17
    cdef double t28 = a6*t27
    cdef double t29 = a5*t26 - t28
    cdef double t30 = cos(t1)
    cdef double t31 = p1*t30
    cdef double t32 = p5*cos(t9)
    cdef double t33 = 2*t32
    cdef double t34 = 2*t31 + t33
    cdef double t35 = t14*t34 + t3*t30
    cdef double t36 = cos(t5)
    cdef double t37 = p1*t36
    cdef double t38 = p5*cos(t16)
    cdef double t39 = 2*t38
    cdef double t40 = 2*t37 + t39
    cdef double t41 = t14*t40 + t3*t36
    cdef double t42 = -t0*cos(q2) + t35 + t41
    cdef double t43 = p8*t32
    cdef double t44 = a4*t43
    cdef double t45 = a3*t35 + t44
    cdef double t46 = p8*t38
    cdef double t47 = a6*t46
    cdef double t48 = a5*t41 + t47
    cdef double t49 = t31 + t32
    cdef double t50 = t10 + t8
    cdef double t51 = t14*(t12*t49 + t13*t49)
    cdef double t52 = t37 + t38
    cdef double t53 = t15 + t17
    cdef double t54 = t14*(t19*t52 + t20*t52)
    cdef double t55 = t12*t32
    cdef double t56 = t13*t32 + t55
    cdef double t57 = a4*t14
    cdef double t58 = a3*t51 + t56*t57
    cdef double t59 = t19*t38
    cdef double t60 = t20*t38 + t59
    cdef double t61 = a6*t14
    cdef double t62 = a5*t54 + t60*t61
    cdef double t63 = a0*t22 + a1*t35 + a2*t51 + t58
    cdef double t64 = -t10*t34 + t55
    cdef double t65 = t14*(-t11*t49 + t33*t50 + t64)
    cdef double t66 = -a0*t23 + a1*t43
    cdef double t67 = a2*t65 + a3*t65 + t57*t64 + t66
    cdef double t68 = a0*t26 + a1*t41 + a2*t54 + t62
    cdef double t69 = -t17*t40 + t59
    cdef double t70 = t14*(-t18*t52 + t39*t53 + t69)
    cdef double t71 = -a0*t27 + a1*t46
    cdef double t72 = a2*t70 + a5*t70 + t61*t69 + t71
    cdef double t73 = t14*t56
    cdef double t74 = a2*t73 + a3*t73 + t66
    cdef double t75 = t14*t64
    cdef double t76 = t14*t60
    cdef double t77 = a2*t76 + a5*t76 + t71
    cdef double t78 = t14*t69
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = a2*t21 + t25 + t29
    o[0, 3] = a2*t22 + t25
    o[0, 4] = -a2*t23 - a3*t23 - t24
    o[0, 5] = a2*t26 + t29
    o[0, 6] = -a2*t27 - a5*t27 - t28
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = a2*t42 + t45 + t48
    o[1, 3] = a2*t35 + t45
    o[1, 4] = a2*t43 + a3*t43 + t44
    o[1, 5] = a2*t41 + t48
    o[1, 6] = a2*t46 + a5*t46 + t47
    o[2, 0] = 0
    o[2, 1] = 0
    o[2, 2] = a0*t21 + a1*t42 + a2*(t51 + t54) + t58 + t62
    o[2, 3] = t63
    o[2, 4] = t67
    o[2, 5] = t68
    o[2, 6] = t72
    o[3, 0] = 0
    o[3, 1] = 0
    o[3, 2] = t63
    o[3, 3] = t63
    o[3, 4] = t67
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = 0
    o[4, 1] = 0
    o[4, 2] = t74
    o[4, 3] = t74
    o[4, 4] = a2*t75 + a3*t75 + t66
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = 0
    o[5, 1] = 0
    o[5, 2] = t68
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = t68
    o[5, 6] = t72
    o[6, 0] = 0
    o[6, 1] = 0
    o[6, 2] = t77
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = t77
    o[6, 6] = a2*t78 + a5*t78 + t71
    return out


def potential_energy(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = -q1
    cdef double t1 = q2 + q3
    cdef double t2 = cos(t1)
    cdef double t3 = p12*p7
    cdef double t4 = q2 + q5
    cdef double t5 = cos(t4)
    cdef double t6 = p12*p8
    return p12*p6*(p3*cos(q2) + q1) + t3*(-p4*t2 - t0) + t3*(-p4*t5 - t0) + t6*(-p1*t2 - p5*cos(q4 + t1) - t0) + t6*(-p1*t5 - p5*cos(q6 + t4) - t0)


def gravity_force(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = 2*p12
    cdef double t1 = q2 + q3
    cdef double t2 = sin(t1)
    cdef double t3 = p12*p4*p7
    cdef double t4 = p5*sin(q4 + t1)
    cdef double t5 = p12*p8
    cdef double t6 = t2*t3 + t5*(p1*t2 + t4)
    cdef double t7 = q2 + q5
    cdef double t8 = sin(t7)
    cdef double t9 = p5*sin(q6 + t7)
    cdef double t10 = t3*t8 + t5*(p1*t8 + t9)
    out = np.empty(7)
    cdef double[::1] o = out
    o[0] = 0
    o[1] = -p12*p6 - p7*t0 - p8*t0
    o[2] = p12*p3*p6*sin(q2) - t10 - t6
    o[3] = -t6
    o[4] = -t4*t5
    o[5] = -t10
    o[6] = -t5*t9
    return out


def com_pos(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = 1/(p6 + 2*p7 + 2*p8)
    cdef double t1 = q2 + q3
    cdef double t2 = sin(t1)
    cdef double t3 = q2 + q5
    cdef double t4 = sin(t3)
    cdef double t5 = q4 + t1
    cdef double t6 = q6 + t3
    cdef double t7 = -q1
    cdef double t8 = cos(t1)
    cdef double t9 = cos(t3)
    out = np.empty(2)
    cdef double[::1] o = out
    o[0] = t0*(p6*(-p3*sin(q2) + q0) + p7*(p4*t2 + q0) + p7*(p4*t4 + q0) + p8*(p1*t2 + p5*sin(t5) + q0) + p8*(p1*t4 + p5*sin(t6) + q0))
    o[1] = t0*(p6*(p3*cos(q2) + q1) + p7*(-p4*t8 - t7) + p7*(-p4*t9 - t7) + p8*(-p1*t8 - p5*cos(t5) - t7) + p8*(-p1*t9 - p5*cos(t6) - t7))
    return out


def com_jac(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = 1/(p6 + 2*p7 + 2*p8)
    cdef double t1 = p3*p6
    cdef double t2 = q2 + q3
    cdef double t3 = cos(t2)
    cdef double t4 = p4*p7
    cdef double t5 = q4 + t2
    cdef double t6 = p5*cos(t5)
    cdef double t7 = p8*(p1*t3 + t6) + t3*t4
    cdef double t8 = q2 + q5
    cdef double t9 = cos(t8)
    cdef double t10 = q6 + t8
    cdef double t11 = p5*cos(t10)
    cdef double t12 = p8*(p1*t9 + t11) + t4*t9
    cdef double t13 = p8*t0
    cdef double t14 = sin(t2)
    cdef double t15 = p5*sin(t5)
    cdef double t16 = p8*(p1*t14 + t15) + t14*t4
    cdef double t17 = sin(t8)
    cdef double t18 = p5*sin(t10)
    cdef double t19 = p8*(p1*t17 + t18) + t17*t4
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 1
    o[0, 1] = 0
    o[0, 2] = t0*(-t1*cos(q2) + t12 + t7)
    o[0, 3] = t0*t7
    o[0, 4] = t13*t6
    o[0, 5] = t0*t12
    o[0, 6] = t11*t13
    o[1, 0] = 0
    o[1, 1] = 1
    o[1, 2] = t0*(-t1*sin(q2) + t16 + t19)
    o[1, 3] = t0*t16
    o[1, 4] = t13*t15
    o[1, 5] = t0*t19
    o[1, 6] = t13*t18
    return out


def com_jacdot(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = p3*p6
    cdef double t1 = q2 + q3
    cdef double t2 = sin(t1)
    cdef double t3 = p4*p7
    cdef double t4 = t2*t3
    cdef double t5 = q2 + q5
    cdef double t6 = sin(t5)
    cdef double t7 = t3*t6
    cdef double t8 = q4 + t1
    cdef double t9 = p5*sin(t8)
    cdef double t10 = -p1*t2 - t9
    cdef double t11 = q6 + t5
    cdef double t12 = p5*sin(t11)
    cdef double t13 = -p1*t6 - t12
    cdef double t14 = 1/(p6 + 2*p7 + 2*p8)
    cdef double t15 = t14*v2
    cdef double t16 = p8*t10 - t4
    cdef double t17 = t14*v3
    cdef double t18 = p8*t14
    cdef double t19 = t18*v4
    cdef double t20 = t19*t9
    cdef double t21 = t16*t17 - t20
    cdef double t22 = p8*t13 - t7
    cdef double t23 = t14*v5
    cdef double t24 = t18*v6
    cdef double t25 = t12*t24
    cdef double t26 = t22*t23 - t25
    cdef double t27 = p8*t9
    cdef double t28 = p8*t12
    cdef double t29 = cos(t1)
    cdef double t30 = p5*cos(t8)
    cdef double t31 = p8*(p1*t29 + t30) + t29*t3
    cdef double t32 = cos(t5)
    cdef double t33 = p5*cos(t11)
    cdef double t34 = p8*(p1*t32 + t33) + t3*t32
    cdef double t35 = t19*t30
    cdef double t36 = t17*t31 + t35
    cdef double t37 = t24*t33
    cdef double t38 = t23*t34 + t37
    cdef double t39 = p8*t30
    cdef double t40 = p8*t33
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t15*(p8*t10 + p8*t13 + t0*sin(q2) - t4 - t7) + t21 + t26
    o[0, 3] = t15*t16 + t21
    o[0, 4] = -t15*t27 - t17*t27 - t20
    o[0, 5] = t15*t22 + t26
    o[0, 6] = -t15*t28 - t23*t28 - t25
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t15*(-t0*cos(q2) + t31 + t34) + t36 + t38
    o[1, 3] = t15*t31 + t36
    o[1, 4] = t15*t39 + t17*t39 + t35
    o[1, 5] = t15*t34 + t38
    o[1, 6] = t15*t40 + t23*t40 + t37
    return out


def dcom_acc_dq(double[:] P, double[:] q, double[:] v, double[:] a):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double a0 = a[0]
    cdef double a1 = a[1]
    cdef double a2 = a[2]
    cdef double a3 = a[3]
    cdef double a4 = a[4]
    cdef double a5 = a[5]
    cdef double a6 = a[6]
    cdef double t0 = p3*p6
    cdef double t1 = t0*cos(q2)
    cdef double t2 = q2 + q3
    cdef double t3 = cos(t2)
    cdef double t4 = p4*p7
    cdef double t5 = t3*t4
    cdef double t6 = q2 + q5
    cdef double t7 = cos(t6)
    cdef double t8 = t4*t7
    cdef double t9 = q4 + t2
    cdef double t10 = p5*cos(t9)
    cdef double t11 = p1*t3 + t10
    cdef double t12 = -t11
    cdef double t13 = q6 + t6
    cdef double t14 = p5*cos(t13)
    cdef double t15 = p1*t7 + t14
    cdef double t16 = -t15
    cdef double t17 = 1/(p6 + 2*p7 + 2*p8)
    cdef double t18 = t17*v2
    cdef double t19 = p8*t12 - t5
    cdef double t20 = t17*v3
    cdef double t21 = p8*t17
    cdef double t22 = t21*v4
    cdef double t23 = t10*t22
    cdef double t24 = t19*t20 - t23
    cdef double t25 = p8*t16 - t8
    cdef double t26 = t17*v5
    cdef double t27 = t21*v6
    cdef double t28 = t14*t27
    cdef double t29 = t25*t26 - t28
    cdef double t30 = sin(t2)
    cdef double t31 = t30*t4
    cdef double t32 = sin(t6)
    cdef double t33 = t32*t4
    cdef double t34 = p5*sin(t9)
    cdef double t35 = -p1*t30 - t34
    cdef double t36 = p5*sin(t13)
    cdef double t37 = -p1*t32 - t36
    cdef double t38 = p8*t35 + p8*t37 + t0*sin(q2) - t31 - t33
    cdef double t39 = a2*t17
    cdef double t40 = t18*t19 + t24
    cdef double t41 = p8*t10
    cdef double t42 = -t18*t41 - t20*t41 - t23
    cdef double t43 = p8*t35 - t31
    cdef double t44 = a3*t17
    cdef double t45 = a4*t21
    cdef double t46 = t34*t45
    cdef double t47 = t40*v3 + t42*v4 + t43*t44 - t46
    cdef double t48 = t18*t25 + t29
    cdef double t49 = p8*t14
    cdef double t50 = -t18*t49 - t26*t49 - t28
    cdef double t51 = p8*t37 - t33
    cdef double t52 = a5*t17
    cdef double t53 = a6*t21
    cdef double t54 = t36*t53
    cdef double t55 = t48*v5 + t50*v6 + t51*t52 - t54
    cdef double t56 = p8*t34
    cdef double t57 = p8*t36
    cdef double t58 = t22*t34
    cdef double t59 = t20*t43 - t58
    cdef double t60 = t27*t36
    cdef double t61 = t26*t51 - t60
    cdef double t62 = p8*t11 + t5
    cdef double t63 = p8*t15 + t8
    cdef double t64 = t18*t43 + t59
    cdef double t65 = -t18*t56 - t20*t56 - t58
    cdef double t66 = t10*t45 + t65*v4
    cdef double t67 = t44*t62 + t64*v3 + t66
    cdef double t68 = t18*t51 + t61
    cdef double t69 = -t18*t57 - t26*t57 - t60
    cdef double t70 = t14*t53 + t69*v6
    cdef double t71 = t52*t63 + t68*v5 + t70
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t38*t39 + t47 + t55 + v2*(t18*(p8*t12 + p8*t16 + t1 - t5 - t8) + t24 + t29)
    o[0, 3] = t39*t43 + t40*v2 + t47
    o[0, 4] = -t39*t56 + t42*v2 + t42*v3 + t42*v4 - t44*t56 - t46
    o[0, 5] = t39*t51 + t48*v2 + t55
    o[0, 6] = -t39*t57 + t50*v2 + t50*v5 + t50*v6 - t52*t57 - t54
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t39*(-t1 + t62 + t63) + t67 + t71 + v2*(t18*t38 + t59 + t61)
    o[1, 3] = t39*t62 + t64*v2 + t67
    o[1, 4] = t39*t41 + t41*t44 + t65*v2 + t65*v3 + t66
    o[1, 5] = t39*t63 + t68*v2 + t71
    o[1, 6] = t39*t49 + t49*t52 + t69*v2 + t69*v5 + t70
    return out


def foot_pos_l(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    out = np.empty(2)
    cdef double[::1] o = out
    o[0] = p1*sin(t0) + p15*sin(t1) + q0
    o[1] = -p1*cos(t0) - p15*cos(t1) + q1
    return out


def foot_jac_l(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    cdef double t2 = p15*cos(t1)
    cdef double t3 = p1*cos(t0) + t2
    cdef double t4 = p15*sin(t1)
    cdef double t5 = p1*sin(t0) + t4
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 1
    o[0, 1] = 0
    o[0, 2] = t3
    o[0, 3] = t3
    o[0, 4] = t2
    o[0, 5] = 0
    o[0, 6] = 0
    o[1, 0] = 0
    o[1, 1] = 1
    o[1, 2] = t5
    o[1, 3] = t5
    o[1, 4] = t4
    o[1, 5] = 0
    o[1, 6] = 0
    return out


def foot_jacdot_l(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    cdef double t2 = p15*sin(t1)
    cdef double t3 = t2*v4
    cdef double t4 = -p1*sin(t0) - t2
    cdef double t5 = -t3 + t4*v2 + t4*v3
    cdef double t6 = p15*cos(t1)
    cdef double t7 = t6*v4
    cdef double t8 = p1*cos(t0) + t6
    cdef double t9 = t7 + t8*v2 + t8*v3
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t5
    o[0, 3] = t5
    o[0, 4] = -t2*v2 - t2*v3 - t3
    o[0, 5] = 0
    o[0, 6] = 0
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t9
    o[1, 3] = t9
    o[1, 4] = t6*v2 + t6*v3 + t7
    o[1, 5] = 0
    o[1, 6] = 0
    return out


def dfoot_jtlam_dq_l(double[:] P, double[:] q, double[:] lam):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double lam0 = lam[0]
    cdef double lam1 = lam[1]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    cdef double t2 = cos(t1)
    cdef double t3 = p15*sin(t1)
    cdef double t4 = lam0*(-p1*sin(t0) - t3) + lam1*(p1*cos(t0) + p15*t2)
    cdef double t5 = -lam0*t3 + lam1*p15*t2
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = 0
    o[0, 3] = 0
    o[0, 4] = 0
    o[0, 5] = 0
    o[0, 6] = 0
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = 0
    o[1, 3] = 0
    o[1, 4] = 0
    o[1, 5] = 0
    o[1, 6] = 0
    o[2, 0] = 0
    o[2, 1] = 0
    o[2, 2] = t4
    o[2, 3] = t4
    o[2, 4] = t5
    o[2, 5] = 0
    o[2, 6] = 0
    o[3, 0] = 0
    o[3, 1] = 0
    o[3, 2] = t4
    o[3, 3] = t4
    o[3, 4] = t5
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = 0
    o[4, 1] = 0
    o[4, 2] = t5
    o[4, 3] = t5
    o[4, 4] = t5
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = 0
    o[5, 1] = 0
    o[5, 2] = 0
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = 0
    o[5, 6] = 0
    o[6, 0] = 0
    o[6, 1] = 0
    o[6, 2] = 0
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = 0
    o[6, 6] = 0
    return out


def dfoot_acc_dq_l(double[:] P, double[:] q, double[:] v, double[:] a):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double a0 = a[0]
    cdef double a1 = a[1]
    cdef double a2 = a[2]
    cdef double a3 = a[3]
    cdef double a4 = a[4]
    cdef double a5 = a[5]
    cdef double a6 = a[6]
    cdef double t0 = q2 + q3
    cdef double t1 = q4 + t0
    cdef double t2 = p15*sin(t1)
    cdef double t3 = a4*t2
    cdef double t4 = -p1*sin(t0) - t2
    cdef double t5 = p15*cos(t1)
    cdef double t6 = t5*v4
    cdef double t7 = -t5*v2 - t5*v3 - t6
    cdef double t8 = p1*cos(t0) + t5
    cdef double t9 = -t8
    cdef double t10 = -t6 + t9*v2 + t9*v3
    cdef double t11 = a2*t4 + a3*t4 + t10*v2 + t10*v3 - t3 + t7*v4
    cdef double t12 = t2*v4
    cdef double t13 = -t12 + t4*v2 + t4*v3
    cdef double t14 = -t12 - t2*v2 - t2*v3
    cdef double t15 = a4*t5 + t14*v4
    cdef double t16 = a2*t8 + a3*t8 + t13*v2 + t13*v3 + t15
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t11
    o[0, 3] = t11
    o[0, 4] = -a2*t2 - a3*t2 - t3 + t7*v2 + t7*v3 + t7*v4
    o[0, 5] = 0
    o[0, 6] = 0
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t16
    o[1, 3] = t16
    o[1, 4] = a2*t5 + a3*t5 + t14*v2 + t14*v3 + t15
    o[1, 5] = 0
    o[1, 6] = 0
    return out


def foot_pos_r(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = q2 + q5
    cdef double t1 = q6 + t0
    out = np.empty(2)
    cdef double[::1] o = out
    o[0] = p1*sin(t0) + p15*sin(t1) + q0
    o[1] = -p1*cos(t0) - p15*cos(t1) + q1
    return out


def foot_jac_r(double[:] P, double[:] q):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double t0 = q2 + q5
    cdef double t1 = q6 + t0
    cdef double t2 = p15*cos(t1)
    cdef double t3 = p1*cos(t0) + t2
    cdef double t4 = p15*sin(t1)
    cdef double t5 = p1*sin(t0) + t4
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 1
    o[0, 1] = 0
    o[0, 2] = t3
    o[0, 3] = 0
    o[0, 4] = 0
    o[0, 5] = t3
    o[0, 6] = t2
    o[1, 0] = 0
    o[1, 1] = 1
    o[1, 2] = t5
    o[1, 3] = 0
    o[1, 4] = 0
    o[1, 5] = t5
    o[1, 6] = t4
    return out


def foot_jacdot_r(double[:] P, double[:] q, double[:] v):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double t0 = q2 + q5
    cdef double t1 = q6 + t0
    cdef double t2 = p15*sin(t1)
    cdef double t3 = t2*v6
    cdef double t4 = -p1*sin(t0) - t2
    cdef double t5 = -t3 + t4*v2 + t4*v5
    cdef double t6 = p15*cos(t1)
    cdef double t7 = t6*v6
    cdef double t8 = p1*cos(t0) + t6
    cdef double t9 = t7 + t8*v2 + t8*v5
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t5
    o[0, 3] = 0
    o[0, 4] = 0
    o[0, 5] = t5
    o[0, 6] = -t2*v2 - t2*v5 - t3
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t9
    o[1, 3] = 0
    o[1, 4] = 0
    o[1, 5] = t9
    o[1, 6] = t6*v2 + t6*v5 + t7
    return out


def dfoot_jtlam_dq_r(double[:] P, double[:] q, double[:] lam):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double lam0 = lam[0]
    cdef double lam1 = lam[1]
    cdef double t0 = q2 + q5
    cdef double t1 = q6 + t0
    cdef double t2 = cos(t1)
    cdef double t3 = p15*sin(t1)
    cdef double t4 = lam0*(-p1*sin(t0) - t3) + lam1*(p1*cos(t0) + p15*t2)
    cdef double t5 = -lam0*t3 + lam1*p15*t2
    out = np.empty((7, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = 0
    o[0, 3] = 0
    o[0, 4] = 0
    o[0, 5] = 0
    o[0, 6] = 0
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = 0
    o[1, 3] = 0
    o[1, 4] = 0
    o[1, 5] = 0
    o[1, 6] = 0
    o[2, 0] = 0
    o[2, 1] = 0
    o[2, 2] = t4
    o[2, 3] = 0
    o[2, 4] = 0
    o[2, 5] = t4
    o[2, 6] = t5
    o[3, 0] = 0
    o[3, 1] = 0
    o[3, 2] = 0
    o[3, 3] = 0
    o[3, 4] = 0
    o[3, 5] = 0
    o[3, 6] = 0
    o[4, 0] = 0
    o[4, 1] = 0
    o[4, 2] = 0
    o[4, 3] = 0
    o[4, 4] = 0
    o[4, 5] = 0
    o[4, 6] = 0
    o[5, 0] = 0
    o[5, 1] = 0
    o[5, 2] = t4
    o[5, 3] = 0
    o[5, 4] = 0
    o[5, 5] = t4
    o[5, 6] = t5
    o[6, 0] = 0
    o[6, 1] = 0
    o[6, 2] = t5
    o[6, 3] = 0
    o[6, 4] = 0
    o[6, 5] = t5
    o[6, 6] = t5
    return out


def dfoot_acc_dq_r(double[:] P, double[:] q, double[:] v, double[:] a):
    cdef double p0 = P[0]
    cdef double p1 = P[1]
    cdef double p2 = P[2]
    cdef double p3 = P[3]
    cdef double p4 = P[4]
    cdef double p5 = P[5]
    cdef double p6 = P[6]
    cdef double p7 = P[7]
    cdef double p8 = P[8]
    cdef double p9 = P[9]
    cdef double p10 = P[10]
    cdef double p11 = P[11]
    cdef double p12 = P[12]
    cdef double p13 = P[13]
    cdef double p14 = P[14]
    cdef double p15 = P[15]
    cdef double q0 = q[0]
    cdef double q1 = q[1]
    cdef double q2 = q[2]
    cdef double q3 = q[3]
    cdef double q4 = q[4]
    cdef double q5 = q[5]
    cdef double q6 = q[6]
    cdef double v0 = v[0]
    cdef double v1 = v[1]
    cdef double v2 = v[2]
    cdef double v3 = v[3]
    cdef double v4 = v[4]
    cdef double v5 = v[5]
    cdef double v6 = v[6]
    cdef double a0 = a[0]
    cdef double a1 = a[1]
    cdef double a2 = a[2]
    cdef double a3 = a[3]
    cdef double a4 = a[4]
    cdef double a5 = a[5]
    cdef double a6 = a[6]
    cdef double t0 = q2 + q5
    cdef double t1 = q6 + t0
    cdef double t2 = p15*sin(t1)
    cdef double t3 = a6*t2
    cdef double t4 = -p1*sin(t0) - t2
    cdef double t5 = p15*cos(t1)
    cdef double t6 = t5*v6
    cdef double t7 = -t5*v2 - t5*v5 - t6
    cdef double t8 = p1*cos(t0) + t5
    cdef double t9 = -t8
    cdef double t10 = -t6 + t9*v2 + t9*v5
    cdef double t11 = a2*t4 + a5*t4 + t10*v2 + t10*v5 - t3 + t7*v6
    cdef double t12 = t2*v6
    cdef double t13 = -t12 + t4*v2 + t4*v5
    cdef double t14 = -t12 - t2*v2 - t2*v5
    cdef double t15 = a6*t5 + t14*v6
    cdef double t16 = a2*t8 + a5*t8 + t13*v2 + t13*v5 + t15
    out = np.empty((2, 7))
    cdef double[:, ::1] o = out
    o[0, 0] = 0
    o[0, 1] = 0
    o[0, 2] = t11
    o[0, 3] = 0
    o[0, 4] = 0
    o[0, 5] = t11
    o[0, 6] = -a2*t2 - a5*t2 - t3 + t7*v2 + t7*v5 + t7*v6
    o[1, 0] = 0
    o[1, 1] = 0
    o[1, 2] = t16
    o[1, 3] = 0
    o[1, 4] = 0
    o[1, 5] = t16
    o[1, 6] = a2*t5 + a5*t5 + t14*v2 + t14*v5 + t15
    return out
