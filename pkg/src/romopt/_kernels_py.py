"""Pure-Python dynamics kernels (generated fallback).

Generated by tools/gen_dynamics.py -- do not edit by hand.

Planar five-link biped: q = [base_x, base_z, torso_pitch, left_hip,
left_knee, right_hip, right_knee]; parameters packed per PARAM_ORDER.
"""

from math import cos, sin

import numpy as np

IMPL = "python"
PARAM_ORDER = ('torso_length', 'thigh_length', 'shank_length', 'torso_com', 'thigh_com', 'shank_com', 'torso_mass', 'thigh_mass', 'shank_mass', 'torso_inertia', 'thigh_inertia', 'shank_inertia', 'gravity', 'hip_damping', 'knee_damping', 'foot_offset')
N_Q = 7


def mass_matrix(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = p6 + 2*p7 + 2*p8
    t1 = cos(q2)
    t2 = p3*p6
    t3 = q2 + q3
    t4 = cos(t3)
    t5 = p4*p7
    t6 = p1*t4
    t7 = q4 + t3
    t8 = cos(t7)
    t9 = p5*t8
    t10 = 2*t6 + 2*t9
    t11 = p8/2
    t12 = t10*t11 + t4*t5
    t13 = q2 + q5
    t14 = cos(t13)
    t15 = p1*t14
    t16 = q6 + t13
    t17 = cos(t16)
    t18 = p5*t17
    t19 = 2*t15 + 2*t18
    t20 = t11*t19 + t14*t5
    t21 = -t1*t2 + t12 + t20
    t22 = p8*t9
    t23 = p8*t18
    t24 = sin(q2)
    t25 = sin(t3)
    t26 = p1*t25
    t27 = sin(t7)
    t28 = p5*t27
    t29 = 2*t26 + 2*t28
    t30 = t11*t29 + t25*t5
    t31 = sin(t13)
    t32 = p1*t31
    t33 = sin(t16)
    t34 = p5*t33
    t35 = 2*t32 + 2*t34
    t36 = t11*t35 + t31*t5
    t37 = -t2*t24 + t30 + t36
    t38 = p8*t28
    t39 = p8*t34
    t40 = 2*p3**2
    t41 = 2*p4**2
    t42 = p7/2
    t43 = t11*(t10*(t6 + t9) + t29*(t26 + t28)) + t42*(t25**2*t41 + t4**2*t41)
    t44 = t11*(t19*(t15 + t18) + t35*(t32 + t34)) + t42*(t14**2*t41 + t31**2*t41)
    t45 = p10 + p11
    t46 = t43 + t45
    t47 = p11 + t11*(t10*t9 + t28*t29)
    t48 = t44 + t45
    t49 = p11 + t11*(t18*t19 + t34*t35)
    t50 = 2*p5**2
    out = np.array((t0, 0, t21, t12, t22, t20, t23, 0, t0, t37, t30, t38, t36, t39, t21, t37, 2*p10 + 2*p11 + p6*(t1**2*t40 + t24**2*t40)/2 + p9 + t43 + t44, t46, t47, t48, t49, t12, t30, t46, t46, t47, 0, 0, t22, t38, t47, t47, p11 + t11*(t27**2*t50 + t50*t8**2), 0, 0, t20, t36, t48, 0, 0, t48, t49, t23, t39, t49, 0, 0, t49, p11 + t11*(t17**2*t50 + t33**2*t50),))
    return out.reshape(7, 7)


def bias(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = q2 + q3
    t1 = q4 + t0
    t2 = p5*sin(t1)
    t3 = p8*t2
    t4 = t2*v4
    t5 = p8*t4
    t6 = -t3*v2 - t3*v3 - t5
    t7 = q2 + q5
    t8 = q6 + t7
    t9 = p5*sin(t8)
    t10 = p8*t9
    t11 = t9*v6
    t12 = p8*t11
    t13 = -t10*v2 - t10*v5 - t12
    t14 = sin(t0)
    t15 = p4*p7
    t16 = t14*t15
    t17 = p1*t14
    t18 = 2*t2
    t19 = 2*t17 + t18
    t20 = -t19
    t21 = p8*t20/2 - t16
    t22 = t21*v3 - t5
    t23 = t21*v2 + t22
    t24 = sin(t7)
    t25 = t15*t24
    t26 = p1*t24
    t27 = 2*t9
    t28 = 2*t26 + t27
    t29 = -t28
    t30 = p8*t29/2 - t25
    t31 = -t12 + t30*v5
    t32 = t30*v2 + t31
    t33 = sin(q2)
    t34 = p3*p6
    t35 = p8/2
    t36 = t22 + t31 + v2*(-t16 + t20*t35 - t25 + t29*t35 + t33*t34)
    t37 = 2*p12
    t38 = p5*cos(t1)
    t39 = p8*t38
    t40 = t38*v4
    t41 = p8*t40
    t42 = t39*v2 + t39*v3 + t41
    t43 = p5*cos(t8)
    t44 = p8*t43
    t45 = t43*v6
    t46 = p8*t45
    t47 = t44*v2 + t44*v5 + t46
    t48 = cos(t0)
    t49 = p1*t48
    t50 = 2*t38
    t51 = 2*t49 + t50
    t52 = t15*t48 + t35*t51
    t53 = t41 + t52*v3
    t54 = t52*v2 + t53
    t55 = cos(t7)
    t56 = p1*t55
    t57 = 2*t43
    t58 = 2*t56 + t57
    t59 = t15*t55 + t35*t58
    t60 = t46 + t59*v5
    t61 = t59*v2 + t60
    t62 = cos(q2)
    t63 = t53 + t60 + v2*(-t34*t62 + t52 + t59)
    t64 = t38 + t49
    t65 = t17 + t2
    t66 = -t65
    t67 = t35*(t19*t64 + t20*t64 + t51*t65 + t51*t66)
    t68 = t43 + t56
    t69 = t26 + t9
    t70 = -t69
    t71 = t35*(t28*t68 + t29*t68 + t58*t69 + t58*t70)
    t72 = t19*t38
    t73 = -t2*t51 + t72
    t74 = t35*v4
    t75 = t67*v3 + t74*(-t18*t64 + t50*t65 + t73)
    t76 = t28*t43
    t77 = -t58*t9 + t76
    t78 = t35*v6
    t79 = t71*v5 + t78*(-t27*t68 + t57*t69 + t77)
    t80 = p3*v2
    t81 = t62*t80
    t82 = t67*v2 + t75
    t83 = t35*(t20*t38 + t72)
    t84 = t73*t74 + t83*v2 + t83*v3
    t85 = p4*t48
    t86 = t85*v2
    t87 = t85*v3
    t88 = p4*t14
    t89 = t88*v2
    t90 = t88*v3
    t91 = t4 + t65*v2 + t65*v3 + v1
    t92 = t50*v4
    t93 = t64*v2
    t94 = t64*v3
    t95 = t40 + t93 + t94 + v0
    t96 = t18*v4
    t97 = 2*t66
    t98 = p12*p8
    t99 = p12*t16 - p7*((2*t86 + 2*t87)*(t89 + t90 + v1) + (-2*t89 - 2*t90)*(t86 + t87 + v0))/2 - p8*(t91*(t92 + 2*t93 + 2*t94) + t95*(-t96 + t97*v2 + t97*v3))/2 + t65*t98 + t82*v3 + t84*v4
    t100 = t71*v2 + t79
    t101 = t35*(t29*t43 + t76)
    t102 = t101*v2 + t101*v5 + t77*t78
    t103 = p4*t55
    t104 = t103*v2
    t105 = t103*v5
    t106 = p4*t24
    t107 = t106*v2
    t108 = t106*v5
    t109 = t11 + t69*v2 + t69*v5 + v1
    t110 = t57*v6
    t111 = t68*v2
    t112 = t68*v5
    t113 = t111 + t112 + t45 + v0
    t114 = t27*v6
    t115 = 2*t70
    t116 = p12*t25 - p7*((2*t104 + 2*t105)*(t107 + t108 + v1) + (-2*t107 - 2*t108)*(t104 + t105 + v0))/2 - p8*(t109*(t110 + 2*t111 + 2*t112) + t113*(-t114 + t115*v2 + t115*v5))/2 + t100*v5 + t102*v6 + t69*t98
    out = np.array((-t13*v6 - t23*v3 - t32*v5 - t36*v2 - t6*v4, -p12*p6 - p7*t37 - p8*t37 - t42*v4 - t47*v6 - t54*v3 - t61*v5 - t63*v2, p12*p3*p6*t33 + p6*(2*p3*t33*v2*(-t81 + v0) - 2*t81*(-t33*t80 + v1))/2 - t116 - t36*v0 - t63*v1 - t99 - v2*(t75 + t79 + v2*(t67 + t71)), -p13*v3 - t23*v0 - t54*v1 - t82*v2 - t99, -p14*v4 + p8*(t91*(t50*v2 + t50*v3 + t92) + t95*(-t18*v2 - t18*v3 - t96))/2 - t2*t98 - t42*v1 - t6*v0 - t84*v2 - t84*v3, -p13*v5 - t100*v2 - t116 - t32*v0 - t61*v1, -p14*v6 + p8*(t109*(t110 + t57*v2 + t57*v5) + t113*(-t114 - t27*v2 - t27*v5))/2 - t102*v2 - t102*v5 - t13*v0 - t47*v1 - t9*t98,))
    return out


def dbias_dq(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = cos(q2)
    t1 = p3*p6
    t2 = q2 + q3
    t3 = cos(t2)
    t4 = p4*p7
    t5 = t3*t4
    t6 = q2 + q5
    t7 = cos(t6)
    t8 = t4*t7
    t9 = p1*t3
    t10 = q4 + t2
    t11 = cos(t10)
    t12 = p5*t11
    t13 = 2*t12
    t14 = t13 + 2*t9
    t15 = -t14
    t16 = p8/2
    t17 = p1*t7
    t18 = q6 + t6
    t19 = cos(t18)
    t20 = p5*t19
    t21 = 2*t20
    t22 = 2*t17 + t21
    t23 = -t22
    t24 = p8*t15/2 - t5
    t25 = t12*v4
    t26 = p8*t25
    t27 = t24*v3 - t26
    t28 = p8*t23/2 - t8
    t29 = t20*v6
    t30 = p8*t29
    t31 = t28*v5 - t30
    t32 = t27 + t31 + v2*(t0*t1 + t15*t16 + t16*t23 - t5 - t8)
    t33 = t24*v2 + t27
    t34 = t12*v2
    t35 = t12*v3
    t36 = -p8*t34 - p8*t35 - t26
    t37 = t36*v4
    t38 = t33*v3 + t37
    t39 = t28*v2 + t31
    t40 = t20*v2
    t41 = t20*v5
    t42 = -p8*t40 - p8*t41 - t30
    t43 = t42*v6
    t44 = t39*v5 + t43
    t45 = sin(q2)
    t46 = sin(t2)
    t47 = t4*t46
    t48 = sin(t6)
    t49 = t4*t48
    t50 = p1*t46
    t51 = sin(t10)
    t52 = p5*t51
    t53 = 2*t52
    t54 = 2*t50 + t53
    t55 = -t54
    t56 = p1*t48
    t57 = sin(t18)
    t58 = p5*t57
    t59 = 2*t58
    t60 = 2*t56 + t59
    t61 = -t60
    t62 = p8*t55/2 - t47
    t63 = t52*v4
    t64 = p8*t63
    t65 = t62*v3 - t64
    t66 = p8*t61/2 - t49
    t67 = t58*v6
    t68 = p8*t67
    t69 = t66*v5 - t68
    t70 = t65 + t69 + v2*(t1*t45 + t16*t55 + t16*t61 - t47 - t49)
    t71 = t62*v2 + t65
    t72 = t52*v2
    t73 = t52*v3
    t74 = -p8*t72 - p8*t73 - t64
    t75 = t74*v4
    t76 = t71*v3 + t75
    t77 = t66*v2 + t69
    t78 = t58*v2
    t79 = t58*v5
    t80 = -p8*t78 - p8*t79 - t68
    t81 = t80*v6
    t82 = t77*v5 + t81
    t83 = t50 + t52
    t84 = t12 + t9
    t85 = -t83
    t86 = -t84
    t87 = t16*(2*t14*t84 + t14*t86 + t15*t84 + t54*t85 + t55*t83 + 2*t55*t85)
    t88 = t56 + t58
    t89 = t17 + t20
    t90 = -t88
    t91 = -t89
    t92 = t16*(2*t22*t89 + t22*t91 + t23*t89 + t60*t90 + t61*t88 + 2*t61*t90)
    t93 = t53*t83
    t94 = t52*t54
    t95 = t52*t55 + t94
    t96 = -t53*t85 - t93 - t95
    t97 = t16*v4
    t98 = t87*v3 + t96*t97
    t99 = t59*t88
    t100 = t58*t60
    t101 = t100 + t58*t61
    t102 = -t101 - t59*t90 - t99
    t103 = t16*v6
    t104 = t102*t103 + t92*v5
    t105 = 2*p3**2*v2**2
    t106 = p3*v2
    t107 = t106*t45
    t108 = t0*t106
    t109 = t87*v2 + t98
    t110 = -t95
    t111 = t12*t14
    t112 = -t111
    t113 = t16*(p5*t11*t15 - t112 - t95)
    t114 = t110*t97 + t113*v2 + t113*v3
    t115 = p4*t3
    t116 = t115*v2
    t117 = t115*v3
    t118 = t116 + t117
    t119 = 2*t116 + 2*t117
    t120 = p4*t46
    t121 = t120*v2
    t122 = t120*v3
    t123 = t121 + t122
    t124 = -2*t121 - 2*t122
    t125 = t84*v2
    t126 = t84*v3
    t127 = t125 + t126 + t25
    t128 = t13*v4
    t129 = 2*t125 + 2*t126 + t128
    t130 = t63 + t83*v2 + t83*v3 + v1
    t131 = t53*v4
    t132 = t85*v2
    t133 = t85*v3
    t134 = -t131 + 2*t132 + 2*t133
    t135 = t127 + v0
    t136 = 2*t86
    t137 = t132 + t133 - t63
    t138 = p12*p8
    t139 = p12*t5 - p7*(t118*t119 - t119*(t118 + v0) - t123*t124 + t124*(t123 + v1))/2 - p8*(t127*t129 + t130*t134 + t134*t137 + t135*(-t128 + t136*v2 + t136*v3))/2 + t109*v3 + t114*v4 + t138*t84
    t140 = t104 + t92*v2
    t141 = -t101
    t142 = t20*t22
    t143 = -t142
    t144 = t16*(p5*t19*t23 - t101 - t143)
    t145 = t103*t141 + t144*v2 + t144*v5
    t146 = p4*t7
    t147 = t146*v2
    t148 = t146*v5
    t149 = t147 + t148
    t150 = 2*t147 + 2*t148
    t151 = p4*t48
    t152 = t151*v2
    t153 = t151*v5
    t154 = t152 + t153
    t155 = -2*t152 - 2*t153
    t156 = t89*v2
    t157 = t89*v5
    t158 = t156 + t157 + t29
    t159 = t21*v6
    t160 = 2*t156 + 2*t157 + t159
    t161 = t67 + t88*v2 + t88*v5 + v1
    t162 = t59*v6
    t163 = t90*v2
    t164 = t90*v5
    t165 = -t162 + 2*t163 + 2*t164
    t166 = t158 + v0
    t167 = 2*t91
    t168 = t163 + t164 - t67
    t169 = p12*t8 - p7*(t149*t150 - t150*(t149 + v0) - t154*t155 + t155*(t154 + v1))/2 - p8*(t158*t160 + t161*t165 + t165*t168 + t166*(-t159 + t167*v2 + t167*v5))/2 + t138*t89 + t140*v5 + t145*v6
    t170 = -t109*v2 - t139 - t33*v0 - t71*v1
    t171 = t16*t96
    t172 = p5**2
    t173 = t51**2
    t174 = t11**2
    t175 = t171*v2 + t171*v3 + t97*(-t111 - t13*t84 + 4*t172*t173 + 4*t172*t174 - t93 - t94)
    t176 = t110*t16
    t177 = 2*t172
    t178 = t176*v2 + t176*v3 + t97*(t112 + t173*t177 + t174*t177 - t94)
    t179 = t25 + t34 + t35
    t180 = -t63 - t72 - t73
    t181 = t128 + t13*v2 + t13*v3
    t182 = -t131 - t53*v2 - t53*v3
    t183 = t130*t182 - t135*t181
    t184 = t12*t138 + t36*v0 + t74*v1
    t185 = p8*(t129*t179 + t134*t180 + t183)/2 - t175*v2 - t175*v3 - t178*v4 - t184
    t186 = -t140*v2 - t169 - t39*v0 - t77*v1
    t187 = t102*t16
    t188 = t57**2
    t189 = t19**2
    t190 = t103*(-t100 - t142 + 4*t172*t188 + 4*t172*t189 - t21*t89 - t99) + t187*v2 + t187*v5
    t191 = t141*t16
    t192 = t103*(-t100 + t143 + t177*t188 + t177*t189) + t191*v2 + t191*v5
    t193 = t29 + t40 + t41
    t194 = -t67 - t78 - t79
    t195 = t159 + t21*v2 + t21*v5
    t196 = -t162 - t59*v2 - t59*v5
    t197 = t161*t196 - t166*t195
    t198 = t138*t20 + t42*v0 + t80*v1
    t199 = p8*(t160*t193 + t165*t194 + t197)/2 - t190*v2 - t190*v5 - t192*v6 - t198
    t200 = p8*(t127*t181 + t137*t182 + t183)/2 - t114*v2 - t114*v3 - t184
    t201 = p8*(t158*t195 + t168*t196 + t197)/2 - t145*v2 - t145*v5 - t198
    out = np.array((0, 0, -t32*v2 - t38 - t44, -t33*v2 - t38, -t36*v2 - t36*v3 - t37, -t39*v2 - t44, -t42*v2 - t42*v5 - t43, 0, 0, -t70*v2 - t76 - t82, -t71*v2 - t76, -t74*v2 - t74*v3 - t75, -t77*v2 - t82, -t80*v2 - t80*v5 - t81, 0, 0, p12*p3*p6*t0 + p6*(t0**2*t105 + t105*t45**2 + 2*t107*(-t107 + v1) + 2*t108*(-t108 + v0))/2 - t139 - t169 - t32*v0 - t70*v1 - v2*(t104 + t98 + v2*(t87 + t92)), t170, t185, t186, t199, 0, 0, t170, t170, t185, 0, 0, 0, 0, t200, t200, p8*(t179*t181 + t180*t182 + t183)/2 - t178*v2 - t178*v3 - t184, 0, 0, 0, 0, t186, 0, 0, t186, t199, 0, 0, t201, 0, 0, t201, p8*(t193*t195 + t194*t196 + t197)/2 - t192*v2 - t192*v5 - t198,))
    return out.reshape(7, 7)


def dbias_dv(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = sin(q2)
    t1 = p3*p6
    t2 = t0*t1
    t3 = q2 + q3
    t4 = sin(t3)
    t5 = p4*p7
    t6 = t4*t5
    t7 = q2 + q5
    t8 = sin(t7)
    t9 = t5*t8
    t10 = p1*t4
    t11 = q4 + t3
    t12 = sin(t11)
    t13 = p5*t12
    t14 = 2*t13
    t15 = 2*t10 + t14
    t16 = -t15
    t17 = p8/2
    t18 = p1*t8
    t19 = q6 + t7
    t20 = sin(t19)
    t21 = p5*t20
    t22 = 2*t21
    t23 = 2*t18 + t22
    t24 = -t23
    t25 = t16*t17 + t17*t24 + t2 - t6 - t9
    t26 = t25*v2
    t27 = p8*t16/2 - t6
    t28 = t27*v3
    t29 = -2*p5*p8*t12*v4 + 2*t28
    t30 = p8*t24/2 - t9
    t31 = t30*v5
    t32 = -2*p5*p8*t20*v6 + 2*t31
    t33 = t27*v2
    t34 = t14*v2
    t35 = t14*v3
    t36 = t14*v4
    t37 = t30*v2
    t38 = t22*v2
    t39 = t22*v5
    t40 = t22*v6
    t41 = cos(q2)
    t42 = t1*t41
    t43 = cos(t3)
    t44 = p1*t43
    t45 = p5*cos(t11)
    t46 = 2*t45
    t47 = 2*t44 + t46
    t48 = t17*t47 + t43*t5
    t49 = cos(t7)
    t50 = p1*t49
    t51 = p5*cos(t19)
    t52 = 2*t51
    t53 = 2*t50 + t52
    t54 = t17*t53 + t49*t5
    t55 = -t42 + t48 + t54
    t56 = t55*v2
    t57 = t48*v3
    t58 = t46*v4
    t59 = p8*t58
    t60 = 2*t57 + t59
    t61 = t54*v5
    t62 = t52*v6
    t63 = p8*t62
    t64 = 2*t61 + t63
    t65 = t48*v2
    t66 = t46*v2
    t67 = t46*v3
    t68 = t54*v2
    t69 = t52*v2
    t70 = t52*v5
    t71 = t13*v4
    t72 = p8*t71
    t73 = p4*t4
    t74 = t73*v2
    t75 = t73*v3
    t76 = -2*t74 - 2*t75
    t77 = p7/2
    t78 = t10 + t13
    t79 = -t78
    t80 = 2*t79
    t81 = -t36 + t80*v2 + t80*v3
    t82 = t17*t81 - t28 + t72 + t76*t77
    t83 = t21*v6
    t84 = p8*t83
    t85 = p4*t8
    t86 = t85*v2
    t87 = t85*v5
    t88 = -2*t86 - 2*t87
    t89 = t18 + t21
    t90 = -t89
    t91 = 2*t90
    t92 = -t40 + t91*v2 + t91*v5
    t93 = t17*t92 - t31 + t77*t88 + t84
    t94 = t45*v4
    t95 = p8*t94
    t96 = p4*t43
    t97 = t96*v2
    t98 = t96*v3
    t99 = 2*t97 + 2*t98
    t100 = t44 + t45
    t101 = t100*v2
    t102 = t100*v3
    t103 = 2*t101 + 2*t102 + t58
    t104 = -p7*t99/2 - p8*t103/2 + t57 + t95
    t105 = t51*v6
    t106 = p8*t105
    t107 = p4*t49
    t108 = t107*v2
    t109 = t107*v5
    t110 = 2*t108 + 2*t109
    t111 = t50 + t51
    t112 = t111*v2
    t113 = t111*v5
    t114 = 2*t112 + 2*t113 + t62
    t115 = -p7*t110/2 - p8*t114/2 + t106 + t61
    t116 = t100*t15 + t100*t16 + t47*t78 + t47*t79
    t117 = t111*t23 + t111*t24 + t53*t89 + t53*t90
    t118 = p3*v2
    t119 = t101 + t102 + t94 + v0
    t120 = t71 + t78*v2 + t78*v3 + v1
    t121 = p8*t116
    t122 = t15*t45
    t123 = t122 + t16*t45
    t124 = t17*v4
    t125 = t122 - t13*t47
    t126 = -t100*t14 + t125 + t46*t78
    t127 = -p7*(t73*t99 - 2*t73*(t97 + t98 + v0) + t76*t96 + 2*t96*(t74 + t75 + v1))/2 - p8*(t100*t81 + t103*t78 + t119*t16 + t120*t47)/2 + t121*v3 + t123*t124 + t124*t126
    t128 = t105 + t112 + t113 + v0
    t129 = t83 + t89*v2 + t89*v5 + v1
    t130 = p8*t117
    t131 = t23*t51
    t132 = t131 + t24*t51
    t133 = t17*v6
    t134 = t131 - t21*t53
    t135 = -t111*t22 + t134 + t52*t89
    t136 = -p7*(t107*t88 + 2*t107*(t86 + t87 + v1) + t110*t85 - 2*t85*(t108 + t109 + v0))/2 - p8*(t111*t92 + t114*t89 + t128*t24 + t129*t53)/2 + t130*v5 + t132*t133 + t133*t135
    t137 = t121*v2 + t127 + t27*v0 + t48*v1
    t138 = -t137
    t139 = -t119*t14 + t120*t46
    t140 = t125*v4
    t141 = t17*v2
    t142 = t17*v3
    t143 = p8*v1
    t144 = -p5*p8*t12*v0 + t143*t45
    t145 = -p8*t140 + p8*(t103*t13 + t139 + t45*t81)/2 - t123*t141 - t123*t142 - t126*t141 - t126*t142 - t144
    t146 = t130*v2 + t136 + t30*v0 + t54*v1
    t147 = -t146
    t148 = -t128*t22 + t129*t52
    t149 = t134*v6
    t150 = t17*v5
    t151 = -p5*p8*t20*v0 + t143*t51
    t152 = -p8*t149 + p8*(t114*t21 + t148 + t51*t92)/2 - t132*t141 - t132*t150 - t135*t141 - t135*t150 - t151
    t153 = p8*t13
    t154 = -t34 - t35 - t36
    t155 = p8*t45
    t156 = t58 + t66 + t67
    t157 = p8*t123
    t158 = p8*(t100*t154 + t139 + t156*t78)/2 - t140*t17 - t144 - t157*v2 - t157*v3
    t159 = p8*t21
    t160 = -t38 - t39 - t40
    t161 = p8*t51
    t162 = t62 + t69 + t70
    t163 = p8*t132
    t164 = p8*(t111*t160 + t148 + t162*t89)/2 - t149*t17 - t151 - t163*v2 - t163*v5
    out = np.array((0, 0, -2*t26 - t29 - t32, -t29 - 2*t33, p8*t34 + p8*t35 + p8*t36, -t32 - 2*t37, p8*t38 + p8*t39 + p8*t40, 0, 0, -2*t56 - t60 - t64, -t60 - 2*t65, -p8*t66 - p8*t67 - t59, -t64 - 2*t68, -p8*t69 - p8*t70 - t63, t2*v2 - t26 + t82 + t93, -t104 - t115 - t42*v2 - t56, p6*(2*p3*t0*(-t118*t41 + v0) - 2*p3*t41*(-t0*t118 + v1))/2 - t127 - t136 - t25*v0 - t55*v1 - 2*v2*(t116*t17 + t117*t17), t138, t145, t147, t152, -t33 + t82, -t104 - t65, t138, -p13 - t137, t145, 0, 0, t153*v2 + t153*v3 + t154*t17 + t72, p8*t156/2 - t155*v2 - t155*v3 - t95, t158, t158, -p14 + p8*(t13*t156 + t139 + t154*t45)/2 - t125*t141 - t125*t142 - t144, 0, 0, -t37 + t93, -t115 - t68, t147, 0, 0, -p13 - t146, t152, t159*v2 + t159*v5 + t160*t17 + t84, p8*t162/2 - t106 - t161*v2 - t161*v5, t164, 0, 0, t164, -p14 + p8*(t148 + t160*t51 + t162*t21)/2 - t134*t141 - t134*t150 - t151,))
    return out.reshape(7, 7)


def dMa_dq(P, q, a):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    a0 = a[0]; a1 = a[1]; a2 = a[2]; a3 = a[3]; a4 = a[4]; a5 = a[5]; a6 = a[6]
    t0 = p3*p6
    t1 = q2 + q3
    t2 = sin(t1)
    t3 = p4*p7
    t4 = t2*t3
    t5 = q2 + q5
    t6 = sin(t5)
    t7 = t3*t6
    t8 = p1*t2
    t9 = q4 + t1
    t10 = p5*sin(t9)
    t11 = 2*t10
    t12 = t11 + 2*t8
    t13 = -t12
    t14 = p8/2
    t15 = p1*t6
    t16 = q6 + t5
    t17 = p5*sin(t16)
    t18 = 2*t17
    t19 = 2*t15 + t18
    t20 = -t19
    t21 = t0*sin(q2) + t13*t14 + t14*t20 - t4 - t7
    t22 = p8*t13/2 - t4
    t23 = p8*t10
    t24 = a4*t23
    t25 = a3*t22 - t24
    t26 = p8*t20/2 - t7
    t27 = p8*t17
    t28 = a6*t27
    t29 = a5*t26 - t28
    t30 = cos(t1)
    t31 = p1*t30
    t32 = p5*cos(t9)
    t33 = 2*t32
    t34 = 2*t31 + t33
    t35 = t14*t34 + t3*t30
    t36 = cos(t5)
    t37 = p1*t36
    t38 = p5*cos(t16)
    t39 = 2*t38
    t40 = 2*t37 + t39
    t41 = t14*t40 + t3*t36
    t42 = -t0*cos(q2) + t35 + t41
    t43 = p8*t32
    t44 = a4*t43
    t45 = a3*t35 + t44
    t46 = p8*t38
    t47 = a6*t46
    t48 = a5*t41 + t47
    t49 = t31 + t32
    t50 = t10 + t8
    t51 = t14*(t12*t49 + t13*t49)
    t52 = t37 + t38
    t53 = t15 + t17
    t54 = t14*(t19*t52 + t20*t52)
    t55 = t12*t32
    t56 = t13*t32 + t55
    t57 = a4*t14
    t58 = a3*t51 + t56*t57
    t59 = t19*t38
    t60 = t20*t38 + t59
    t61 = a6*t14
    t62 = a5*t54 + t60*t61
    t63 = a0*t22 + a1*t35 + a2*t51 + t58
    t64 = -t10*t34 + t55
    t65 = t14*(-t11*t49 + t33*t50 + t64)
    t66 = -a0*t23 + a1*t43
    t67 = a2*t65 + a3*t65 + t57*t64 + t66
    t68 = a0*t26 + a1*t41 + a2*t54 + t62
    t69 = -t17*t40 + t59
    t70 = t14*(-t18*t52 + t39*t53 + t69)
    t71 = -a0*t27 + a1*t46
    t72 = a2*t70 + a5*t70 + t61*t69 + t71
    t73 = t14*t56
    t74 = a2*t73 + a3*t73 + t66
    t75 = t14*t64
    t76 = t14*t60
    t77 = a2*t76 + a5*t76 + t71
    t78 = t14*t69
    out = np.array((0, 0, a2*t21 + t25 + t29, a2*t22 + t25, -a2*t23 - a3*t23 - t24, a2*t26 + t29, -a2*t27 - a5*t27 - t28, 0, 0, a2*t42 + t45 + t48, a2*t35 + t45, a2*t43 + a3*t43 + t44, a2*t41 + t48, a2*t46 + a5*t46 + t47, 0, 0, a0*t21 + a1*t42 + a2*(t51 + t54) + t58 + t62, t63, t67, t68, t72, 0, 0, t63, t63, t67, 0, 0, 0, 0, t74, t74, a2*t75 + a3*t75 + t66, 0, 0, 0, 0, t68, 0, 0, t68, t72, 0, 0, t77, 0, 0, t77, a2*t78 + a5*t78 + t71,))
    return out.reshape(7, 7)


def potential_energy(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = -q1
    t1 = q2 + q3
    t2 = cos(t1)
    t3 = p12*p7
    t4 = q2 + q5
    t5 = cos(t4)
    t6 = p12*p8
    return p12*p6*(p3*cos(q2) + q1) + t3*(-p4*t2 - t0) + t3*(-p4*t5 - t0) + t6*(-p1*t2 - p5*cos(q4 + t1) - t0) + t6*(-p1*t5 - p5*cos(q6 + t4) - t0)


def gravity_force(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = 2*p12
    t1 = q2 + q3
    t2 = sin(t1)
    t3 = p12*p4*p7
    t4 = p5*sin(q4 + t1)
    t5 = p12*p8
    t6 = t2*t3 + t5*(p1*t2 + t4)
    t7 = q2 + q5
    t8 = sin(t7)
    t9 = p5*sin(q6 + t7)
    t10 = t3*t8 + t5*(p1*t8 + t9)
    out = np.array((0, -p12*p6 - p7*t0 - p8*t0, p12*p3*p6*sin(q2) - t10 - t6, -t6, -t4*t5, -t10, -t5*t9,))
    return out


def com_pos(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = 1/(p6 + 2*p7 + 2*p8)
    t1 = q2 + q3
    t2 = sin(t1)
    t3 = q2 + q5
    t4 = sin(t3)
    t5 = q4 + t1
    t6 = q6 + t3
    t7 = -q1
    t8 = cos(t1)
    t9 = cos(t3)
    out = np.array((t0*(p6*(-p3*sin(q2) + q0) + p7*(p4*t2 + q0) + p7*(p4*t4 + q0) + p8*(p1*t2 + p5*sin(t5) + q0) + p8*(p1*t4 + p5*sin(t6) + q0)), t0*(p6*(p3*cos(q2) + q1) + p7*(-p4*t8 - t7) + p7*(-p4*t9 - t7) + p8*(-p1*t8 - p5*cos(t5) - t7) + p8*(-p1*t9 - p5*cos(t6) - t7)),))
    return out


def com_jac(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = 1/(p6 + 2*p7 + 2*p8)
    t1 = p3*p6
    t2 = q2 + q3
    t3 = cos(t2)
    t4 = p4*p7
    t5 = q4 + t2
    t6 = p5*cos(t5)
    t7 = p8*(p1*t3 + t6) + t3*t4
    t8 = q2 + q5
    t9 = cos(t8)
    t10 = q6 + t8
    t11 = p5*cos(t10)
    t12 = p8*(p1*t9 + t11) + t4*t9
    t13 = p8*t0
    t14 = sin(t2)
    t15 = p5*sin(t5)
    t16 = p8*(p1*t14 + t15) + t14*t4
    t17 = sin(t8)
    t18 = p5*sin(t10)
    t19 = p8*(p1*t17 + t18) + t17*t4
    out = np.array((1, 0, t0*(-t1*cos(q2) + t12 + t7), t0*t7, t13*t6, t0*t12, t11*t13, 0, 1, t0*(-t1*sin(q2) + t16 + t19), t0*t16, t13*t15, t0*t19, t13*t18,))
    return out.reshape(2, 7)


def com_jacdot(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = p3*p6
    t1 = q2 + q3
    t2 = sin(t1)
    t3 = p4*p7
    t4 = t2*t3
    t5 = q2 + q5
    t6 = sin(t5)
    t7 = t3*t6
    t8 = q4 + t1
    t9 = p5*sin(t8)
    t10 = -p1*t2 - t9
    t11 = q6 + t5
    t12 = p5*sin(t11)
    t13 = -p1*t6 - t12
    t14 = 1/(p6 + 2*p7 + 2*p8)
    t15 = t14*v2
    t16 = p8*t10 - t4
    t17 = t14*v3
    t18 = p8*t14
    t19 = t18*v4
    t20 = t19*t9
    t21 = t16*t17 - t20
    t22 = p8*t13 - t7
    t23 = t14*v5
    t24 = t18*v6
    t25 = t12*t24
    t26 = t22*t23 - t25
    t27 = p8*t9
    t28 = p8*t12
    t29 = cos(t1)
    t30 = p5*cos(t8)
    t31 = p8*(p1*t29 + t30) + t29*t3
    t32 = cos(t5)
    t33 = p5*cos(t11)
    t34 = p8*(p1*t32 + t33) + t3*t32
    t35 = t19*t30
    t36 = t17*t31 + t35
    t37 = t24*t33
    t38 = t23*t34 + t37
    t39 = p8*t30
    t40 = p8*t33
    out = np.array((0, 0, t15*(p8*t10 + p8*t13 + t0*sin(q2) - t4 - t7) + t21 + t26, t15*t16 + t21, -t15*t27 - t17*t27 - t20, t15*t22 + t26, -t15*t28 - t23*t28 - t25, 0, 0, t15*(-t0*cos(q2) + t31 + t34) + t36 + t38, t15*t31 + t36, t15*t39 + t17*t39 + t35, t15*t34 + t38, t15*t40 + t23*t40 + t37,))
    return out.reshape(2, 7)


def dcom_acc_dq(P, q, v, a):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    a0 = a[0]; a1 = a[1]; a2 = a[2]; a3 = a[3]; a4 = a[4]; a5 = a[5]; a6 = a[6]
    t0 = p3*p6
    t1 = t0*cos(q2)
    t2 = q2 + q3
    t3 = cos(t2)
    t4 = p4*p7
    t5 = t3*t4
    t6 = q2 + q5
    t7 = cos(t6)
    t8 = t4*t7
    t9 = q4 + t2
    t10 = p5*cos(t9)
    t11 = p1*t3 + t10
    t12 = -t11
    t13 = q6 + t6
    t14 = p5*cos(t13)
    t15 = p1*t7 + t14
    t16 = -t15
    t17 = 1/(p6 + 2*p7 + 2*p8)
    t18 = t17*v2
    t19 = p8*t12 - t5
    t20 = t17*v3
    t21 = p8*t17
    t22 = t21*v4
    t23 = t10*t22
    t24 = t19*t20 - t23
    t25 = p8*t16 - t8
    t26 = t17*v5
    t27 = t21*v6
    t28 = t14*t27
    t29 = t25*t26 - t28
    t30 = sin(t2)
    t31 = t30*t4
    t32 = sin(t6)
    t33 = t32*t4
    t34 = p5*sin(t9)
    t35 = -p1*t30 - t34
    t36 = p5*sin(t13)
    t37 = -p1*t32 - t36
    t38 = p8*t35 + p8*t37 + t0*sin(q2) - t31 - t33
    t39 = a2*t17
    t40 = t18*t19 + t24
    t41 = p8*t10
    t42 = -t18*t41 - t20*t41 - t23
    t43 = p8*t35 - t31
    t44 = a3*t17
    t45 = a4*t21
    t46 = t34*t45
    t47 = t40*v3 + t42*v4 + t43*t44 - t46
    t48 = t18*t25 + t29
    t49 = p8*t14
    t50 = -t18*t49 - t26*t49 - t28
    t51 = p8*t37 - t33
    t52 = a5*t17
    t53 = a6*t21
    t54 = t36*t53
    t55 = t48*v5 + t50*v6 + t51*t52 - t54
    t56 = p8*t34
    t57 = p8*t36
    t58 = t22*t34
    t59 = t20*t43 - t58
    t60 = t27*t36
    t61 = t26*t51 - t60
    t62 = p8*t11 + t5
    t63 = p8*t15 + t8
    t64 = t18*t43 + t59
    t65 = -t18*t56 - t20*t56 - t58
    t66 = t10*t45 + t65*v4
    t67 = t44*t62 + t64*v3 + t66
    t68 = t18*t51 + t61
    t69 = -t18*t57 - t26*t57 - t60
    t70 = t14*t53 + t69*v6
    t71 = t52*t63 + t68*v5 + t70
    out = np.array((0, 0, t38*t39 + t47 + t55 + v2*(t18*(p8*t12 + p8*t16 + t1 - t5 - t8) + t24 + t29), t39*t43 + t40*v2 + t47, -t39*t56 + t42*v2 + t42*v3 + t42*v4 - t44*t56 - t46, t39*t51 + t48*v2 + t55, -t39*t57 + t50*v2 + t50*v5 + t50*v6 - t52*t57 - t54, 0, 0, t39*(-t1 + t62 + t63) + t67 + t71 + v2*(t18*t38 + t59 + t61), t39*t62 + t64*v2 + t67, t39*t41 + t41*t44 + t65*v2 + t65*v3 + t66, t39*t63 + t68*v2 + t71, t39*t49 + t49*t52 + t69*v2 + t69*v5 + t70,))
    return out.reshape(2, 7)


def foot_pos_l(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = q2 + q3
    t1 = q4 + t0
    out = np.array((p1*sin(t0) + p15*sin(t1) + q0, -p1*cos(t0) - p15*cos(t1) + q1,))
    return out


def foot_jac_l(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = q2 + q3
    t1 = q4 + t0
    t2 = p15*cos(t1)
    t3 = p1*cos(t0) + t2
    t4 = p15*sin(t1)
    t5 = p1*sin(t0) + t4
    out = np.array((1, 0, t3, t3, t2, 0, 0, 0, 1, t5, t5, t4, 0, 0,))
    return out.reshape(2, 7)


def foot_jacdot_l(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = q2 + q3
    t1 = q4 + t0
    t2 = p15*sin(t1)
    t3 = t2*v4
    t4 = -p1*sin(t0) - t2
    t5 = -t3 + t4*v2 + t4*v3
    t6 = p15*cos(t1)
    t7 = t6*v4
    t8 = p1*cos(t0) + t6
    t9 = t7 + t8*v2 + t8*v3
    out = np.array((0, 0, t5, t5, -t2*v2 - t2*v3 - t3, 0, 0, 0, 0, t9, t9, t6*v2 + t6*v3 + t7, 0, 0,))
    return out.reshape(2, 7)


def dfoot_jtlam_dq_l(P, q, lam):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    lam0 = lam[0]; lam1 = lam[1]
    t0 = q2 + q3
    t1 = q4 + t0
    t2 = cos(t1)
    t3 = p15*sin(t1)
    t4 = lam0*(-p1*sin(t0) - t3) + lam1*(p1*cos(t0) + p15*t2)
    t5 = -lam0*t3 + lam1*p15*t2
    out = np.array((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, t4, t4, t5, 0, 0, 0, 0, t4, t4, t5, 0, 0, 0, 0, t5, t5, t5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,))
    return out.reshape(7, 7)


def dfoot_acc_dq_l(P, q, v, a):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    a0 = a[0]; a1 = a[1]; a2 = a[2]; a3 = a[3]; a4 = a[4]; a5 = a[5]; a6 = a[6]
    t0 = q2 + q3
    t1 = q4 + t0
    t2 = p15*sin(t1)
    t3 = a4*t2
    t4 = -p1*sin(t0) - t2
    t5 = p15*cos(t1)
    t6 = t5*v4
    t7 = -t5*v2 - t5*v3 - t6
    t8 = p1*cos(t0) + t5
    t9 = -t8
    t10 = -t6 + t9*v2 + t9*v3
    t11 = a2*t4 + a3*t4 + t10*v2 + t10*v3 - t3 + t7*v4
    t12 = t2*v4
    t13 = -t12 + t4*v2 + t4*v3
    t14 = -t12 - t2*v2 - t2*v3
    t15 = a4*t5 + t14*v4
    t16 = a2*t8 + a3*t8 + t13*v2 + t13*v3 + t15
    out = np.array((0, 0, t11, t11, -a2*t2 - a3*t2 - t3 + t7*v2 + t7*v3 + t7*v4, 0, 0, 0, 0, t16, t16, a2*t5 + a3*t5 + t14*v2 + t14*v3 + t15, 0, 0,))
    return out.reshape(2, 7)


def foot_pos_r(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = q2 + q5
    t1 = q6 + t0
    out = np.array((p1*sin(t0) + p15*sin(t1) + q0, -p1*cos(t0) - p15*cos(t1) + q1,))
    return out


def foot_jac_r(P, q):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    t0 = q2 + q5
    t1 = q6 + t0
    t2 = p15*cos(t1)
    t3 = p1*cos(t0) + t2
    t4 = p15*sin(t1)
    t5 = p1*sin(t0) + t4
    out = np.array((1, 0, t3, 0, 0, t3, t2, 0, 1, t5, 0, 0, t5, t4,))
    return out.reshape(2, 7)


def foot_jacdot_r(P, q, v):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    t0 = q2 + q5
    t1 = q6 + t0
    t2 = p15*sin(t1)
    t3 = t2*v6
    t4 = -p1*sin(t0) - t2
    t5 = -t3 + t4*v2 + t4*v5
    t6 = p15*cos(t1)
    t7 = t6*v6
    t8 = p1*cos(t0) + t6
    t9 = t7 + t8*v2 + t8*v5
    out = np.array((0, 0, t5, 0, 0, t5, -t2*v2 - t2*v5 - t3, 0, 0, t9, 0, 0, t9, t6*v2 + t6*v5 + t7,))
    return out.reshape(2, 7)


def dfoot_jtlam_dq_r(P, q, lam):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    lam0 = lam[0]; lam1 = lam[1]
    t0 = q2 + q5
    t1 = q6 + t0
    t2 = cos(t1)
    t3 = p15*sin(t1)
    t4 = lam0*(-p1*sin(t0) - t3) + lam1*(p1*cos(t0) + p15*t2)
    t5 = -lam0*t3 + lam1*p15*t2
    out = np.array((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, t4, 0, 0, t4, t5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, t4, 0, 0, t4, t5, 0, 0, t5, 0, 0, t5, t5,))
    return out.reshape(7, 7)


def dfoot_acc_dq_r(P, q, v, a):
    p0 = P[0]; p1 = P[1]; p2 = P[2]; p3 = P[3]; p4 = P[4]; p5 = P[5]; p6 = P[6]; p7 = P[7]; p8 = P[8]; p9 = P[9]; p10 = P[10]; p11 = P[11]; p12 = P[12]; p13 = P[13]; p14 = P[14]; p15 = P[15]
    q0 = q[0]; q1 = q[1]; q2 = q[2]; q3 = q[3]; q4 = q[4]; q5 = q[5]; q6 = q[6]
    v0 = v[0]; v1 = v[1]; v2 = v[2]; v3 = v[3]; v4 = v[4]; v5 = v[5]; v6 = v[6]
    a0 = a[0]; a1 = a[1]; a2 = a[2]; a3 = a[3]; a4 = a[4]; a5 = a[5]; a6 = a[6]
    t0 = q2 + q5
    t1 = q6 + t0
    t2 = p15*sin(t1)
    t3 = a6*t2
    t4 = -p1*sin(t0) - t2
    t5 = p15*cos(t1)
    t6 = t5*v6
    t7 = -t5*v2 - t5*v5 - t6
    t8 = p1*cos(t0) + t5
    t9 = -t8
    t10 = -t6 + t9*v2 + t9*v5
    t11 = a2*t4 + a5*t4 + t10*v2 + t10*v5 - t3 + t7*v6
    t12 = t2*v6
    t13 = -t12 + t4*v2 + t4*v5
    t14 = -t12 - t2*v2 - t2*v5
    t15 = a6*t5 + t14*v6
    t16 = a2*t8 + a5*t8 + t13*v2 + t13*v5 + t15
    out = np.array((0, 0, t11, 0, 0, t11, -a2*t2 - a5*t2 - t3 + t7*v2 + t7*v5 + t7*v6, 0, 0, t16, 0, 0, t16, a2*t5 + a5*t5 + t14*v2 + t14*v5 + t15,))
    return out.reshape(2, 7)
