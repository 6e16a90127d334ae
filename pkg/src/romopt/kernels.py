"""Dynamics kernel dispatch: compiled core when available, generated
pure-Python twin otherwise. Set ROMOPT_PURE_PY=1 to force the fallback."""

import os

if os.environ.get("ROMOPT_PURE_PY"):
    from romopt import _kernels_py as _impl
else:
    try:
        from romopt import _kernels as _impl
    except ImportError:
        from romopt import _kernels_py as _impl

IMPL = _impl.IMPL
PARAM_ORDER = _impl.PARAM_ORDER
N_Q = _impl.N_Q

mass_matrix = _impl.mass_matrix
bias = _impl.bias
dbias_dq = _impl.dbias_dq
dbias_dv = _impl.dbias_dv
dMa_dq = _impl.dMa_dq
potential_energy = _impl.potential_energy
gravity_force = _impl.gravity_force
com_pos = _impl.com_pos
com_jac = _impl.com_jac
com_jacdot = _impl.com_jacdot
dcom_acc_dq = _impl.dcom_acc_dq
foot_pos_l = _impl.foot_pos_l
foot_jac_l = _impl.foot_jac_l
foot_jacdot_l = _impl.foot_jacdot_l
dfoot_jtlam_dq_l = _impl.dfoot_jtlam_dq_l
dfoot_acc_dq_l = _impl.dfoot_acc_dq_l
foot_pos_r = _impl.foot_pos_r
foot_jac_r = _impl.foot_jac_r
foot_jacdot_r = _impl.foot_jacdot_r
dfoot_jtlam_dq_r = _impl.dfoot_jtlam_dq_r
dfoot_acc_dq_r = _impl.dfoot_acc_dq_r
