"""Numba-jitted hot kernels, signature-compatible with `_kernels_np`.

Sequential loops only: parallel reductions would make summation order depend
on the thread count and break bit-reproducible sweep output.
"""

import math

import numpy as np
from numba import njit

TWO_PI = 2.0 * math.pi


@njit(cache=True)
def channel_entries(model_id, mxv, mzv, r, phi_c, psi_c, om_c, d, lam, area):
    m = mxv.shape[0]
    out = np.empty(m, dtype=np.complex128)
    eps = d / r
    amp_uniform = math.sqrt(area * psi_c / (4.0 * math.pi * r * r))
    for i in range(m):
        mx = mxv[i]
        mz = mzv[i]
        if model_id == 0:
            rm = r * (1.0 - mx * eps * phi_c - mz * eps * om_c)
            amp = amp_uniform
        elif model_id == 1:
            rm = r * (1.0 - eps * (mx * phi_c + mz * om_c)
                      + 0.5 * eps * eps * (mx * mx * (1.0 - phi_c * phi_c)
                                           + mz * mz * (1.0 - om_c * om_c)))
            amp = amp_uniform
        else:
            rm = r * math.sqrt(1.0 - 2.0 * mx * eps * phi_c
                               - 2.0 * mz * eps * om_c
                               + (mx * mx + mz * mz) * eps * eps)
            amp = math.sqrt(area * r * psi_c / (4.0 * math.pi * rm ** 3))
        q = rm / lam
        ph = TWO_PI * (q - round(q))
        out[i] = complex(amp * math.cos(ph), -amp * math.sin(ph))
    return out


@njit(cache=True)
def quad_double_sum(zeta, weights, lx, lz, phi_b, om_b, phi_e, om_e, tau,
                    k_rb, k_re, amp_pow):
    t = zeta.shape[0]
    acc_re = 0.0
    acc_im = 0.0
    for i in range(t):
        x = lx * zeta[i]
        wi = weights[i]
        for j in range(t):
            z = lz * zeta[j]
            sb2 = x * x + z * z - 2.0 * phi_b * x - 2.0 * om_b * z + 1.0
            se2 = (tau * tau * (x * x + z * z)
                   - 2.0 * tau * phi_e * x - 2.0 * tau * om_e * z + 1.0)
            sb = math.sqrt(sb2)
            se = math.sqrt(se2)
            q = (k_rb * sb - k_re * se) / TWO_PI
            ph = TWO_PI * (q - round(q))
            mag = wi * weights[j] * sb2 ** (-amp_pow) * se2 ** (-amp_pow)
            acc_re += mag * math.cos(ph)
            acc_im += mag * math.sin(ph)
    return complex(acc_re, acc_im)


@njit(cache=True)
def quad_single_sum(zeta, weights, lz, om_b, om_e, tau, k_rb, k_re, amp_pow):
    t = zeta.shape[0]
    acc_re = 0.0
    acc_im = 0.0
    for j in range(t):
        z = lz * zeta[j]
        sb2 = z * z - 2.0 * om_b * z + 1.0
        se2 = tau * tau * z * z - 2.0 * tau * om_e * z + 1.0
        sb = math.sqrt(sb2)
        se = math.sqrt(se2)
        q = (k_rb * sb - k_re * se) / TWO_PI
        ph = TWO_PI * (q - round(q))
        mag = weights[j] * sb2 ** (-amp_pow) * se2 ** (-amp_pow)
        acc_re += mag * math.cos(ph)
        acc_im += mag * math.sin(ph)
    return complex(acc_re, acc_im)
