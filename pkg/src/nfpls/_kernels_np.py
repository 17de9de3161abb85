"""Pure-numpy implementations of the hot numeric kernels.

These are the reference implementations; `_kernels_nb` carries jitted
equivalents with identical signatures.  Model ids: 0 = UPW, 1 = USW, 2 = NUSW.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def _wrapped_phase(cycles):
    # reduce to [-pi, pi) before exponentiation; `cycles` is distance / wavelength
    return TWO_PI * (cycles - np.round(cycles))


def channel_entries(model_id, mxv, mzv, r, phi_c, psi_c, om_c, d, lam, area):
    """Complex channel amplitudes for all elements of a planar array.

    mxv, mzv are the signed element index vectors (float64, same length M);
    r, phi_c, psi_c, om_c the node range and direction cosines.
    """
    eps = d / r
    if model_id == 0:
        rm = r * (1.0 - mxv * eps * phi_c - mzv * eps * om_c)
        amp = np.full(mxv.shape, np.sqrt(area * psi_c / (4.0 * np.pi * r * r)))
    elif model_id == 1:
        rm = r * (1.0 - eps * (mxv * phi_c + mzv * om_c)
                  + 0.5 * eps * eps * (mxv * mxv * (1.0 - phi_c * phi_c)
                                       + mzv * mzv * (1.0 - om_c * om_c)))
        amp = np.full(mxv.shape, np.sqrt(area * psi_c / (4.0 * np.pi * r * r)))
    else:
        rm = r * np.sqrt(1.0 - 2.0 * mxv * eps * phi_c - 2.0 * mzv * eps * om_c
                         + (mxv * mxv + mzv * mzv) * eps * eps)
        amp = np.sqrt(area * r * psi_c / (4.0 * np.pi * rm ** 3))
    ph = _wrapped_phase(rm / lam)
    return amp * (np.cos(ph) - 1j * np.sin(ph))


def quad_double_sum(zeta, weights, lx, lz, phi_b, om_b, phi_e, om_e, tau,
                    k_rb, k_re, amp_pow):
    """Weighted tensor quadrature sum of the two oscillatory aperture kernels.

    Evaluates sum_{t,t'} w_t w_t' g1(lx*z_t, lz*z_t') g2(lx*z_t, lz*z_t') where
    g1 carries the outbound phase exp(+j*k_rb*s_b)/s_b^(2*amp_pow) and g2 the
    conjugate inbound phase for the second node scaled by tau.
    """
    x = lx * zeta
    z = lz * zeta
    xx = x[:, None]
    zz = z[None, :]
    sb2 = xx * xx + zz * zz - 2.0 * phi_b * xx - 2.0 * om_b * zz + 1.0
    se2 = (tau * tau * (xx * xx + zz * zz)
           - 2.0 * tau * phi_e * xx - 2.0 * tau * om_e * zz + 1.0)
    sb = np.sqrt(sb2)
    se = np.sqrt(se2)
    ph = _wrapped_phase((k_rb * sb - k_re * se) / TWO_PI)
    mag = sb2 ** (-amp_pow) * se2 ** (-amp_pow)
    ww = weights[:, None] * weights[None, :]
    val = np.sum(ww * mag * np.cos(ph)) + 1j * np.sum(ww * mag * np.sin(ph))
    return val


def quad_single_sum(zeta, weights, lz, om_b, om_e, tau, k_rb, k_re, amp_pow):
    """Weighted quadrature sum of the line-aperture kernels (linear array)."""
    z = lz * zeta
    sb2 = z * z - 2.0 * om_b * z + 1.0
    se2 = tau * tau * z * z - 2.0 * tau * om_e * z + 1.0
    sb = np.sqrt(sb2)
    se = np.sqrt(se2)
    ph = _wrapped_phase((k_rb * sb - k_re * se) / TWO_PI)
    mag = sb2 ** (-amp_pow) * se2 ** (-amp_pow)
    val = (np.sum(weights * mag * np.cos(ph))
           + 1j * np.sum(weights * mag * np.sin(ph)))
    return val
