"""Minimum transmit power for a target secrecy rate: closed form, the
indefinite-eigenproblem oracle, and the large-array scaling limits.

The feasible-power boundary is governed by the principal eigenvalue of
Theta = h_b h_b^H / noise_b - 2^R0 h_e h_e^H / noise_e.  Theta is indefinite,
so the dense oracle iterates on Theta + (||Theta||_1 + 1) I, where the
algebraically largest eigenvalue is also the dominant one, and reads the
eigenvalue back through the unshifted Rayleigh quotient.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import ChannelModel
from .exceptions import DomainError
from .secrecy import DENSE_ORACLE_MAX_ELEMENTS, _entries, _hermitian_2x2_principal, \
    _power_iteration, _span_basis, _start_vector

__all__ = ["PowerOutcome", "min_power_closed", "min_power_eigen_oracle",
           "power_limit"]

_PARALLEL_TOL = 1e-12


@dataclass(frozen=True)
class PowerOutcome:
    status: str  # "achievable" or "unachievable"
    power: float  # watts; inf when unachievable
    xi: float
    chi: float
    beamformer_direction: Optional[np.ndarray] = None

    @property
    def achievable(self):
        return self.status == "achievable"


def _check_rate(target_rate):
    if not target_rate > 0.0:
        raise DomainError(f"target secrecy rate must be positive, got {target_rate!r}")


def _xi_chi(gain_bob, gain_eve, rho, noise_bob, noise_eve, target_rate):
    rate_factor = 2.0 ** target_rate
    xi = gain_bob / noise_bob - rate_factor * gain_eve / noise_eve
    chi = (4.0 * rate_factor * gain_bob * gain_eve * (1.0 - rho)
           / (noise_bob * noise_eve))
    return xi, chi, rate_factor


def _denominator(xi, chi):
    # xi + sqrt(xi^2 + chi), evaluated without cancellation for xi < 0
    disc = math.sqrt(xi * xi + chi)
    if xi >= 0.0:
        return xi + disc
    return chi / (disc - xi) if disc > xi else 0.0


def min_power_closed(stats, noise_bob, noise_eve, target_rate):
    """Closed-form minimum power 2 (2^R0 - 1) / (xi + sqrt(xi^2 + chi)).

    Unachievability is decided analytically (parallel channels with the
    eavesdropper at least as strong per unit noise), never by overflow.
    """
    _check_rate(target_rate)
    xi, chi, rate_factor = _xi_chi(stats.gain_bob, stats.gain_eve, stats.rho,
                                   noise_bob, noise_eve, target_rate)
    if stats.rho >= 1.0 - _PARALLEL_TOL and xi <= 0.0:
        return PowerOutcome(status="unachievable", power=math.inf, xi=xi, chi=chi)
    power = 2.0 * (rate_factor - 1.0) / _denominator(xi, chi)
    return PowerOutcome(status="achievable", power=power, xi=xi, chi=chi)


def min_power_eigen_oracle(h_b, h_e, noise_bob, noise_eve, target_rate,
                           method="span"):
    """Minimum power via the Theta eigenproblem.

    method "span" solves the 2x2 restriction analytically; method "dense"
    (M <= 400) forms Theta explicitly and runs shifted power iteration as
    the independent check.  Returns the boundary beamforming direction.
    """
    _check_rate(target_rate)
    hb = _entries(h_b)
    he = _entries(h_e)
    if hb.shape != he.shape:
        raise DomainError("channel vectors must have equal length")
    rate_factor = 2.0 ** target_rate
    g_b = float(np.vdot(hb, hb).real)
    g_e = float(np.vdot(he, he).real)
    rho = abs(np.vdot(hb, he)) ** 2 / (g_b * g_e) if g_e > 0.0 else 0.0
    xi, chi, _ = _xi_chi(g_b, g_e, rho, noise_bob, noise_eve, target_rate)
    scale = g_b / noise_bob + rate_factor * g_e / noise_eve

    if method == "span":
        mu, direction = _span_theta_principal(hb, he, noise_bob, noise_eve,
                                              rate_factor)
    elif method == "dense":
        if hb.size > DENSE_ORACLE_MAX_ELEMENTS:
            raise DomainError(
                f"dense oracle limited to M <= {DENSE_ORACLE_MAX_ELEMENTS}")
        mu, direction = _dense_theta_principal(hb, he, noise_bob, noise_eve,
                                               rate_factor)
    else:
        raise DomainError(f"unknown method {method!r}")

    if mu <= 1e-12 * scale:
        return PowerOutcome(status="unachievable", power=math.inf,
                            xi=xi, chi=chi)
    return PowerOutcome(status="achievable", power=(rate_factor - 1.0) / mu,
                        xi=xi, chi=chi, beamformer_direction=direction)


def _span_theta_principal(hb, he, noise_bob, noise_eve, rate_factor):
    # eigenvalue from the quadratic invariants (stable near parallel
    # channels), eigenvector from the 2x2 restriction when it is resolvable
    g_b = float(np.vdot(hb, hb).real)
    g_e = float(np.vdot(he, he).real)
    rho = min(abs(np.vdot(hb, he)) ** 2 / (g_b * g_e), 1.0) if g_e > 0.0 else 0.0
    xi = g_b / noise_bob - rate_factor * g_e / noise_eve
    chi = (4.0 * rate_factor * g_b * g_e * (1.0 - rho)
           / (noise_bob * noise_eve))
    mu = max(_denominator(xi, chi) / 2.0, 0.0)

    u1, u2 = _span_basis(hb, he)
    if u2 is None or 1.0 - rho <= 1e-10:
        return mu, (u1 if mu > 0.0 else None)

    def theta_apply(x):
        return (hb * (np.vdot(hb, x) / noise_bob)
                - rate_factor * he * (np.vdot(he, x) / noise_eve))

    a = float(np.vdot(u1, theta_apply(u1)).real)
    b = float(np.vdot(u2, theta_apply(u2)).real)
    c = complex(np.vdot(u1, theta_apply(u2)))
    _, vec = _hermitian_2x2_principal(a, b, c)
    return mu, vec[0] * u1 + vec[1] * u2


def _dense_theta_principal(hb, he, noise_bob, noise_eve, rate_factor):
    m = hb.size
    theta = (np.outer(hb, hb.conj()) / noise_bob
             - rate_factor * np.outer(he, he.conj()) / noise_eve)
    # shift by a hair more than the 1-norm bound so the algebraically largest
    # eigenvalue dominates; the margin is relative because an absolute offset
    # would swamp the spectrum whenever ||Theta|| is far from unit scale
    shift = float(np.abs(theta).sum(axis=0).max()) * (1.0 + 1e-3)
    shifted = theta + shift * np.eye(m)
    rq, v, _ = _power_iteration(shifted, _start_vector(hb, he), shift, tol=1e-9)
    mu = float(np.vdot(v, theta @ v).real)
    return mu, v


def power_limit(model, arr, node_b, node_e, noise_power, target_rate):
    """Large-array limit of the minimum power (equal noise powers assumed).

    UPW co-directional links stay infeasible whenever the rate exceeds the
    range-ratio budget; otherwise UPW and USW limits vanish, while the
    non-uniform model settles on the strictly positive floor
    2 (2^R0 - 1) d^2 noise / area.
    """
    _check_rate(target_rate)
    if isinstance(model, str):
        model = ChannelModel.from_string(model)
    if model is ChannelModel.UPW:
        if (node_b.same_direction(node_e)
                and node_e.range_r <= 2.0 ** (target_rate / 2.0) * node_b.range_r):
            return math.inf
        return 0.0
    if model is ChannelModel.USW:
        return 0.0
    return (2.0 * (2.0 ** target_rate - 1.0) * arr.spacing_d ** 2 * noise_power
            / arr.element_area)
