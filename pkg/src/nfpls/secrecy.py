"""Secrecy capacity: the closed form, the eigenproblem oracles that check it,
the beamformers that achieve it, and the asymptotic laws.

The capacity of the beamformed wiretap link is log2 of the principal
eigenvalue of Q_e^{-1/2} Q_b Q_e^{-1/2} with Q_k = I + gamma_k h_k h_k^H.
That matrix is a rank-2 perturbation of the identity, so the span path
solves an analytic 2x2 problem; the dense path builds the full matrix and
power-iterates, serving as the independent oracle for arrays up to M=400.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import ChannelModel, ChannelVector
from .exceptions import DegenerateInputError, DomainError, NumericalError

__all__ = [
    "LinkBudget",
    "SecrecyOutcome",
    "secrecy_capacity_closed",
    "capacity_eigen_oracle",
    "mrt_beamformer",
    "asymptotic_beamformer",
    "achieved_secrecy_rate",
    "asymptotic_capacity",
    "DENSE_ORACLE_MAX_ELEMENTS",
]

DENSE_ORACLE_MAX_ELEMENTS = 400
_MAX_POWER_ITERATIONS = 100_000
_RESIDUAL_TOL = 3e-7


@dataclass(frozen=True)
class LinkBudget:
    """Transmit power and per-node noise powers, all in watts."""

    power_p: float
    noise_bob: float
    noise_eve: float

    def __post_init__(self):
        if not (self.power_p > 0.0 and self.noise_bob > 0.0 and self.noise_eve > 0.0):
            raise DomainError("power and noise levels must be strictly positive")

    @property
    def snr_bob(self):
        return self.power_p / self.noise_bob

    @property
    def snr_eve(self):
        return self.power_p / self.noise_eve


@dataclass(frozen=True)
class SecrecyOutcome:
    capacity: float  # bits per channel use, >= 0
    alpha: float
    beta: float
    method: str  # "closed_form" or "eigen_oracle"
    beamformer: Optional[np.ndarray] = None
    principal_eigenvalue: Optional[float] = None


def _entries(h):
    return h.entries if isinstance(h, ChannelVector) else np.asarray(h)


def _alpha_beta(stats, budget):
    gb = budget.snr_bob * stats.gain_bob
    ge = budget.snr_eve * stats.gain_eve
    cross = gb * ge * (1.0 - stats.rho)
    alpha = gb - ge + cross
    beta = (1.0 + ge) * cross
    return alpha, beta, ge


def _positive_root_gain(alpha, beta):
    # (alpha + sqrt(alpha^2 + 4 beta)) / 2 without cancellation for alpha < 0
    disc = math.sqrt(alpha * alpha + 4.0 * beta)
    if alpha >= 0.0:
        return (alpha + disc) / 2.0
    return 2.0 * beta / (disc - alpha) if disc > alpha else 0.0


def secrecy_capacity_closed(stats, budget):
    """Closed-form secrecy capacity from the (G_b, G_e, rho) triple.

    C = log2(1 + (alpha + sqrt(alpha^2 + 4 beta)) / (2 (1 + snr_e G_e)))
    with alpha, beta the rank-2 eigenproblem invariants.  The formula is
    intrinsically clamped: the argument of the log is 1 exactly when the
    positive root collapses to zero.
    """
    alpha, beta, ge = _alpha_beta(stats, budget)
    q = _positive_root_gain(alpha, beta) / (1.0 + ge)
    capacity = math.log2(1.0 + q) if q > 0.0 else 0.0
    return SecrecyOutcome(capacity=capacity, alpha=alpha, beta=beta,
                          method="closed_form",
                          principal_eigenvalue=1.0 + q)


# ---------------------------------------------------------------------------
# eigenproblem oracles


def _span_basis(hb, he):
    """Orthonormal basis of span{h_b, h_e}; second vector may be absent."""
    nb = np.linalg.norm(hb)
    if nb == 0.0:
        raise DomainError("h_b must be nonzero")
    u1 = hb / nb
    w2 = he - np.vdot(u1, he) * u1
    n2 = np.linalg.norm(w2)
    if n2 <= 1e-14 * np.linalg.norm(he):
        return u1, None
    return u1, w2 / n2


def _hermitian_2x2_principal(a, b, c):
    """Largest eigenpair of [[a, c], [conj(c), b]] (a, b real)."""
    mean = 0.5 * (a + b)
    half_diff = 0.5 * (a - b)
    radius = math.hypot(half_diff, abs(c))
    lam = mean + radius
    # eigenvector: pick the better-conditioned of the two analytic forms
    v = np.array([c, lam - a]) if abs(lam - a) >= abs(lam - b) \
        else np.array([lam - b, np.conj(c)])
    n = np.linalg.norm(v)
    if n == 0.0:  # diagonal matrix; principal axis
        v = np.array([1.0, 0.0]) if a >= b else np.array([0.0, 1.0])
        n = 1.0
    return lam, v / n


def _power_iteration(mat, v0, residual_scale, tol=_RESIDUAL_TOL):
    """Power iteration with a residual-based stop; returns (rq, v, residual)."""
    v = v0 / np.linalg.norm(v0)
    for _ in range(_MAX_POWER_ITERATIONS):
        w = mat @ v
        rq = float(np.vdot(v, w).real)
        resid = float(np.linalg.norm(w - rq * v))
        if resid <= tol * max(abs(rq), residual_scale):
            return rq, v, resid
        nw = np.linalg.norm(w)
        if nw == 0.0:
            raise NumericalError("power iteration hit the zero vector")
        v = w / nw
    raise NumericalError(
        f"power iteration did not converge in {_MAX_POWER_ITERATIONS} steps; "
        f"last residual {resid:.3e} against scale {residual_scale:.3e}")


def _start_vector(hb, he):
    # deterministic start with guaranteed overlap of the invariant span and
    # a small full-space component in case the span degenerates
    rng = np.random.default_rng(0x5EC2EC)
    v = hb / np.linalg.norm(hb) + he / np.linalg.norm(he)
    noise = rng.standard_normal(hb.size) + 1j * rng.standard_normal(hb.size)
    return v + 1e-3 * noise / np.linalg.norm(noise)


def _qe_inv_sqrt_apply(x, he_unit, gain_e_snr):
    # (I + snr_e h_e h_e^H)^{-1/2} x, rank-1 analytic form
    coef = 1.0 / math.sqrt(1.0 + gain_e_snr) - 1.0
    return x + coef * he_unit * np.vdot(he_unit, x)


def capacity_eigen_oracle(h_b, h_e, budget, method="span"):
    """Secrecy capacity via the eigenproblem rather than the closed form.

    method "span" reduces to the 2-D invariant subspace spanned by the two
    channels and solves the quadratic analytically (any M).  method "dense"
    builds the full matrix and runs power iteration; it is the independent
    oracle and is limited to M <= 400.  Both return the capacity-achieving
    beamformer scaled to the power budget.
    """
    hb = _entries(h_b)
    he = _entries(h_e)
    if hb.shape != he.shape:
        raise DomainError("channel vectors must have equal length")
    gb_snr = budget.snr_bob
    ge_snr = budget.snr_eve
    g_e = float(np.vdot(he, he).real)
    he_unit = he / math.sqrt(g_e)
    gain_e_snr = ge_snr * g_e

    if method == "span":
        mu, p = _span_principal_pair(hb, he, gb_snr, ge_snr, he_unit, gain_e_snr)
    elif method == "dense":
        if hb.size > DENSE_ORACLE_MAX_ELEMENTS:
            raise DomainError(
                f"dense oracle limited to M <= {DENSE_ORACLE_MAX_ELEMENTS}")
        mu, p = _dense_principal_pair(hb, he, gb_snr, ge_snr)
    else:
        raise DomainError(f"unknown method {method!r}")

    capacity = max(math.log2(mu), 0.0) if mu > 0.0 else 0.0
    beamformer = None
    if p is not None:
        y = _qe_inv_sqrt_apply(p, he_unit, gain_e_snr)
        beamformer = math.sqrt(budget.power_p) * y / np.linalg.norm(y)
    return SecrecyOutcome(capacity=capacity, alpha=math.nan, beta=math.nan,
                          method="eigen_oracle", beamformer=beamformer,
                          principal_eigenvalue=mu)


def _span_principal_pair(hb, he, gb_snr, ge_snr, he_unit, gain_e_snr):
    # the principal eigenvalue comes from the quadratic in the rank-2
    # invariants, which stays accurate even when the two channels are close
    # to parallel and an orthonormal span basis would be noise-dominated
    g_b = float(np.vdot(hb, hb).real)
    g_e = float(np.vdot(he, he).real)
    rho = min(abs(np.vdot(hb, he)) ** 2 / (g_b * g_e), 1.0)
    cross = gb_snr * g_b * ge_snr * g_e * (1.0 - rho)
    alpha = gb_snr * g_b - ge_snr * g_e + cross
    beta = (1.0 + ge_snr * g_e) * cross
    mu = 1.0 + _positive_root_gain(alpha, beta) / (1.0 + ge_snr * g_e)

    u1, u2 = _span_basis(hb, he)
    if u2 is None or 1.0 - rho <= 1e-10:
        # numerically parallel: the span is 1-D and the principal direction
        # is the (whitened) channel axis itself when it beats eigenvalue 1
        return mu, (u1 if mu > 1.0 else None)

    def delta_apply(x):
        y = _qe_inv_sqrt_apply(x, he_unit, gain_e_snr)
        y = y + gb_snr * hb * np.vdot(hb, y)
        return _qe_inv_sqrt_apply(y, he_unit, gain_e_snr)

    a = float(np.vdot(u1, delta_apply(u1)).real)
    b = float(np.vdot(u2, delta_apply(u2)).real)
    c = complex(np.vdot(u1, delta_apply(u2)))
    _, vec = _hermitian_2x2_principal(a, b, c)
    return mu, vec[0] * u1 + vec[1] * u2


def _dense_principal_pair(hb, he, gb_snr, ge_snr):
    m = hb.size
    qe = np.eye(m, dtype=complex) + ge_snr * np.outer(he, he.conj())
    evals, evecs = np.linalg.eigh(qe)
    qe_inv_sqrt = (evecs / np.sqrt(evals)) @ evecs.conj().T
    qb = np.eye(m, dtype=complex) + gb_snr * np.outer(hb, hb.conj())
    delta = qe_inv_sqrt @ qb @ qe_inv_sqrt
    # delta is positive definite, so the magnitude-dominant eigenvalue is
    # already the algebraically largest one and no spectral shift is needed
    rq, v, _ = _power_iteration(delta, _start_vector(hb, he), 1.0)
    return rq, v


# ---------------------------------------------------------------------------
# beamformers


def mrt_beamformer(h_b, power_p):
    """Maximum-ratio beamformer sqrt(P) h_b / ||h_b||."""
    hb = _entries(h_b)
    norm = np.linalg.norm(hb)
    if norm == 0.0:
        raise DomainError("cannot form an MRT beamformer from a zero channel")
    return math.sqrt(power_p) * hb / norm


def asymptotic_beamformer(h_b, h_e, power_p):
    """High-power-limit beamformer: h_b minus its projection onto h_e.

    Exactly orthogonal to h_e by construction.  Raises for (numerically)
    parallel channels, where the projection removes everything.
    """
    hb = _entries(h_b)
    he = _entries(h_e)
    g_b = float(np.vdot(hb, hb).real)
    g_e = float(np.vdot(he, he).real)
    if g_b == 0.0 or g_e == 0.0:
        raise DomainError("channels must be nonzero")
    inner = np.vdot(he, hb)
    rho = abs(inner) ** 2 / (g_b * g_e)
    if rho >= 1.0 - 1e-12:
        raise DegenerateInputError(
            "channels are parallel; the null-space beamformer vanishes")
    w = hb - (inner / g_e) * he
    return math.sqrt(power_p) * w / np.linalg.norm(w)


def achieved_secrecy_rate(w, h_b, h_e, noise_bob, noise_eve):
    """Rate delivered by a concrete beamformer: the defining expression."""
    hb = _entries(h_b)
    he = _entries(h_e)
    snr_b = abs(np.vdot(hb, w)) ** 2 / noise_bob
    snr_e = abs(np.vdot(he, w)) ** 2 / noise_eve
    return max(math.log2((1.0 + snr_b) / (1.0 + snr_e)), 0.0)


# ---------------------------------------------------------------------------
# asymptotic laws


def asymptotic_capacity(model, regime, *, co_directional, gamma_bar=None,
                        r_b=None, r_e=None, element_area=None, spacing_d=None,
                        gain_bob=None, rho=None):
    """Limit value of the capacity for large arrays or high power.

    regime "large_m": the UPW co-directional limit is max(2 log2(r_e/r_b), 0);
    the NUSW limit is log2(1 + gamma * area / (2 d^2)); the remaining model
    combinations grow without bound (returned as inf).

    regime "high_snr": the UPW co-directional plateau again, otherwise the
    unit-slope line log2(gamma * G_b * (1 - rho)).
    """
    if isinstance(model, str):
        model = ChannelModel.from_string(model)
    if regime == "large_m":
        if model is ChannelModel.UPW and co_directional:
            return max(2.0 * math.log2(r_e / r_b), 0.0)
        if model is ChannelModel.NUSW:
            return math.log2(1.0 + gamma_bar * element_area
                             / (2.0 * spacing_d ** 2))
        return math.inf
    if regime == "high_snr":
        if model is ChannelModel.UPW and co_directional:
            return max(2.0 * math.log2(r_e / r_b), 0.0)
        arg = gamma_bar * gain_bob * (1.0 - rho)
        return math.log2(arg) if arg > 0.0 else 0.0
    raise DomainError(f"unknown regime {regime!r}")
