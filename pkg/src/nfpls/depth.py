"""Depth of insecurity: how long a stretch of the co-directional range axis
keeps the eavesdropper's channel highly correlated with the intended one.

An eavesdropper position is "insecure" when the correlation factor stays at
or above a threshold gamma; equivalently, the angle between the high-power
beamformer and the maximum-ratio beamformer satisfies cos(psi) = 1 - rho
<= 1 - gamma.  The 3 dB convention is gamma = 1/2, where both readings
coincide.  The closed form covers square arrays with both nodes on the
boresight axis; `depth_scan` is the numeric oracle for everything else.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import ChannelModel, build_channel
from .exceptions import DegenerateInputError, DomainError, NumericalError, ScopeError
from .geometry import NodeGeometry
from .secrecy import asymptotic_beamformer, mrt_beamformer, _entries
from .special import erf_complex
from .stats import rho_direct

__all__ = [
    "DepthReport",
    "cos_psi",
    "cos_psi_numeric",
    "upsilon_threshold",
    "depth_closed",
    "depth_scan",
    "correlation_at_threshold_scale",
]

_SCAN_GRID_POINTS = 400
_SCAN_SPAN = 50.0
_SCAN_BISECT_STEPS = 60


@dataclass(frozen=True)
class DepthReport:
    r_b: float
    gamma: float  # correlation threshold defining the insecure interval
    r_min: float
    r_max: float  # inf for a right-infinite interval
    depth: float  # r_max - r_min, inf when right-infinite
    method: str  # "closed" or "scan"
    upsilon: float = math.nan
    r_s: float = math.nan  # security-region radius (closed form only)
    m_s: float = math.nan  # antenna count that puts r_s at r_b (quadratic form)
    m_s_linear_upsilon: float = math.nan  # same with the threshold unsquared
    model: Optional[ChannelModel] = None


def cos_psi(rho):
    """Squared-cosine gap between the limit beamformer and MRT: 1 - rho."""
    if not 0.0 <= rho <= 1.0:
        raise DomainError("rho must lie in [0, 1]")
    return 1.0 - rho


def cos_psi_numeric(h_b, h_e):
    """The same gap measured directly on the two beamformers."""
    w_mrt = mrt_beamformer(h_b, 1.0)
    w_inf = asymptotic_beamformer(h_b, h_e, 1.0)  # raises for parallel channels
    hb = _entries(h_b)
    num = abs(np.vdot(w_mrt, w_inf)) ** 2
    den = (np.vdot(w_mrt, w_mrt).real * np.vdot(w_inf, w_inf).real)
    return float(num / den)


def correlation_at_threshold_scale(upsilon):
    """Boresight correlation as a function of the aperture-phase scale.

    |erf(sqrt(pi) e^{j pi/4} u) / (2u)|^4 -> 1 as u -> 0 and decays like
    (2u)^-4, so every level in (0, 1) is crossed.
    """
    if upsilon <= 0.0:
        raise DomainError("upsilon must be positive")
    val = abs(erf_complex(math.sqrt(math.pi) * complex(math.sqrt(0.5), math.sqrt(0.5))
                          * upsilon) / (2.0 * upsilon))
    return val ** 4


def upsilon_threshold(target, tol=1e-6):
    """Smallest u > 0 where the boresight correlation crosses `target`.

    Bisection after a forward scan for the first bracketing step; the
    residual of the returned root is below `tol`.
    """
    if not 0.0 < target < 1.0:
        raise DomainError("target must lie in (0, 1)")
    lo = 1e-9
    if correlation_at_threshold_scale(lo) < target:
        raise NumericalError("function starts below target; no bracket")
    hi = lo
    step = 0.05
    while correlation_at_threshold_scale(hi + step) >= target:
        hi += step
        if hi > 1e4:
            raise NumericalError("failed to bracket the threshold crossing")
    lo, hi = hi, hi + step
    while hi - lo > 1e-12 * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if correlation_at_threshold_scale(mid) >= target:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    if abs(correlation_at_threshold_scale(root) - target) > tol:
        raise NumericalError("bisection converged but the residual exceeds tol")
    return root


def _m_s_pair(arr, r_b, upsilon):
    base = 4.0 * arr.wavelength * r_b / arr.spacing_d ** 2
    return base * upsilon ** 2, base * upsilon


def depth_closed(arr, r_b, gamma=0.5):
    """Closed-form insecure interval for a square array, boresight nodes.

    The security radius is r_s = M d^2 / (4 wavelength u^2) with u the
    threshold scale for `gamma`.  Inside it the insecure interval is
    [r_b r_s/(r_s+r_b), r_b r_s/(r_s-r_b)]; at or beyond it the interval is
    right-infinite.  Also reports the minimum antenna count m_s that would
    pull the security radius out to r_b, in both the quadratic-threshold
    form (used here, consistent with r_s) and the linear variant.
    """
    if arr.m_x != arr.m_z:
        raise ScopeError("closed-form depth covers square arrays only; "
                         "use depth_scan for m_x != m_z")
    if not 0.0 < gamma < 1.0:
        raise DomainError("gamma must lie in (0, 1)")
    if not r_b > 0.0:
        raise DomainError("r_b must be positive")
    upsilon = upsilon_threshold(gamma)
    r_s = arr.m_total * arr.spacing_d ** 2 / (4.0 * arr.wavelength * upsilon ** 2)
    m_s, m_s_lin = _m_s_pair(arr, r_b, upsilon)
    r_min = r_b * r_s / (r_s + r_b)
    if r_b < r_s:
        r_max = r_b * r_s / (r_s - r_b)
        depth = 2.0 * r_b ** 2 * r_s / (r_s ** 2 - r_b ** 2)
    else:
        r_max = math.inf
        depth = math.inf
    return DepthReport(r_b=r_b, gamma=gamma, r_min=r_min, r_max=r_max,
                       depth=depth, method="closed", upsilon=upsilon,
                       r_s=r_s, m_s=m_s, m_s_linear_upsilon=m_s_lin)


def depth_scan(arr, node_b, gamma=0.5, model=ChannelModel.USW,
               grid_points=_SCAN_GRID_POINTS, bisect_steps=_SCAN_BISECT_STEPS):
    """Numeric insecure interval from the direct correlation oracle.

    Sweeps a co-directional eavesdropper over a log grid spanning
    [r_b/50, 50 r_b], then refines each threshold crossing by bisection.
    Grid exhaustion without an upper crossing reports a right-infinite
    interval.
    """
    if isinstance(model, str):
        model = ChannelModel.from_string(model)
    if not 0.0 < gamma < 1.0:
        raise DomainError("gamma must lie in (0, 1)")
    h_b = build_channel(model, arr, node_b)

    def insecure(r_e):
        node_e = NodeGeometry(range_r=r_e,
                              azimuth_theta=node_b.azimuth_theta,
                              elevation_phi=node_b.elevation_phi)
        return rho_direct(h_b, build_channel(model, arr, node_e)).rho >= gamma

    r_b = node_b.range_r
    grid = np.geomspace(r_b / _SCAN_SPAN, r_b * _SCAN_SPAN, grid_points)
    flags = np.array([insecure(r) for r in grid])
    if not flags.any():
        raise DegenerateInputError(
            "no insecure grid point found; the grid should at least cover r_b")

    def refine(lo, hi, lo_flag):
        # keeps the invariant flag(lo) == lo_flag != flag(hi)
        for _ in range(bisect_steps):
            mid = math.sqrt(lo * hi)
            if insecure(mid) == lo_flag:
                lo = mid
            else:
                hi = mid
        return math.sqrt(lo * hi)

    first = int(np.argmax(flags))
    last = len(flags) - 1 - int(np.argmax(flags[::-1]))
    r_min = grid[0] if first == 0 else refine(grid[first - 1], grid[first], False)
    if last == len(flags) - 1:
        r_max = math.inf
        depth = math.inf
    else:
        r_max = refine(grid[last], grid[last + 1], True)
        depth = r_max - r_min
    return DepthReport(r_b=r_b, gamma=gamma, r_min=r_min, r_max=r_max,
                       depth=depth, method="scan", model=model)
