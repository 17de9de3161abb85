"""Closed-form channel gains and correlation factors for the three models,
next to the direct inner-product oracle they are validated against.

Two printed closed forms are kept in a secondary "variant" shape for
comparison output, selected by keyword:

* `rho_upw(..., form="pooled")` divides every branch by (m_x*m_z)^2 and
  carries a factor 4 in the mixed branch.  The default "product" form is the
  per-axis Dirichlet-kernel product, which is what the direct oracle
  reproduces to 1e-9.
* `rho_nusw(..., kernel_form="power")` uses power-weighted aperture kernels
  over a doubled integration span.  The default "amplitude" form quadratures
  the amplitude-weighted kernels and matches the direct oracle to well under
  a percent at the default quadrature order.
"""

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _backend
from .channel import ChannelModel
from .exceptions import DomainError, NumericalQualityWarning
from .geometry import region_boundaries
from .special import chebyshev_gauss_nodes, _erf_unchecked

__all__ = [
    "LinkStats",
    "rho_direct",
    "gain_uniform",
    "rho_upw",
    "rho_usw",
    "gain_nusw",
    "gain_nusw_ula",
    "rho_nusw",
    "rho_nusw_ula",
    "closed_link_stats",
    "DEFAULT_QUADRATURE_ORDER",
]

logger = logging.getLogger(__name__)

DEFAULT_QUADRATURE_ORDER = 100
_MIN_QUADRATURE_ORDER = 10
_DEGENERATE_TOL = 1e-14
_PHASE_NEGLIGIBLE = 1e-9
_CLAMP_WARN = 1e-6
_EXP_QUARTER = complex(math.sqrt(0.5), math.sqrt(0.5))  # exp(j*pi/4)


def _clamp_correlation(value, context):
    if value < 0.0:
        if -value > _CLAMP_WARN:
            warnings.warn(
                f"{context}: correlation {value:.3e} clamped to 0; "
                "magnitude exceeds roundoff", NumericalQualityWarning,
                stacklevel=3)
        return 0.0
    if value > 1.0:
        if value - 1.0 > _CLAMP_WARN:
            warnings.warn(
                f"{context}: correlation {value:.6f} clamped to 1; "
                "excess exceeds roundoff", NumericalQualityWarning,
                stacklevel=3)
        return 1.0
    return float(value)


@dataclass(frozen=True)
class LinkStats:
    """The (gain_bob, gain_eve, rho) triple every closed form consumes."""

    gain_bob: float
    gain_eve: float
    rho: float
    model: ChannelModel
    provenance: str  # "closed_form" or "direct"

    def __post_init__(self):
        if not (self.gain_bob > 0.0 and self.gain_eve > 0.0):
            raise DomainError("channel gains must be positive")
        if not 0.0 <= self.rho <= 1.0:
            raise DomainError("rho must lie in [0, 1]")
        if self.provenance not in ("closed_form", "direct"):
            raise DomainError(f"unknown provenance {self.provenance!r}")


def rho_direct(h_b, h_e):
    """Channel statistics straight from the vectors: the defining oracle.

    rho = |<h_b, h_e>|^2 / (||h_b||^2 ||h_e||^2), clamped to [0, 1].
    """
    if h_b.array != h_e.array:
        raise DomainError("channel vectors were built for different arrays")
    if h_b.model != h_e.model:
        raise DomainError("channel vectors carry different model tags")
    g_b = h_b.norm_squared
    g_e = h_e.norm_squared
    rho = _clamp_correlation(
        abs(np.vdot(h_b.entries, h_e.entries)) ** 2 / (g_b * g_e), "rho_direct")
    return LinkStats(gain_bob=g_b, gain_eve=g_e, rho=rho,
                     model=h_b.model, provenance="direct")


def gain_uniform(arr, node):
    """Total gain M * area * cos_y / (4 pi r^2) of the uniform-amplitude models."""
    return (arr.m_total * arr.element_area * node.cos_y
            / (4.0 * math.pi * node.range_r ** 2))


# ---------------------------------------------------------------------------
# far-field (linear-phase) correlation


def _dirichlet_kernel(m, xi):
    # |sum_{m centered} exp(j xi m)|^2, robust at xi -> 0 and xi -> 2 pi k
    denom = 1.0 - math.cos(xi)
    if denom < _DEGENERATE_TOL:
        return float(m) ** 2
    return (1.0 - math.cos(m * xi)) / denom


def rho_upw(arr, node_b, node_e, form="product"):
    """Correlation factor under linear-phase propagation.

    The "product" form multiplies the per-axis Dirichlet kernels, each
    normalized by its own element count squared.  The "pooled" variant
    (normalizing by (m_x*m_z)^2 per branch, factor 4 in the mixed branch) is
    retained for comparison; the two disagree whenever both axes are active,
    and the product form is the one that matches `rho_direct`.
    """
    if form not in ("product", "pooled"):
        raise DomainError(f"unknown form {form!r}")
    k0d = arr.wavenumber * arr.spacing_d
    xi_x = k0d * (node_b.cos_x - node_e.cos_x)
    xi_z = k0d * (node_b.cos_z - node_e.cos_z)
    kern_x = _dirichlet_kernel(arr.m_x, xi_x)
    kern_z = _dirichlet_kernel(arr.m_z, xi_z)
    product = _clamp_correlation(
        (kern_x / arr.m_x ** 2) * (kern_z / arr.m_z ** 2), "rho_upw")
    if form == "product":
        if logger.isEnabledFor(logging.DEBUG):
            pooled = _rho_upw_pooled(arr, node_b, node_e, kern_x, kern_z)
            if abs(pooled - product) > 1e-12:
                logger.debug("rho_upw pooled/product discrepancy: %.3e vs %.3e",
                             pooled, product)
        return product
    return _rho_upw_pooled(arr, node_b, node_e, kern_x, kern_z)


def _rho_upw_pooled(arr, node_b, node_e, kern_x, kern_z):
    m_sq = float(arr.m_total) ** 2
    same_x = abs(node_b.cos_x - node_e.cos_x) <= 1e-12
    same_z = abs(node_b.cos_z - node_e.cos_z) <= 1e-12
    if same_x and same_z:
        return 1.0
    if same_z:
        return min(kern_x / m_sq, 1.0)
    if same_x:
        return min(kern_z / m_sq, 1.0)
    return min(4.0 * kern_x * kern_z / m_sq, 1.0)


# ---------------------------------------------------------------------------
# quadratic-phase (USW) correlation


def _delta_axis(m, a, b):
    """|sum_m exp(j(a m^2 + b m))|^2 over the centered index range.

    Branches: both phases negligible -> m^2; quadratic negligible ->
    Dirichlet kernel; linear negligible -> single erf; else the two-erf
    form.  Negligibility is judged on the accumulated edge phase (a*(m/2)^2
    resp. b*m/2), with 1e-14 on the raw coefficients as the hard floor.
    """
    if m == 1:
        return 1.0
    half = m / 2.0
    quad_phase = abs(a) * half * half
    lin_phase = abs(b) * half
    if abs(a) < _DEGENERATE_TOL and abs(b) < _DEGENERATE_TOL:
        return float(m) ** 2
    if quad_phase < _PHASE_NEGLIGIBLE:
        if lin_phase < _PHASE_NEGLIGIBLE:
            return float(m) ** 2
        return _dirichlet_kernel(m, b)
    root_a = math.sqrt(abs(a))
    if lin_phase < _PHASE_NEGLIGIBLE:
        val = abs(_erf_unchecked(half * root_a * _EXP_QUARTER))
        return math.pi / abs(a) * val * val
    val = abs(_erf_unchecked((a * m - b) / (2.0 * root_a) * _EXP_QUARTER)
              + _erf_unchecked((a * m + b) / (2.0 * root_a) * _EXP_QUARTER))
    return math.pi / (4.0 * abs(a)) * val * val


def rho_usw(arr, node_b, node_e):
    """Correlation factor under quadratic-phase propagation.

    Separable in the two array axes; each axis contributes a continuum
    (Fresnel-integral) approximation of its phase sum.  Warns when either
    node sits inside the array's Fresnel distance, where the quadratic
    phase expansion that underlies both the model and this closed form
    starts to degrade.
    """
    _, fresnel = region_boundaries(arr)
    for label, node in (("node_b", node_b), ("node_e", node_e)):
        if node.range_r < fresnel:
            warnings.warn(
                f"rho_usw: {label} range {node.range_r:.3g} m is inside the "
                f"Fresnel distance {fresnel:.3g} m; accuracy degrades",
                NumericalQualityWarning, stacklevel=2)
    k0d = arr.wavenumber * arr.spacing_d
    b_x = k0d * (node_b.cos_x - node_e.cos_x)
    b_z = k0d * (node_b.cos_z - node_e.cos_z)
    quad_scale = math.pi * arr.spacing_d ** 2 / arr.wavelength
    a_x = quad_scale * ((1.0 - node_b.cos_x ** 2) / node_b.range_r
                        - (1.0 - node_e.cos_x ** 2) / node_e.range_r)
    a_z = quad_scale * ((1.0 - node_b.cos_z ** 2) / node_b.range_r
                        - (1.0 - node_e.cos_z ** 2) / node_e.range_r)
    rho = (_delta_axis(arr.m_x, a_x, b_x) / arr.m_x ** 2
           * _delta_axis(arr.m_z, a_z, b_z) / arr.m_z ** 2)
    return _clamp_correlation(rho, "rho_usw")


# ---------------------------------------------------------------------------
# non-uniform (NUSW) gains


def gain_nusw(arr, node):
    """Planar-array gain under the non-uniform model: four-arctan form.

    Equals the solid-angle integral of the per-element power over the
    aperture rectangle; requires both axes to have more than one element
    (use `gain_nusw_ula` for linear arrays).
    """
    if arr.m_x == 1 or arr.m_z == 1:
        raise DomainError("gain_nusw needs m_x > 1 and m_z > 1; "
                          "use gain_nusw_ula for linear arrays")
    eps = node.epsilon(arr)
    cy = node.cos_y
    xs = (arr.m_x / 2.0 * eps + node.cos_x, arr.m_x / 2.0 * eps - node.cos_x)
    zs = (arr.m_z / 2.0 * eps + node.cos_z, arr.m_z / 2.0 * eps - node.cos_z)
    total = 0.0
    for x in xs:
        for z in zs:
            total += math.atan2(x * z, cy * math.sqrt(cy * cy + x * x + z * z))
    return arr.element_area / (4.0 * math.pi * arr.spacing_d ** 2) * total


def _gain_line_aperture(m, eps, axis_cos, cos_y, area, d):
    # closed form of the line integral; axis_cos is the direction cosine
    # along the array axis, 1 - axis_cos^2 the transverse-plane projection
    trans = 1.0 - axis_cos * axis_cos
    t1 = ((m * eps - 2.0 * axis_cos)
          / math.sqrt(m * m * eps * eps - 4.0 * m * eps * axis_cos + 4.0))
    t2 = ((m * eps + 2.0 * axis_cos)
          / math.sqrt(m * m * eps * eps + 4.0 * m * eps * axis_cos + 4.0))
    return area * eps * cos_y / (4.0 * math.pi * d * d * trans) * (t1 + t2)


def gain_nusw_ula(arr, node):
    """Linear-array gain under the non-uniform model (two-term closed form).

    Accepts an array with exactly one active axis; the formula applies with
    the axis' own direction cosine either way.
    """
    if arr.m_x == 1 and arr.m_z == 1:
        # single element: the sum collapses to area * cos_y / (4 pi r^2)
        return arr.element_area * node.cos_y / (4.0 * math.pi * node.range_r ** 2)
    if arr.m_x == 1:
        return _gain_line_aperture(arr.m_z, node.epsilon(arr), node.cos_z,
                                   node.cos_y, arr.element_area, arr.spacing_d)
    if arr.m_z == 1:
        return _gain_line_aperture(arr.m_x, node.epsilon(arr), node.cos_x,
                                   node.cos_y, arr.element_area, arr.spacing_d)
    raise DomainError("gain_nusw_ula needs m_x == 1 or m_z == 1")


def _gain_nusw_any(arr, node):
    if arr.m_x == 1 or arr.m_z == 1:
        return gain_nusw_ula(arr, node)
    return gain_nusw(arr, node)


# ---------------------------------------------------------------------------
# non-uniform (NUSW) correlation via Chebyshev-Gauss quadrature


def _check_rule(rule):
    if rule is None:
        return chebyshev_gauss_nodes(DEFAULT_QUADRATURE_ORDER)
    if rule.order_t < _MIN_QUADRATURE_ORDER:
        raise DomainError(
            f"quadrature order must be >= {_MIN_QUADRATURE_ORDER}, "
            f"got {rule.order_t}")
    return rule


def _nodes_identical(node_b, node_e):
    return (node_b.range_r == node_e.range_r
            and node_b.azimuth_theta == node_e.azimuth_theta
            and node_b.elevation_phi == node_e.elevation_phi)


def rho_nusw(arr, node_b, node_e, rule=None, kernel_form="amplitude"):
    """Correlation factor under the non-uniform model, planar arrays.

    Quadratures the cross-aperture product of the two nodes' amplitude-
    weighted phase kernels over the (rectangular) aperture at the default
    order T=100, then normalizes by the closed-form gains.  `kernel_form`
    "power" evaluates the power-weighted variant over the doubled span,
    retained only for comparison output.

    The second node's aperture coordinates ride on the first node's scale
    through the range ratio tau = r_b / r_e.
    """
    if kernel_form not in ("amplitude", "power"):
        raise DomainError(f"unknown kernel_form {kernel_form!r}")
    if arr.m_x == 1 or arr.m_z == 1:
        return rho_nusw_ula(arr, node_b, node_e, rule, kernel_form)
    if _nodes_identical(node_b, node_e):
        return 1.0
    rule = _check_rule(rule)
    weights = np.sqrt(1.0 - rule.nodes ** 2)
    g_b = gain_nusw(arr, node_b)
    g_e = gain_nusw(arr, node_e)
    r_b, r_e = node_b.range_r, node_e.range_r
    eps_b = node_b.epsilon(arr)
    tau = r_b / r_e
    k_rb = arr.wavenumber * r_b
    k_re = arr.wavenumber * r_e
    area = arr.element_area
    if kernel_form == "power":
        s = _backend.quad_double_sum(
            rule.nodes, weights, arr.m_x * eps_b, arr.m_z * eps_b,
            node_b.cos_x, node_b.cos_z, node_e.cos_x, node_e.cos_z,
            tau, k_rb, k_re, 1.5)
        rho = (arr.m_total ** 2 * area ** 2 * node_b.cos_y * node_e.cos_y
               * math.pi ** 2 * abs(s) ** 2
               / (16.0 * g_b * g_e * r_b ** 2 * r_e ** 2 * rule.order_t ** 4))
        return _clamp_correlation(rho, "rho_nusw[power]")
    l_x = arr.m_x * eps_b / 2.0
    l_z = arr.m_z * eps_b / 2.0
    s = _backend.quad_double_sum(
        rule.nodes, weights, l_x, l_z,
        node_b.cos_x, node_b.cos_z, node_e.cos_x, node_e.cos_z,
        tau, k_rb, k_re, 0.75)
    integral = l_x * l_z * (math.pi / rule.order_t) ** 2 * s
    rho = (area ** 2 * node_b.cos_y * node_e.cos_y * abs(integral) ** 2
           / (16.0 * math.pi ** 2 * g_b * g_e * r_b ** 2 * r_e ** 2 * eps_b ** 4))
    return _clamp_correlation(rho, "rho_nusw")


def rho_nusw_ula(arr, node_b, node_e, rule=None, kernel_form="amplitude"):
    """Linear-array counterpart of `rho_nusw` (single-axis quadrature)."""
    if kernel_form not in ("amplitude", "power"):
        raise DomainError(f"unknown kernel_form {kernel_form!r}")
    if arr.m_x != 1 and arr.m_z != 1:
        raise DomainError("rho_nusw_ula needs m_x == 1 or m_z == 1")
    if _nodes_identical(node_b, node_e):
        return 1.0
    rule = _check_rule(rule)
    weights = np.sqrt(1.0 - rule.nodes ** 2)
    if arr.m_x == 1:
        m = arr.m_z
        axis_b, axis_e = node_b.cos_z, node_e.cos_z
    else:
        m = arr.m_x
        axis_b, axis_e = node_b.cos_x, node_e.cos_x
    g_b = gain_nusw_ula(arr, node_b)
    g_e = gain_nusw_ula(arr, node_e)
    r_b, r_e = node_b.range_r, node_e.range_r
    eps_b = node_b.epsilon(arr)
    tau = r_b / r_e
    k_rb = arr.wavenumber * r_b
    k_re = arr.wavenumber * r_e
    area = arr.element_area
    if kernel_form == "power":
        s = _backend.quad_single_sum(rule.nodes, weights, m * eps_b,
                                     axis_b, axis_e, tau, k_rb, k_re, 1.5)
        rho = (m ** 2 * area ** 2 * node_b.cos_y * node_e.cos_y
               * math.pi ** 2 * abs(s) ** 2
               / (16.0 * g_b * g_e * r_b ** 2 * r_e ** 2 * rule.order_t ** 4))
        return _clamp_correlation(rho, "rho_nusw_ula[power]")
    l_ax = m * eps_b / 2.0
    s = _backend.quad_single_sum(rule.nodes, weights, l_ax,
                                 axis_b, axis_e, tau, k_rb, k_re, 0.75)
    integral = l_ax * (math.pi / rule.order_t) * s
    rho = (area ** 2 * node_b.cos_y * node_e.cos_y * abs(integral) ** 2
           / (16.0 * math.pi ** 2 * g_b * g_e * r_b ** 2 * r_e ** 2 * eps_b ** 2))
    return _clamp_correlation(rho, "rho_nusw_ula")


# ---------------------------------------------------------------------------


def closed_link_stats(model, arr, node_b, node_e, rule=None):
    """Closed-form LinkStats for a node pair under the given model."""
    if isinstance(model, str):
        model = ChannelModel.from_string(model)
    if model is ChannelModel.UPW:
        rho = rho_upw(arr, node_b, node_e)
        g_b, g_e = gain_uniform(arr, node_b), gain_uniform(arr, node_e)
    elif model is ChannelModel.USW:
        rho = rho_usw(arr, node_b, node_e)
        g_b, g_e = gain_uniform(arr, node_b), gain_uniform(arr, node_e)
    else:
        rho = rho_nusw(arr, node_b, node_e, rule)
        g_b, g_e = _gain_nusw_any(arr, node_b), _gain_nusw_any(arr, node_e)
    return LinkStats(gain_bob=g_b, gain_eve=g_e, rho=rho,
                     model=model, provenance="closed_form")
