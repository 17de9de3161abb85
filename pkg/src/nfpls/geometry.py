"""Array and node geometry: element layouts, distances, region boundaries.

Everything is in SI meters and radians.  Element indices are signed and
centered, so a ULA is simply the m_x = 1 special case of the planar array.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .exceptions import DomainError

__all__ = [
    "ArrayGeometry",
    "NodeGeometry",
    "direction_cosines",
    "exact_distance",
    "fresnel_distance_approx",
    "region_boundaries",
]


def direction_cosines(theta, phi):
    """Direction cosines (along x, y, z) of a direction given by two angles.

    theta is the azimuth and phi the elevation, both restricted to (0, pi)
    so the node lies strictly in front of the array plane.

    Returns the tuple (sin(phi)cos(theta), sin(phi)sin(theta), cos(phi)).
    """
    if not (0.0 < theta < math.pi):
        raise DomainError(f"azimuth must lie in (0, pi), got {theta!r}")
    if not (0.0 < phi < math.pi):
        raise DomainError(f"elevation must lie in (0, pi), got {phi!r}")
    sin_phi = math.sin(phi)
    return sin_phi * math.cos(theta), sin_phi * math.sin(theta), math.cos(phi)


@dataclass(frozen=True)
class ArrayGeometry:
    """A centered planar array in the x-z plane with square elements.

    m_x, m_z are odd element counts along the two axes, spacing_d the
    inter-element pitch and element_side the physical side length of each
    (square) element, so spacing_d >= element_side keeps elements disjoint.
    """

    m_x: int
    m_z: int
    spacing_d: float
    element_side: float
    wavelength: float

    def __post_init__(self):
        for name, value in (("m_x", self.m_x), ("m_z", self.m_z)):
            if not isinstance(value, (int, np.integer)) or value < 1 or value % 2 == 0:
                raise DomainError(f"{name} must be a positive odd integer, got {value!r}")
        if not self.element_side > 0.0:
            raise DomainError("element_side must be positive")
        if self.spacing_d < self.element_side:
            raise DomainError("spacing_d must be at least element_side")
        if not self.wavelength > 0.0:
            raise DomainError("wavelength must be positive")

    @property
    def m_total(self):
        return self.m_x * self.m_z

    @property
    def element_area(self):
        return self.element_side ** 2

    @property
    def wavenumber(self):
        return 2.0 * math.pi / self.wavelength

    @property
    def half_span_x(self):
        return (self.m_x - 1) // 2

    @property
    def half_span_z(self):
        return (self.m_z - 1) // 2

    @property
    def aperture(self):
        """Largest linear dimension: the diagonal of the element-center box."""
        return math.hypot((self.m_x - 1) * self.spacing_d,
                          (self.m_z - 1) * self.spacing_d)

    def index_vectors(self):
        """Flat signed index vectors (mxv, mzv), x-major ordering."""
        return _index_vectors(self.m_x, self.m_z)

    def element_position(self, m_x, m_z):
        """Cartesian center of one element (the array normal is +y)."""
        self._check_index(m_x, m_z)
        return np.array([m_x * self.spacing_d, 0.0, m_z * self.spacing_d])

    def _check_index(self, m_x, m_z):
        if abs(m_x) > self.half_span_x or abs(m_z) > self.half_span_z:
            raise DomainError(
                f"element index ({m_x}, {m_z}) outside the "
                f"{self.m_x}x{self.m_z} array")


@lru_cache(maxsize=32)
def _index_vectors(m_x, m_z):
    ix = np.arange(m_x, dtype=np.float64) - (m_x - 1) / 2.0
    iz = np.arange(m_z, dtype=np.float64) - (m_z - 1) / 2.0
    mxv, mzv = np.meshgrid(ix, iz, indexing="ij")
    mxv = np.ascontiguousarray(mxv.ravel())
    mzv = np.ascontiguousarray(mzv.ravel())
    mxv.setflags(write=False)
    mzv.setflags(write=False)
    return mxv, mzv


@dataclass(frozen=True)
class NodeGeometry:
    """Spherical position of a user node with its derived direction cosines."""

    range_r: float
    azimuth_theta: float
    elevation_phi: float

    def __post_init__(self):
        if not self.range_r > 0.0:
            raise DomainError("range_r must be positive")
        cx, cy, cz = direction_cosines(self.azimuth_theta, self.elevation_phi)
        object.__setattr__(self, "_cosines", (cx, cy, cz))

    @property
    def cos_x(self):
        """Direction cosine along the array x axis."""
        return self._cosines[0]

    @property
    def cos_y(self):
        """Direction cosine along the array normal; positive by construction."""
        return self._cosines[1]

    @property
    def cos_z(self):
        """Direction cosine along the array z axis."""
        return self._cosines[2]

    @property
    def position(self):
        cx, cy, cz = self._cosines
        return np.array([self.range_r * cx, self.range_r * cy, self.range_r * cz])

    def epsilon(self, arr):
        """Pitch-to-range ratio spacing_d / range_r for a given array."""
        return arr.spacing_d / self.range_r

    def same_direction(self, other, tol=1e-12):
        return (abs(self.azimuth_theta - other.azimuth_theta) <= tol
                and abs(self.elevation_phi - other.elevation_phi) <= tol)


def exact_distance(arr, node, m_x, m_z):
    """Distance from a node to the center of element (m_x, m_z).

    Evaluates r*sqrt(1 - 2*mx*eps*cx - 2*mz*eps*cz + (mx^2+mz^2)*eps^2),
    which equals the Cartesian norm of the separation vector.
    """
    arr._check_index(m_x, m_z)
    eps = node.epsilon(arr)
    r = node.range_r
    return r * math.sqrt(1.0 - 2.0 * m_x * eps * node.cos_x
                         - 2.0 * m_z * eps * node.cos_z
                         + (m_x * m_x + m_z * m_z) * eps * eps)


def fresnel_distance_approx(arr, node, m_x, m_z):
    """Second-order expansion of `exact_distance` in the pitch-to-range ratio."""
    arr._check_index(m_x, m_z)
    eps = node.epsilon(arr)
    cx, cz = node.cos_x, node.cos_z
    return node.range_r * (1.0 - eps * (m_x * cx + m_z * cz)
                           + 0.5 * eps * eps * (m_x * m_x * (1.0 - cx * cx)
                                                + m_z * m_z * (1.0 - cz * cz)))


def region_boundaries(arr):
    """(rayleigh, fresnel) range boundaries for the array.

    rayleigh = 2 D^2 / wavelength separates far field from near field;
    fresnel = 0.5 sqrt(D^3 / wavelength) is the validity floor of the
    quadratic phase approximation.  D is the array aperture (diagonal).
    """
    d_ap = arr.aperture
    rayleigh = 2.0 * d_ap ** 2 / arr.wavelength
    fresnel = 0.5 * math.sqrt(d_ap ** 3 / arr.wavelength)
    return rayleigh, fresnel
