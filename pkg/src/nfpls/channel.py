"""Explicit channel vectors for the three propagation models, plus the
free-space power-model pieces (scalar propagation factor, projected element
aperture).

Model semantics: NUSW keeps per-element amplitudes and exact-distance phases;
USW keeps a common amplitude with quadratic-expansion phases; UPW linearizes
the phases as well.  Phases are reduced modulo one wavelength cycle before
exponentiation (see `_kernels_*`), since at range/wavelength ratios in the
hundreds a naive product costs several digits.
"""

import enum
import math
import struct
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .exceptions import DomainError
from .geometry import ArrayGeometry, NodeGeometry

__all__ = [
    "ChannelModel",
    "ChannelVector",
    "green_function",
    "element_gain",
    "build_channel",
    "dump_channel",
    "load_channel",
]

_MAGIC = b"NFCH"
_FORMAT_VERSION = 1


class ChannelModel(enum.Enum):
    """The three propagation models, in decreasing fidelity."""

    NUSW = "nusw"
    USW = "usw"
    UPW = "upw"

    @classmethod
    def from_string(cls, name):
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DomainError(
                f"unknown channel model {name!r}; expected one of "
                f"{[m.value for m in cls]}") from None


_MODEL_ID = {ChannelModel.UPW: 0, ChannelModel.USW: 1, ChannelModel.NUSW: 2}


@dataclass(frozen=True)
class ChannelVector:
    """Length-M complex response of one node, tagged with its model."""

    model: ChannelModel
    entries: np.ndarray = field(repr=False)
    array: ArrayGeometry
    node: NodeGeometry

    def __post_init__(self):
        if self.entries.shape != (self.array.m_total,):
            raise DomainError("entry count does not match the array size")
        self.entries.setflags(write=False)

    @property
    def norm_squared(self):
        """Total channel gain ||h||^2."""
        return float(np.vdot(self.entries, self.entries).real)


def green_function(r_point, s_point, wavelength):
    """Free-space scalar propagation factor between two points, per m^2.

    Includes the two reactive terms; they contribute ~3% at one wavelength
    of separation and are negligible at practical ranges, which is why the
    channel amplitudes keep only the radiating term.
    """
    r_point = np.asarray(r_point, dtype=float)
    s_point = np.asarray(s_point, dtype=float)
    dist = float(np.linalg.norm(r_point - s_point))
    if dist <= 0.0:
        raise DomainError("source and observation points coincide")
    kd2 = (2.0 * math.pi / wavelength * dist) ** 2
    bracket = 1.0 - 1.0 / kd2 + 1.0 / (kd2 * kd2)
    return bracket / (4.0 * math.pi * dist * dist)


def element_gain(arr, node, m_x, m_z):
    """Power gain of a single element toward a node.

    The element's projected aperture scales the radiating-term propagation
    factor: area * r * cos_y / (4 pi r_m^3).  Requires the node to be far
    enough (r > 10 * element_side) that the element looks point-like.
    """
    if node.range_r <= 10.0 * arr.element_side:
        raise DomainError(
            f"node range {node.range_r:.3g} m is too close to the array "
            f"(need > {10.0 * arr.element_side:.3g} m)")
    arr._check_index(m_x, m_z)
    eps = node.epsilon(arr)
    r = node.range_r
    rm = r * math.sqrt(1.0 - 2.0 * m_x * eps * node.cos_x
                       - 2.0 * m_z * eps * node.cos_z
                       + (m_x * m_x + m_z * m_z) * eps * eps)
    return arr.element_area * r * node.cos_y / (4.0 * math.pi * rm ** 3)


def build_channel(model, arr, node):
    """Construct the explicit channel vector of `node` under `model`."""
    if isinstance(model, str):
        model = ChannelModel.from_string(model)
    mxv, mzv = arr.index_vectors()
    entries = _backend.channel_entries(
        _MODEL_ID[model], mxv, mzv,
        node.range_r, node.cos_x, node.cos_y, node.cos_z,
        arr.spacing_d, arr.wavelength, arr.element_area)
    return ChannelVector(model=model, entries=entries, array=arr, node=node)


def dump_channel(vec, path):
    """Write a channel vector as little-endian interleaved re/im doubles.

    16-byte header: magic "NFCH", u16 version, u16 reserved, u32 m_x, u32 m_z.
    """
    header = struct.pack("<4sHHII", _MAGIC, _FORMAT_VERSION, 0,
                         vec.array.m_x, vec.array.m_z)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(vec.entries, dtype="<c16").tobytes())


def load_channel(path):
    """Read back a dump; returns (m_x, m_z, entries)."""
    with open(path, "rb") as fh:
        header = fh.read(16)
        if len(header) != 16:
            raise DomainError(f"{path}: truncated header")
        magic, version, _, m_x, m_z = struct.unpack("<4sHHII", header)
        if magic != _MAGIC:
            raise DomainError(f"{path}: bad magic {magic!r}")
        if version != _FORMAT_VERSION:
            raise DomainError(f"{path}: unsupported format version {version}")
        raw = fh.read()
    if len(raw) != 16 * m_x * m_z:
        raise DomainError(f"{path}: payload holds {len(raw)} bytes, "
                          f"header promises {16 * m_x * m_z}")
    entries = np.frombuffer(raw, dtype="<c16")
    return int(m_x), int(m_z), entries.astype(np.complex128)
