import math

import pytest

from nfpls import ArrayGeometry, NodeGeometry

WAVELENGTH = 0.125
SPACING = WAVELENGTH / 2.0
ELEMENT_SIDE = WAVELENGTH / math.sqrt(4.0 * math.pi)  # element area wl^2/(4 pi)
ELEMENT_AREA = ELEMENT_SIDE ** 2

THETA_B = math.pi / 3.0
PHI_B = 2.0 * math.pi / 3.0


def make_array(m_x=51, m_z=51):
    return ArrayGeometry(m_x=m_x, m_z=m_z, spacing_d=SPACING,
                         element_side=ELEMENT_SIDE, wavelength=WAVELENGTH)


@pytest.fixture(scope="session")
def baseline_array():
    return make_array()


@pytest.fixture(scope="session")
def small_array():
    return make_array(7, 7)


@pytest.fixture(scope="session")
def node_bob():
    return NodeGeometry(10.0, THETA_B, PHI_B)


@pytest.fixture(scope="session")
def node_eve_codir():
    return NodeGeometry(20.0, THETA_B, PHI_B)
