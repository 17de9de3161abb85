import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nfpls import (ArrayGeometry, DomainError, NodeGeometry, direction_cosines,
                   exact_distance, fresnel_distance_approx, region_boundaries)

from conftest import ELEMENT_SIDE, SPACING, WAVELENGTH, make_array


class TestDirectionCosines:
    def test_boresight(self):
        cx, cy, cz = direction_cosines(math.pi / 2, math.pi / 2)
        assert cx == pytest.approx(0.0, abs=1e-15)
        assert cy == pytest.approx(1.0, abs=1e-15)
        assert cz == pytest.approx(0.0, abs=1e-15)

    def test_reference_direction(self):
        # independent trigonometric evaluation of the same angles
        theta, phi = math.pi / 3, 2 * math.pi / 3
        expected = (math.sin(phi) * math.cos(theta),
                    math.sin(phi) * math.sin(theta),
                    math.cos(phi))
        got = direction_cosines(theta, phi)
        assert got == pytest.approx(expected, rel=1e-15)
        assert got == pytest.approx((0.43301, 0.75, -0.5), abs=5e-6)

    @given(st.floats(0.01, math.pi - 0.01))
    def test_quarter_azimuth_kills_x(self, phi):
        cx, cy, _ = direction_cosines(math.pi / 2, phi)
        assert abs(cx) < 1e-15
        assert cy == pytest.approx(math.sin(phi), rel=1e-15)

    @pytest.mark.parametrize("theta,phi", [(0.0, 1.0), (math.pi, 1.0),
                                           (1.0, 0.0), (1.0, math.pi),
                                           (-0.3, 1.0), (1.0, 4.0)])
    def test_domain(self, theta, phi):
        with pytest.raises(DomainError):
            direction_cosines(theta, phi)

    @given(st.floats(1e-6, math.pi - 1e-6), st.floats(1e-6, math.pi - 1e-6))
    def test_unit_sphere(self, theta, phi):
        cx, cy, cz = direction_cosines(theta, phi)
        assert abs(cx * cx + cy * cy + cz * cz - 1.0) <= 1e-12


class TestArrayGeometry:
    def test_derived_quantities(self):
        arr = make_array(51, 51)
        assert arr.m_total == 2601
        assert arr.element_area == pytest.approx(WAVELENGTH ** 2 / (4 * math.pi),
                                                 rel=1e-15)
        assert arr.wavenumber == pytest.approx(2 * math.pi / WAVELENGTH, rel=1e-15)

    @pytest.mark.parametrize("m_x,m_z", [(0, 1), (2, 3), (3, -1), (4, 4)])
    def test_odd_counts_enforced(self, m_x, m_z):
        with pytest.raises(DomainError):
            ArrayGeometry(m_x, m_z, SPACING, ELEMENT_SIDE, WAVELENGTH)

    def test_spacing_below_element_side(self):
        with pytest.raises(DomainError):
            ArrayGeometry(3, 3, ELEMENT_SIDE / 2, ELEMENT_SIDE, WAVELENGTH)

    def test_node_invariants(self):
        with pytest.raises(DomainError):
            NodeGeometry(-1.0, 1.0, 1.0)
        node = NodeGeometry(5.0, 1.1, 0.9)
        assert node.cos_y > 0.0
        assert np.linalg.norm(node.position) == pytest.approx(5.0, rel=1e-14)


class TestExactDistance:
    def test_center_element(self, baseline_array, node_bob):
        assert exact_distance(baseline_array, node_bob, 0, 0) == node_bob.range_r

    def test_boresight_offset(self, baseline_array):
        node = NodeGeometry(10.0, math.pi / 2, math.pi / 2)
        eps = baseline_array.spacing_d / node.range_r
        expected = node.range_r * math.sqrt(1.0 + eps * eps)
        assert exact_distance(baseline_array, node, 1, 0) == pytest.approx(
            expected, rel=1e-15)

    def test_against_cartesian_norm_full_grid(self, baseline_array, node_bob):
        # coordinate-construction oracle over every element
        pos = node_bob.position
        for m_x in range(-25, 26, 5):
            for m_z in range(-25, 26, 5):
                direct = np.linalg.norm(pos - baseline_array.element_position(m_x, m_z))
                got = exact_distance(baseline_array, node_bob, m_x, m_z)
                assert abs(got - direct) <= 1e-12 * direct

    @given(st.integers(-25, 25), st.integers(-25, 25),
           st.floats(0.5, 300.0), st.floats(0.1, math.pi - 0.1),
           st.floats(0.1, math.pi - 0.1))
    def test_cartesian_norm_property(self, m_x, m_z, r, theta, phi):
        arr = make_array(51, 51)
        node = NodeGeometry(r, theta, phi)
        direct = float(np.linalg.norm(node.position - arr.element_position(m_x, m_z)))
        got = exact_distance(arr, node, m_x, m_z)
        assert abs(got - direct) <= 1e-12 * direct

    def test_index_bounds(self, baseline_array, node_bob):
        with pytest.raises(DomainError):
            exact_distance(baseline_array, node_bob, 26, 0)


class TestFresnelApprox:
    def test_center(self, baseline_array, node_bob):
        assert fresnel_distance_approx(baseline_array, node_bob, 0, 0) == 10.0

    def test_boresight_diagonal(self, baseline_array):
        node = NodeGeometry(10.0, math.pi / 2, math.pi / 2)
        eps = baseline_array.spacing_d / node.range_r
        got = fresnel_distance_approx(baseline_array, node, 1, 1)
        assert got == pytest.approx(node.range_r * (1.0 + eps * eps), rel=1e-15)

    def test_accuracy_beyond_fresnel_distance(self, baseline_array):
        # the dropped bilinear cross term dominates right at the boundary for
        # corner elements at oblique angles, so the tight bound starts at 2x
        _, fresnel = region_boundaries(baseline_array)
        for r, tol in ((fresnel, 5e-3), (2 * fresnel, 1e-3), (80.0, 1e-3)):
            node = NodeGeometry(r, math.pi / 3, 2 * math.pi / 3)
            for m_x in range(-25, 26, 5):
                for m_z in range(-25, 26, 5):
                    exact = exact_distance(baseline_array, node, m_x, m_z)
                    approx = fresnel_distance_approx(baseline_array, node, m_x, m_z)
                    assert abs(approx - exact) <= tol * exact

    def test_error_monotone_in_range(self, baseline_array):
        def worst_error(r):
            node = NodeGeometry(r, math.pi / 3, 2 * math.pi / 3)
            errs = []
            for m_x in (-25, -10, 10, 25):
                for m_z in (-25, -10, 10, 25):
                    exact = exact_distance(baseline_array, node, m_x, m_z)
                    approx = fresnel_distance_approx(baseline_array, node, m_x, m_z)
                    errs.append(abs(approx - exact) / exact)
            return max(errs)

        radii = np.geomspace(5.0, 500.0, 12)
        errors = [worst_error(r) for r in radii]
        for earlier, later in zip(errors, errors[1:]):
            assert later <= earlier * (1.0 + 1e-12)


class TestRegionBoundaries:
    def test_single_element(self):
        arr = make_array(1, 1)
        assert region_boundaries(arr) == (0.0, 0.0)

    def test_baseline_square(self, baseline_array):
        rayleigh, fresnel = region_boundaries(baseline_array)
        diag = 50.0 * SPACING * math.sqrt(2.0)
        assert baseline_array.aperture == pytest.approx(diag, rel=1e-15)
        assert rayleigh == pytest.approx(2.0 * diag ** 2 / WAVELENGTH, rel=1e-15)
        assert rayleigh == pytest.approx(312.5, rel=1e-12)
        assert fresnel == pytest.approx(0.5 * math.sqrt(diag ** 3 / WAVELENGTH),
                                        rel=1e-15)

    def test_linear_array(self):
        arr = make_array(1, 51)
        rayleigh, _ = region_boundaries(arr)
        assert arr.aperture == pytest.approx(3.125, rel=1e-15)
        assert rayleigh == pytest.approx(156.25, rel=1e-12)
