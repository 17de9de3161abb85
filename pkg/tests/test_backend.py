import math

import numpy as np
import pytest

from nfpls import _backend, build_channel, rho_nusw
from nfpls._kernels_nb import (channel_entries as nb_entries,
                               quad_double_sum as nb_double,
                               quad_single_sum as nb_single)
from nfpls._kernels_np import (channel_entries as np_entries,
                               quad_double_sum as np_double,
                               quad_single_sum as np_single)

from conftest import PHI_B, THETA_B, make_array
from nfpls import NodeGeometry


def _kernel_args():
    arr = make_array(21, 19)
    node = NodeGeometry(7.3, 1.2, 1.9)
    mxv, mzv = arr.index_vectors()
    return (mxv, mzv, node.range_r, node.cos_x, node.cos_y, node.cos_z,
            arr.spacing_d, arr.wavelength, arr.element_area)


class TestKernelEquivalence:
    @pytest.mark.parametrize("model_id", [0, 1, 2])
    def test_channel_entries(self, model_id):
        args = _kernel_args()
        a = np_entries(model_id, *args)
        b = nb_entries(model_id, *args)
        assert np.allclose(a, b, rtol=1e-13, atol=0.0)

    def test_quad_sums(self):
        t = np.arange(1, 101, dtype=float)
        zeta = np.cos((2 * t - 1) * math.pi / 200.0)
        weights = np.sqrt(1.0 - zeta ** 2)
        args = (zeta, weights, 0.2, 0.17, 0.43, -0.5, 0.41, -0.52, 0.5,
                502.6, 1005.3, 0.75)
        a = np_double(*args)
        b = nb_double(*args)
        assert abs(a - b) <= 1e-12 * abs(a)
        args1 = (zeta, weights, 0.31, -0.5, -0.48, 0.5, 502.6, 1005.3, 0.75)
        assert abs(np_single(*args1) - nb_single(*args1)) <= 1e-12 * abs(
            np_single(*args1))


class TestBackendSwitch:
    def test_available_and_active(self):
        assert "numpy" in _backend.available()
        assert "numba" in _backend.available()
        assert _backend.active() in _backend.available()

    def test_switch_gives_matching_results(self, node_bob, node_eve_codir):
        arr = make_array(15, 15)
        previous = _backend.use("numpy")
        try:
            h_np = build_channel("nusw", arr, node_bob)
            rho_np = rho_nusw(arr, node_bob, node_eve_codir)
        finally:
            _backend.use(previous)
        _backend.use("numba")
        try:
            h_nb = build_channel("nusw", arr, node_bob)
            rho_nb = rho_nusw(arr, node_bob, node_eve_codir)
        finally:
            _backend.use(previous)
        assert np.allclose(h_np.entries, h_nb.entries, rtol=1e-13, atol=0.0)
        assert rho_np == pytest.approx(rho_nb, rel=1e-11)

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            _backend.use("fortran")
