import subprocess
import sys

import pytest

# grid trims keep the dataset build quick; capacity_vs_snr keeps its full
# default configuration because the acceptance check reads its endpoint
_CONFIGS = {
    "capacity_vs_snr": "",
    "capacity_vs_M": "grid_stop = 101\ngrid_points = 8\n",
    "capacity_vs_re": "grid_points = 13\n",
    "capacity_perturbation": "grid_points = 7\nm_x = 9\nm_z = 9\n",
    "cospsi_vs_re": "grid_points = 13\nm_x = 11\nm_z = 11\n",
    "depth_vs_M": "grid_start = 31\ngrid_stop = 101\ngrid_points = 5\n",
    "power_vs_R0": "grid_points = 12\n",
    "power_vs_re": "grid_points = 13\n",
    "power_vs_M": "grid_stop = 101\ngrid_points = 8\n",
}


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    """A complete CSV set produced through the sweep CLI."""
    root = tmp_path_factory.mktemp("datasets")
    for experiment, text in _CONFIGS.items():
        config = root / f"{experiment}.cfg"
        config.write_text(text, encoding="utf-8")
        result = subprocess.run(
            [sys.executable, "-m", "nfpls.cli", experiment,
             "--config", str(config), "--out", str(root)],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
    return root
