"""One builder module per result figure; the driver looks them up here."""

from . import (capacity_perturbation, capacity_vs_M, capacity_vs_re,
               capacity_vs_snr, cospsi_vs_re, depth_vs_M, power_vs_M,
               power_vs_R0, power_vs_re)

BUILDERS = {
    "capacity_vs_snr": capacity_vs_snr.build,
    "capacity_vs_M": capacity_vs_M.build,
    "capacity_vs_re": capacity_vs_re.build,
    "capacity_perturbation": capacity_perturbation.build,
    "cospsi_vs_re": cospsi_vs_re.build,
    "depth_vs_M": depth_vs_M.build,
    "power_vs_R0": power_vs_R0.build,
    "power_vs_re": power_vs_re.build,
    "power_vs_M": power_vs_M.build,
}
