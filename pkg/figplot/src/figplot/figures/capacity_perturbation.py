"""Normalized secrecy capacity over small angular offsets of the
eavesdropper, one heatmap per model."""

import matplotlib.pyplot as plt
import numpy as np

from ..style import model_label


def _grid(table):
    dtheta = table.finite("dtheta_rad")
    dphi = table.finite("dphi_rad")
    values = table.finite("capacity_normalized")
    ts = sorted(set(dtheta))
    ps = sorted(set(dphi))
    lookup = {(t, p): v for t, p, v in zip(dtheta, dphi, values)}
    grid = np.array([[lookup[(t, p)] for p in ps] for t in ts])
    return np.asarray(ts), np.asarray(ps), grid


def build(spec):
    n = len(spec.tables)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n, 4.0),
                             constrained_layout=True, squeeze=False)
    mesh = None
    for ax, (model, table) in zip(axes[0], spec.tables.items()):
        ts, ps, grid = _grid(table)
        mesh = ax.pcolormesh(ps, ts, grid, vmin=0.0, vmax=1.0,
                             shading="nearest", cmap="viridis")
        ax.set_title(model_label(model))
        ax.set_xlabel("elevation offset (rad)")
        ax.set_ylabel("azimuth offset (rad)")
    fig.suptitle("Normalized secrecy capacity vs angular offset")
    fig.colorbar(mesh, ax=list(axes[0]), label="capacity / max capacity",
                 shrink=0.9)
    return fig
