"""3 dB depth of insecurity against the per-side element count."""

import math

from ._common import sweep_line_figure


def _mark_minimum_count(ax, spec):
    # dashed vertical at the antenna count that pulls the security radius
    # out to the receiver; below it the depth is right-infinite
    for table in spec.tables.values():
        m_s = next((v for v in table.column("m_s") if v is not None), None)
        if m_s is not None and math.isfinite(m_s):
            ax.axvline(math.sqrt(m_s), color="0.3", linestyle="--",
                       linewidth=1.0, label="minimum side count")
        break
    handles, labels = ax.get_legend_handles_labels()
    seen = {}
    for h, l in zip(handles, labels):
        seen.setdefault(l, h)
    ax.legend(seen.values(), seen.keys(), loc="best", fontsize=8)


def build(spec):
    return sweep_line_figure(
        spec, x_col="m_side", y_col="depth_m", oracle_col="depth_scan_m",
        title="3 dB depth of insecurity vs array size",
        x_label="elements per side", y_label="depth of insecurity (m)",
        x_log=True, y_log=True, extra=_mark_minimum_count)
