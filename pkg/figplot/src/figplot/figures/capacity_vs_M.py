"""Secrecy capacity against the per-side element count."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="m_side", y_col="capacity_bits",
        oracle_col="capacity_oracle_bits",
        asymptote_col="capacity_asymptote_bits",
        title="Secrecy capacity vs array size",
        x_label="elements per side", y_label="secrecy capacity (bits/use)",
        x_log=True)
