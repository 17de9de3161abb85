"""Minimum required power against the per-side element count."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="m_side", y_col="power_w", oracle_col="power_oracle_w",
        asymptote_col="power_asymptote_w",
        title="Minimum required power vs array size",
        x_label="elements per side", y_label="minimum required power (W)",
        x_log=True, y_log=True)
