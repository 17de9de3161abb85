"""Minimum required power against the eavesdropper's range."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="r_e_m", y_col="power_w", oracle_col="power_oracle_w",
        asymptote_col="power_asymptote_w",
        title="Minimum required power vs eavesdropper range",
        x_label="eavesdropper range (m)",
        y_label="minimum required power (W)", x_log=True, y_log=True)
