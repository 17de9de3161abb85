"""Minimum required power against the target secrecy rate."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="r0_bits", y_col="power_w", oracle_col="power_oracle_w",
        asymptote_col="power_asymptote_w",
        title="Minimum required power vs target secrecy rate",
        x_label="target secrecy rate (bits/use)",
        y_label="minimum required power (W)", y_log=True)
