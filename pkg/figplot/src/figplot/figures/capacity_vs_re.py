"""Secrecy capacity against the eavesdropper's range."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="r_e_m", y_col="capacity_bits",
        oracle_col="capacity_oracle_bits",
        asymptote_col="capacity_asymptote_bits",
        title="Secrecy capacity vs eavesdropper range",
        x_label="eavesdropper range (m)",
        y_label="secrecy capacity (bits/use)", x_log=True)
