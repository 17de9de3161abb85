"""Secrecy capacity against the transmit SNR."""

from ._common import sweep_line_figure


def build(spec):
    return sweep_line_figure(
        spec, x_col="gamma_db", y_col="capacity_bits",
        oracle_col="capacity_oracle_bits",
        asymptote_col="capacity_asymptote_bits",
        title="Secrecy capacity vs transmit SNR",
        x_label="transmit SNR (dB)", y_label="secrecy capacity (bits/use)")
