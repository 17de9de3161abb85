"""Beamformer-angle cosine against the eavesdropper's range."""

from ._common import sweep_line_figure


def _threshold_line(ax, spec):
    ax.axhline(0.5, color="0.3", linestyle=":", linewidth=1.0,
               label="3 dB threshold")


def build(spec):
    return sweep_line_figure(
        spec, x_col="r_e_m", y_col="cos_psi", oracle_col="cos_psi_oracle",
        title="Beamformer alignment vs eavesdropper range",
        x_label="eavesdropper range (m)", y_label="cos(psi) = 1 - rho",
        x_log=True, extra=_threshold_line)
