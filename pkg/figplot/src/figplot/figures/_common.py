"""Shared machinery for the line-plot figures."""

import matplotlib.pyplot as plt
import numpy as np

from ..style import ASYMPTOTE_LINE, ORACLE_MARKER, model_label, series_style


def sweep_line_figure(spec, *, x_col, y_col, oracle_col=None, asymptote_col=None,
                      title, x_label, y_label, x_log=False, y_log=False,
                      extra=None):
    """One axes, one solid line per model, oracle markers and dashed
    asymptotes where the CSV provides them.  Non-finite cells (the `inf`
    token, skipped oracles) break the curves instead of plotting."""
    fig, ax = plt.subplots(figsize=(6.4, 4.4), constrained_layout=True)
    for model, table in spec.tables.items():
        x = np.asarray(table.finite(x_col))
        style = series_style(model)
        ax.plot(x, np.asarray(table.finite(y_col)), **style)
        if oracle_col and table.has_values(oracle_col):
            ax.plot(x, np.asarray(table.finite(oracle_col)),
                    color=style["color"], label=f"{model_label(model)} oracle",
                    **ORACLE_MARKER)
        if asymptote_col and table.has_values(asymptote_col):
            ax.plot(x, np.asarray(table.finite(asymptote_col)),
                    color=style["color"],
                    label=f"{model_label(model)} asymptote", **ASYMPTOTE_LINE)
    if x_log:
        ax.set_xscale("log")
    if y_log:
        ax.set_yscale("log")
    ax.set_title(title)
    ax.set_xlabel(x_label)
    ax.set_ylabel(y_label)
    if extra:
        extra(ax, spec)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    return fig
