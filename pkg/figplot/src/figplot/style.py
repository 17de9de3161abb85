"""Fixed series styling shared by every figure (no per-run variation)."""

MODEL_STYLE = {
    "nusw": {"color": "#1f77b4", "label": "NUSW"},
    "usw": {"color": "#2ca02c", "label": "USW"},
    "upw": {"color": "#d62728", "label": "UPW"},
}

ORACLE_MARKER = {"marker": "o", "markersize": 4, "linestyle": "none",
                 "markerfacecolor": "none"}
ASYMPTOTE_LINE = {"linestyle": "--", "linewidth": 1.0, "alpha": 0.8}


def series_style(model):
    return dict(MODEL_STYLE[model], linewidth=1.6)


def model_label(model):
    return MODEL_STYLE[model]["label"]
