"""Figure rendering for nfpls sweep datasets.

Consumes the CSV files written by `nfpls <experiment>` and produces one
figure per experiment (line plots; a heatmap for the angular-perturbation
study), as both SVG and PNG.  Rendering is a pure function of the CSV bytes:
no timestamps or random identifiers are embedded.
"""

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "figplot"

from .dataset import EXPECTED_HEADERS, EmptyDataError, FigureSpec, SchemaError, load_table
from .driver import EXPERIMENTS, render, render_all

__version__ = "0.1.0"

__all__ = ["FigureSpec", "SchemaError", "EmptyDataError", "load_table",
           "EXPECTED_HEADERS", "EXPERIMENTS", "render", "render_all"]
