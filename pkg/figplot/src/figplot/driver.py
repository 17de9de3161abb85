"""Render-all driver and the `render_figures` command line.

    render_figures <csv-dir> <out-dir> [--only EXPERIMENT]

Exit codes: 0 success, 2 for missing/invalid datasets (the message carries
the column diff on schema mismatches).
"""

import argparse
import sys
from pathlib import Path

import matplotlib.pyplot as plt

from .dataset import MODELS, EmptyDataError, FigureSpec, SchemaError
from .figures import BUILDERS

EXPERIMENTS = tuple(BUILDERS)

_SAVE_OPTS = {
    # keep output a pure function of the inputs: no creation dates embedded
    "svg": {"metadata": {"Date": None}},
    "png": {"dpi": 150},
}


def make_spec(experiment, csv_dir, out_dir, formats=("svg", "png")):
    csv_dir = Path(csv_dir)
    paths = {model: csv_dir / f"{experiment}_{model}.csv" for model in MODELS
             if (csv_dir / f"{experiment}_{model}.csv").exists()}
    if not paths:
        raise FileNotFoundError(
            f"no {experiment}_<model>.csv files under {csv_dir}")
    return FigureSpec(experiment=experiment, csv_paths=paths,
                      out_base=Path(out_dir) / experiment, formats=tuple(formats))


def build_figure(spec):
    """Load the datasets and build (but not save) the matplotlib figure."""
    spec.load()
    return BUILDERS[spec.experiment](spec)


def render(spec):
    """Render one figure to every requested format; returns written paths."""
    fig = build_figure(spec)  # raises before any file is written
    spec.out_base.parent.mkdir(parents=True, exist_ok=True)
    written = []
    try:
        for fmt in spec.formats:
            path = spec.out_base.with_suffix(f".{fmt}")
            fig.savefig(path, format=fmt, **_SAVE_OPTS.get(fmt, {}))
            written.append(path)
    finally:
        plt.close(fig)
    return written


def render_all(csv_dir, out_dir, only=None):
    """Render every experiment found under csv_dir (or just `only`)."""
    names = (only,) if only else EXPERIMENTS
    written = []
    for name in names:
        written.extend(render(make_spec(name, csv_dir, out_dir)))
    return written


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render nfpls sweep CSVs into the result figures")
    parser.add_argument("csv_dir", help="directory holding <experiment>_<model>.csv")
    parser.add_argument("out_dir", help="directory for the rendered figures")
    parser.add_argument("--only", choices=EXPERIMENTS, default=None,
                        help="render a single experiment")
    args = parser.parse_args(argv)
    try:
        written = render_all(args.csv_dir, args.out_dir, only=args.only)
    except (SchemaError, EmptyDataError, FileNotFoundError) as exc:
        print(f"render_figures: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
