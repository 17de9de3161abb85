"""Command-line interface.

    nfpls <experiment> [--config PATH] [--out DIR] [--threads N]
                       [--models upw,usw,nusw]
    nfpls validate --config PATH
    nfpls selftest

Exit codes: 0 success (numerical-quality warnings go to stderr), 1 selftest
failure or internal numerical error, 2 invalid configuration.
"""

import argparse
import dataclasses
import sys

from .exceptions import ConfigError, NumericalError
from .sweep import EXPERIMENTS, run_experiment, validate_config


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nfpls",
        description="Secrecy-performance sweeps for near-field and far-field "
                    "wiretap links")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in EXPERIMENTS:
        p = sub.add_parser(name, help=f"run the {name} sweep")
        p.add_argument("--config", default=None, help="config file (key = value lines)")
        p.add_argument("--out", default=None, help="output directory for CSVs")
        p.add_argument("--threads", type=int, default=None, help="worker threads")
        p.add_argument("--models", default=None,
                       help="comma-separated subset of upw,usw,nusw")

    v = sub.add_parser("validate", help="parse a config and echo the result")
    v.add_argument("--config", required=True)
    v.add_argument("--experiment", default=None, choices=EXPERIMENTS,
                   help="experiment context when the file names none")

    sub.add_parser("selftest", help="run the oracle-agreement suite")
    return parser


def _apply_cli_overrides(config, args):
    updates = {}
    if args.out is not None:
        updates["out_dir"] = args.out
    if args.threads is not None:
        if args.threads < 1:
            raise ConfigError("--threads must be at least 1")
        updates["threads"] = args.threads
    if args.models is not None:
        models = tuple(m.strip().lower() for m in args.models.split(","))
        for m in models:
            if m not in ("upw", "usw", "nusw"):
                raise ConfigError(f"--models: unknown model {m!r}")
        updates["models"] = models
    return dataclasses.replace(config, **updates) if updates else config


def main(argv=None):
    args = _build_parser().parse_args(argv)

    if args.command == "selftest":
        from .selftest import run_selftest

        return 0 if run_selftest() else 1

    try:
        if args.command == "validate":
            config = validate_config(args.config, experiment=args.experiment)
            for key, value in config.effective_items().items():
                print(f"{key} = {value}")
            return 0
        config = validate_config(args.config, experiment=args.command)
        config = _apply_cli_overrides(config, args)
    except (ConfigError, OSError) as exc:
        print(f"nfpls: {exc}", file=sys.stderr)
        return 2

    try:
        paths = run_experiment(config)
    except NumericalError as exc:
        print(f"nfpls: numerical failure: {exc}", file=sys.stderr)
        return 1
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
