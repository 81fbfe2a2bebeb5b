"""
skewstream command line.

    skewstream run <config> [-o DIR] [--format csv|jsonl]
    skewstream gen-stream <drift-spec> -o FILE
    skewstream report <records...> -o DIR

Exit codes: 0 success, 1 I/O failure, 2 configuration error, 3 data error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from ..core.errors import ConfigError, DataError, GenerationError
from ..core.rng import RngStream
from ..drift.generators import generate, stream_to_csv
from .config import load_config, load_drift_spec
from .report import emit_report, load_records
from .runner import run_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_DATA = 3


def _cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.output:
        cfg.output = args.output
    if args.format:
        cfg.format = args.format
    records = run_experiment(cfg)
    written = emit_report(records, cfg.output, cfg.format)
    print(f"✓ {len(records)} records written to {cfg.output} ({len(written)} files)")
    return EXIT_OK


def _cmd_gen_stream(args) -> int:
    spec = load_drift_spec(args.spec)
    stream = generate(spec, RngStream(spec.seed, "drift"))
    stream_to_csv(stream, args.output)
    print(f"✓ {spec.kind.value}: {len(stream)} instances ({stream.counts.n_pos} positive) written to {args.output}")
    return EXIT_OK


def _cmd_report(args) -> int:
    frame = load_records(args.records)
    written = emit_report(frame, args.output, args.format)
    print(f"✓ {len(frame)} records summarised into {len(written)} files under {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewstream",
        description="Batch and online cost-sensitive ensembles for imbalanced streams")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment config")
    run.add_argument("config")
    run.add_argument("-o", "--output", help="output directory (overrides the config)")
    run.add_argument("--format", choices=["csv", "jsonl"], help="record format (overrides the config)")
    run.set_defaults(func=_cmd_run)

    gen = sub.add_parser("gen-stream", help="generate a drift stream as CSV")
    gen.add_argument("spec")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=_cmd_gen_stream)

    report = sub.add_parser("report", help="summarise record files")
    report.add_argument("records", nargs="+")
    report.add_argument("-o", "--output", required=True)
    report.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    report.set_defaults(func=_cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s - %(levelname)s - %(message)s')
    try:
        return args.func(args)
    except (ConfigError, GenerationError) as e:
        print(f"✗ configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as e:
        print(f"✗ data error: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"✗ cannot write output: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
