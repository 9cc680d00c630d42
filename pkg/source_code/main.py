#!/usr/bin/env python3
"""
QVA Verify

An exact engine and verification CLI for quantum vertex algebras of
Zamolodchikov-Faddeev type.
"""

import sys
import argparse
import logging

from models.config import SUITE_NAMES, Config
from models.report import EXIT_CONFIG, EXIT_FAILED, EXIT_OK
from utils.errors import ConfigError, ParseError
from utils.file_io import dump_json, write_json_file

logger = logging.getLogger(__name__)


def _add_config_arguments(parser):
    parser.add_argument(
        "--config",
        help="Path to a JSON configuration file"
    )
    parser.add_argument(
        "--preset",
        help="Named preset overriding l, q, p and half_subalgebra"
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug logging"
    )


def parse_arguments(argv=None):
    """
    Parse command line arguments.

    Args:
        argv: Argument list, defaults to sys.argv[1:]

    Returns:
        argparse.Namespace: Parsed arguments
    """
    parser = argparse.ArgumentParser(
        description="QVA Verify - exact checks for quantum vertex algebras of ZF type"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Run verification suites")
    _add_config_arguments(run_parser)
    run_parser.add_argument(
        "--suites",
        help=f"Comma-separated suites from {','.join(SUITE_NAMES)}"
    )
    run_parser.add_argument("--order", type=int, help="Truncation order O")
    run_parser.add_argument("--max-weight", help="Weight cutoff, e.g. 2 or 5/2")
    run_parser.add_argument("--report", help="Write the JSON report to this path")
    run_parser.add_argument(
        "--timings",
        action="store_true",
        help="Include wall times in the report"
    )

    reduce_parser = subparsers.add_parser("reduce", help="Print the normal form of a word")
    _add_config_arguments(reduce_parser)
    reduce_parser.add_argument("word", help="Word such as 'X[1,0] Y[1,-1]'")

    character_parser = subparsers.add_parser("character", help="Print graded dimensions")
    _add_config_arguments(character_parser)
    character_parser.add_argument("--max-weight", help="Weight cutoff")

    ybe_parser = subparsers.add_parser("ybe", help="Run the unitarity and QYBE checks")
    _add_config_arguments(ybe_parser)
    ybe_parser.add_argument("--order", type=int, help="Truncation order O")

    return parser.parse_args(argv)


def load_config(args):
    """
    Build the configuration from the file, the preset and the overrides.

    Raises:
        ConfigError: If the file or any field is invalid
    """
    config = Config.from_file(args.config) if args.config else Config()
    if args.preset:
        config.apply_preset(args.preset)
    if getattr(args, "suites", None):
        config.set_value("suites", [name.strip() for name in args.suites.split(",") if name.strip()])
    if getattr(args, "order", None) is not None:
        config.set_value("order", args.order)
    if getattr(args, "max_weight", None):
        config.set_value("max_weight", args.max_weight)
    if getattr(args, "report", None):
        config.set_value("report_path", args.report)
    return config


def command_run(args, config):
    from suites import SuiteRunner

    report = SuiteRunner(config).run()
    data = report.to_dict(timings=args.timings)
    report_path = config.get_value("report_path")
    if report_path and not write_json_file(report_path, data):
        logger.error(f"Could not write report to {report_path}")
    sys.stdout.write(dump_json(data))
    return report.exit_code()


def command_reduce(args, config):
    from qalgebra import AlgebraElement, normal_form

    spec = config.build_spec()
    element = AlgebraElement.parse(args.word, spec.l)
    print(normal_form(element, spec).format())
    return EXIT_OK


def command_character(args, config):
    from arith import HalfInt
    from vacuum import VacuumModule, character_check

    report = character_check(VacuumModule(config.build_spec()), config.get_value("max_weight"))
    sys.stdout.write(dump_json(report.to_dict()))
    if not report.ok:
        return EXIT_FAILED
    logger.info(f"Graded dimensions agree up to weight {HalfInt.of(config.get_value('max_weight'))}")
    return EXIT_OK


def command_ybe(args, config):
    from suites import SuiteRunner

    report = SuiteRunner(config).run(["ybe"])
    sys.stdout.write(dump_json(report.to_dict()))
    return report.exit_code()


COMMANDS = {
    "run": command_run,
    "reduce": command_reduce,
    "character": command_character,
    "ybe": command_ybe,
}


def main(argv=None):
    """Main application entry point."""
    # Parse command line arguments
    args = parse_arguments(argv)

    # Configure logging
    if args.debug:
        level = logging.DEBUG
    elif args.command in ("run", "ybe"):
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")

    try:
        config = load_config(args)
        return COMMANDS[args.command](args, config)
    except (ConfigError, ParseError) as e:
        logger.error(str(e))
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
