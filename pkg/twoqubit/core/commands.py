"""Shared behaviour of the twoqubit management commands

Options default to None and are resolved in order from the command line, the
``--config`` JSON file and the TWOQUBIT_* settings. Library errors are turned into
CommandErrors carrying the exit code of their class.
"""

# Django
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

# Standard Library
import argparse
import functools
import logging
import shlex
import sys

# TwoQubit
from twoqubit.core.exceptions import ConfigurationError, ConsistencyError, DomainError, ValidationError
from twoqubit.core.utils import output_path, provenance, read_json, write_csv, write_json

logger = logging.getLogger(__name__)

EXIT_IO = 2
EXIT_USAGE = 64
EXIT_SOFTWARE = 70

FORMATS = ("csv", "json")
# options every command has that are not part of its own configuration
BASE_OPTIONS = {
    "verbosity",
    "settings",
    "pythonpath",
    "traceback",
    "no_color",
    "force_color",
    "skip_checks",
    "stdout",
    "stderr",
    "config",
}


def positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def non_negative_int(value):
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def positive_float(value):
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return number


def usage_error(parser, message):
    """argparse errors exit with EX_USAGE instead of 2"""
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


class TwoQubitCommand(BaseCommand):
    """Base class for the commands writing data files

    Subclasses implement ``run(options)`` and list the settings backing their
    options in ``setting_defaults``.
    """

    requires_system_checks = []
    setting_defaults = {}
    tolerance_options = ()
    seeded = False
    default_output = None

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.argv = None
        self.parser = None

    def run_from_argv(self, argv):
        self.argv = argv
        super().run_from_argv(argv)

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = functools.partial(usage_error, parser)
        parser.add_argument("--config", help="JSON file supplying any option by its name")
        self.parser = parser
        return parser

    def add_output_arguments(self, parser):
        parser.add_argument(
            "--output",
            default=self.default_output,
            help="Output file stem; the command writes STEM.csv and STEM.json",
        )
        parser.add_argument(
            "--format",
            choices=FORMATS,
            help="Format of the data file (default: csv); json puts the data in STEM.json",
        )

    def add_seed_argument(self, parser):
        parser.add_argument(
            "--seed",
            type=non_negative_int,
            help=f"Random seed (default: TWOQUBIT_SEED or {settings.TWOQUBIT_DEFAULT_SEED})",
        )

    def add_tolerance_arguments(self, parser):
        parser.add_argument(
            "--tol",
            type=positive_float,
            help=f"Positivity tolerance (default: {settings.TWOQUBIT_POSITIVITY_TOL})",
        )
        parser.add_argument(
            "--tol-c",
            type=positive_float,
            help=f"Concurrence zero tolerance (default: {settings.TWOQUBIT_CONCURRENCE_TOL})",
        )

    def configured_options(self):
        """Actions that a config file may set, keyed by destination"""
        # pylint: disable=protected-access
        return {
            action.dest: action
            for action in self.parser._actions
            if action.option_strings and action.dest not in BASE_OPTIONS and action.dest != "help"
        }

    def resolve(self, options):
        """Fill unset options from the config file and then from settings"""
        options = dict(options)
        if options.get("config"):
            actions = self.configured_options()
            values = read_json(options["config"])
            if not isinstance(values, dict):
                raise ConfigurationError("A config file must hold a JSON object")
            unknown = set(values) - set(actions)
            if unknown:
                raise ConfigurationError(
                    f"Unknown option(s) in {options['config']}: {', '.join(sorted(unknown))}"
                )
            for dest, value in values.items():
                if options.get(dest) is None:
                    options[dest] = self.convert(actions[dest], value)
        defaults = {"tol": "TWOQUBIT_POSITIVITY_TOL", "tol_c": "TWOQUBIT_CONCURRENCE_TOL"}
        if self.seeded:
            defaults["seed"] = "TWOQUBIT_DEFAULT_SEED"
        defaults.update(self.setting_defaults)
        for dest, name in defaults.items():
            if options.get(dest) is None:
                options[dest] = getattr(settings, name)
        options["format"] = options.get("format") or "csv"
        return options

    @staticmethod
    def convert(action, value):
        items = value if isinstance(value, list) else [value]
        try:
            if action.type is not None:
                items = [action.type(str(item)) for item in items]
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise ConfigurationError(f"Invalid value for {action.dest}: {exc}") from None
        if action.choices is not None and any(item not in action.choices for item in items):
            raise ConfigurationError(f"Invalid choice {value!r} for {action.dest}")
        return items if isinstance(value, list) else items[0]

    def command_line(self, options):
        if self.argv is not None:
            return " ".join(shlex.quote(part) for part in self.argv[1:])
        words = [self.name]
        for dest, value in sorted(options.items()):
            if dest in BASE_OPTIONS or value is None or value is False:
                continue
            flag = "--" + dest.replace("_", "-")
            if value is True:
                words.append(flag)
            elif isinstance(value, (list, tuple)):
                words.extend([flag, *map(str, value)])
            else:
                words.extend([flag, str(value)])
        return " ".join(shlex.quote(word) for word in words)

    @property
    def name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def provenance(self, options):
        tolerances = {
            dest: options[dest]
            for dest in ("tol", "tol_c", *self.tolerance_options)
            if options.get(dest) is not None
        }
        return provenance(
            self.command_line(options),
            seed=options.get("seed") if self.seeded else None,
            tolerances=tolerances,
        )

    def write(self, options, summary, header=None, rows=None):
        """Write the data file and the JSON summary for the ``--output`` stem"""
        stem = options.get("output")
        if not stem:
            return
        info = self.provenance(options)
        summary = dict(summary)
        if header is not None:
            rows = [list(row) for row in rows]
            if options["format"] == "csv":
                write_csv(output_path(stem, "csv"), header, rows, info)
            else:
                summary["data"] = {"header": header, "rows": rows}
        write_json(output_path(stem, "json"), summary, info)
        logger.info("Wrote %s output to %s", self.name, stem)

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except OSError as exc:
            raise CommandError(str(exc), returncode=EXIT_IO) from exc
        except (DomainError, ValidationError, ConfigurationError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except ConsistencyError as exc:
            raise CommandError(str(exc), returncode=EXIT_SOFTWARE) from exc

    def handle(self, *args, **options):
        return self.run(self.resolve(options))

    def run(self, options):
        raise NotImplementedError
