import argparse
import logging
import sys
from typing import Callable, List, Optional

from . import __version__
from .config import Config
from .exceptions import Error, IdentityViolation
from .models.common import Natural, Positive, Seed
from .models.stirling import KINDS, StirlingTable
from .session import EXIT_IDENTITY_VIOLATION, EXIT_USAGE, open_session


def _value_type(cls: type, name: str) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            return cls(text).value
        except (TypeError, ValueError) as e:
            raise argparse.ArgumentTypeError(f"invalid {name} {text!r}: {e}")

    return parse


natural = _value_type(Natural, "nonnegative integer")
positive = _value_type(Positive, "positive integer")
seed = _value_type(Seed, "64-bit seed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        dest="output_format",
        choices=Config.FORMATS,
        default="markdown",
        help="report format (default: markdown)",
    )
    common.add_argument(
        "--out",
        dest="output_path",
        default=None,
        help="write the report to this path instead of standard output",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to standard error (repeat for debug output)",
    )

    parser = argparse.ArgumentParser(
        prog="cauchy-conv",
        description="Exact Cauchy numbers, Stirling numbers, uniform-sum "
        "densities, and verification of higher-order Cauchy convolutions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    p = commands.add_parser("cauchy", parents=[common], help="Cauchy numbers c_n")
    p.add_argument("--n-max", type=natural, default=10)

    p = commands.add_parser(
        "stirling", parents=[common], help="Stirling number triangles"
    )
    p.add_argument("--kind", choices=KINDS, default="first")
    p.add_argument("--n-max", type=natural, default=10)

    p = commands.add_parser(
        "density", parents=[common], help="density of a sum of m uniforms"
    )
    p.add_argument("--m", type=positive, required=True)
    p.add_argument("--at", required=True, help='point as "p/q" or an integer')

    p = commands.add_parser(
        "verify", parents=[common], help="verify the convolution identity on a box"
    )
    p.add_argument("--m-max", type=positive, default=4)
    p.add_argument("--mu-max", type=natural, default=4)
    p.add_argument("--n-max", type=natural, default=6)
    p.add_argument("--parallelism", type=positive, default=1)
    p.add_argument(
        "--double-sum-budget",
        type=natural,
        default=Config.MAX_DOUBLE_SUM_TERMS,
        help="skip brute-force double sums with more terms than this",
    )
    p.add_argument(
        "--egf",
        action="store_true",
        help="also compare Cauchy powers with factorial moments as sequences",
    )
    p.add_argument("--order", type=natural, default=None)

    p = commands.add_parser(
        "montecarlo", parents=[common], help="Monte Carlo factorial moment check"
    )
    p.add_argument("--m", type=positive, required=True)
    p.add_argument("--mu", type=natural, default=0)
    p.add_argument("--n", type=natural, default=0)
    p.add_argument("--samples", type=positive, default=Config.DEFAULT_SAMPLES)
    p.add_argument(
        "--seed",
        type=seed,
        default=None,
        help=f"master seed (default: ${Config.SEED_ENV_VAR}, else fresh entropy)",
    )

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def config_from_args(args: argparse.Namespace) -> Config:
    fields = {
        name: value
        for name, value in vars(args).items()
        if name != "verbose" and value is not None
    }
    return Config(**fields)


def main(
    argv: Optional[List[str]] = None, table: Optional[StirlingTable] = None
) -> int:
    """Entry point. `table` replaces the Stirling table the run would build."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = config_from_args(args)
        return open_session(config, table).run()
    except IdentityViolation as e:
        print(f"cauchy-conv: identity violation: {e}", file=sys.stderr)
        return EXIT_IDENTITY_VIOLATION
    except Error as e:
        print(f"cauchy-conv: {e}", file=sys.stderr)
        return EXIT_USAGE

