# TwoQubit
from twoqubit.core.commands import TwoQubitCommand
from twoqubit.core.exceptions import DomainError
from twoqubit.core.utils import format_float
from twoqubit.states.concurrence import concurrence
from twoqubit.states.io import read_state
from twoqubit.states.polarization import as_vector
from twoqubit.states.positivity import positivity
from twoqubit.states.pure import pure_state


class Command(TwoQubitCommand):
    """Concurrence and positivity report of a single state"""

    help = "Compute the Wootters concurrence of a state given as n, six angles or a JSON file"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--state", help='JSON file with "n" or "rho_re"/"rho_im"')
        source.add_argument("--n", nargs=15, type=float, metavar="N", help="Polarization vector")
        source.add_argument(
            "--angles",
            nargs=6,
            type=float,
            metavar=("THETA1", "THETA2", "THETA3", "PHI1", "PHI2", "PHI3"),
            help="Pure state angles",
        )
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def state(self, options):
        if options.get("state"):
            return read_state(options["state"])
        if options.get("n") is not None:
            return as_vector(options["n"])
        if options.get("angles") is not None:
            return pure_state(*options["angles"])
        raise DomainError("Give a state with --state, --n or --angles")

    def run(self, options):
        n = self.state(options)
        report = positivity(n, tol=options["tol"])
        result = concurrence(n, tol=options["tol"])
        separable = result.C <= options["tol_c"]
        self.write(
            options,
            {
                "n": n,
                "C": result.C,
                "q": result.q,
                "lambdas": result.lambdas,
                "positivity": report.as_dict(),
                "separable": separable,
            },
        )
        self.stdout.write(f"C = {format_float(result.C)}")
