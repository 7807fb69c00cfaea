# TwoQubit
from twoqubit.classifier.critical import critical_scan
from twoqubit.core.commands import TwoQubitCommand, positive_float, positive_int
from twoqubit.core.utils import format_float
from twoqubit.dynamics.options import add_parameter_arguments, parameter_values
from twoqubit.dynamics.registry import MODELS


class Command(TwoQubitCommand):
    """Scan one model parameter for critical values"""

    help = (
        "Categorize a model over a parameter range and bisect every category change. Values "
        "whose horizon does not settle the zero set still get a category and are listed "
        "under horizon_undecided in the summary"
    )
    setting_defaults = {
        "steps": "TWOQUBIT_CRITICAL_STEPS",
        "samples": "TWOQUBIT_TRAJECTORY_SAMPLES",
        "depth": "TWOQUBIT_DECAY_DEPTH",
        "point_width": "TWOQUBIT_POINT_WIDTH",
        "critical_tol": "TWOQUBIT_CRITICAL_TOL",
    }
    tolerance_options = ("point_width", "critical_tol")

    def add_arguments(self, parser):
        parser.add_argument("model", choices=sorted(MODELS), help="Model")
        parser.add_argument("parameter", help="Parameter to scan")
        parser.add_argument("lo", type=float, help="Lower end of the range")
        parser.add_argument("hi", type=float, help="Upper end of the range")
        parser.add_argument("--steps", type=positive_int, help="Grid values, at least 3")
        parser.add_argument("--samples", type=positive_int, help="Minimum number of time samples")
        parser.add_argument(
            "--depth", type=positive_float, help="Run until the slowest rate has decayed by e^-depth"
        )
        parser.add_argument("--point-width", type=positive_int, help="Widest zero run that is a point")
        parser.add_argument("--critical-tol", type=positive_float, help="Bisection width")
        add_parameter_arguments(parser)
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        fixed = parameter_values(options)
        fixed.pop(options["parameter"], None)
        scan = critical_scan(
            options["model"],
            options["parameter"],
            options["lo"],
            options["hi"],
            options["steps"],
            fixed=fixed,
            samples=options["samples"],
            depth=options["depth"],
            tol=options["critical_tol"],
            tol_c=options["tol_c"],
            point_width=options["point_width"],
        )
        self.write(options, scan.as_dict(), header=[scan.parameter, "category"], rows=scan.rows())
        values = ", ".join(format_float(value) for value in scan.critical_values) or "none"
        self.stdout.write(f"critical {scan.parameter}: {values}")
