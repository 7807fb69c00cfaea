# TwoQubit
from twoqubit.classifier.categories import classify
from twoqubit.core.commands import TwoQubitCommand, positive_int
from twoqubit.dynamics.options import add_parameter_arguments, parameter_values
from twoqubit.dynamics.registry import get_model
from twoqubit.dynamics.subspace import subspace_meta
from twoqubit.states.polarization import as_vector
from twoqubit.states.trajectory import read_trajectory


class Command(TwoQubitCommand):
    """Classify a trajectory read from a CSV file"""

    help = (
        "Find the zero set and the evolution category of a trajectory file. A category is "
        "reported even when the horizon does not settle the zero set; horizon_undecided is "
        "then true in the summary and the category describes the sampled window only"
    )
    setting_defaults = {"point_width": "TWOQUBIT_POINT_WIDTH"}
    tolerance_options = ("point_width",)

    def add_arguments(self, parser):
        parser.add_argument("input", help="CSV with columns t, [n_1..n_15,] C")
        parser.add_argument(
            "--n-infinity", nargs=15, type=float, metavar="N", help="Limiting polarization vector"
        )
        parser.add_argument(
            "--subspace",
            choices=["d3", "d8", "ye", "zj"],
            help="Predict categories from this model's dynamical subspace",
        )
        parser.add_argument("--point-width", type=positive_int, help="Widest zero run that is a point")
        add_parameter_arguments(parser)
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def meta(self, options):
        name = options.get("subspace")
        if name is None:
            return None
        values = parameter_values(options)
        if name == "d8":
            return subspace_meta(name)
        return subspace_meta(name, get_model(name).params(values))

    def run(self, options):
        meta = self.meta(options)
        n_infinity = options.get("n_infinity")
        if n_infinity is None and meta is not None:
            n_infinity = meta.n_infinity
        trajectory = read_trajectory(
            options["input"], n_infinity=None if n_infinity is None else as_vector(n_infinity)
        )
        classification = classify(
            trajectory, meta, tol_c=options["tol_c"], point_width=options["point_width"]
        )
        summary = {"input": options["input"], "samples": len(trajectory), **classification.as_dict()}
        self.write(
            options,
            summary,
            header=["start", "end", "point"],
            rows=(
                [interval.start, interval.end, interval.point]
                for interval in classification.zeros.intervals
            ),
        )
        undecided = " (horizon undecided)" if classification.zeros.horizon_undecided else ""
        self.stdout.write(f"category {classification.category.value}{undecided}")
