# TwoQubit
from twoqubit.channels.maps import check_semigroup
from twoqubit.classifier.categories import classify
from twoqubit.core.commands import TwoQubitCommand, positive_float, positive_int
from twoqubit.dynamics.options import add_parameter_arguments, parameter_values
from twoqubit.dynamics.registry import MODELS, build_trajectory, get_model
from twoqubit.states.trajectory import CSV_HEADER, trajectory_rows


class Command(TwoQubitCommand):
    """Closed-form trajectory of a model, classified"""

    help = "Sample the trajectory of a model and classify its entanglement evolution"
    setting_defaults = {
        "samples": "TWOQUBIT_TRAJECTORY_SAMPLES",
        "depth": "TWOQUBIT_DECAY_DEPTH",
        "point_width": "TWOQUBIT_POINT_WIDTH",
    }
    tolerance_options = ("point_width",)

    def add_arguments(self, parser):
        parser.add_argument("model", choices=sorted(MODELS), help="Model")
        parser.add_argument("--samples", type=positive_int, help="Minimum number of time samples")
        parser.add_argument(
            "--depth", type=positive_float, help="Run until the slowest rate has decayed by e^-depth"
        )
        parser.add_argument("--point-width", type=positive_int, help="Widest zero run that is a point")
        add_parameter_arguments(parser)
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        params, trajectory, meta = build_trajectory(
            options["model"],
            parameter_values(options),
            samples=options["samples"],
            depth=options["depth"],
        )
        classification = classify(
            trajectory, meta, tol_c=options["tol_c"], point_width=options["point_width"]
        )
        summary = {
            "model": trajectory.model,
            "params": trajectory.params,
            "samples": len(trajectory),
            "n_infinity": trajectory.n_infinity,
            "semigroup": check_semigroup(get_model(options["model"]).family(params)).as_dict(),
            **classification.as_dict(),
        }
        self.write(options, summary, header=CSV_HEADER, rows=trajectory_rows(trajectory))
        self.stdout.write(
            f"{trajectory.model}: category {classification.category.value}"
        )
