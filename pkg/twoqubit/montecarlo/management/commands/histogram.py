# TwoQubit
from twoqubit.core.commands import TwoQubitCommand, positive_float, positive_int
from twoqubit.montecarlo.histogram import concurrence_histogram


class Command(TwoQubitCommand):
    """Concurrence distribution of the physical states at one radius"""

    help = "Histogram of the concurrence over physical states with |n| = radius"
    seeded = True
    setting_defaults = {
        "samples": "TWOQUBIT_MC_SAMPLES",
        "bins": "TWOQUBIT_HISTOGRAM_BINS",
        "block_size": "TWOQUBIT_MC_BLOCK_SIZE",
    }
    default_output = "histogram"

    def add_arguments(self, parser):
        parser.add_argument("radius", type=positive_float, help="Radius |n| in (0, sqrt(3)]")
        parser.add_argument("--samples", type=positive_int, help="Sphere samples")
        parser.add_argument("--bins", type=positive_int, help="Bins on [0, 1]")
        parser.add_argument("--block-size", type=positive_int, help="Samples per random block")
        self.add_seed_argument(parser)
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        histogram = concurrence_histogram(
            options["radius"],
            options["samples"],
            options["bins"],
            options["seed"],
            tol=options["tol"],
            tol_c=options["tol_c"],
            block_size=options["block_size"],
        )
        summary = {
            "radius": histogram.radius,
            "status": histogram.status,
            "physical": histogram.physical,
            "samples": histogram.samples,
            "p_zero": histogram.p_zero,
            "pure_shell": histogram.pure_shell,
        }
        self.write(options, summary, header=["c_low", "c_high", "probability"], rows=histogram.rows())
        self.stdout.write(f"{histogram.physical} physical of {histogram.samples} samples")
