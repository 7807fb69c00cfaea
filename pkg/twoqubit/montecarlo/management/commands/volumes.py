# TwoQubit
from twoqubit.core.commands import TwoQubitCommand, positive_int
from twoqubit.core.utils import format_float
from twoqubit.montecarlo.profile import radial_profile, volume_estimate


class Command(TwoQubitCommand):
    """Monte Carlo volumes of the physical and the separable states"""

    help = "Estimate the radial profiles and the volumes of M and S"
    seeded = True
    setting_defaults = {
        "samples": "TWOQUBIT_MC_SAMPLES",
        "radial_steps": "TWOQUBIT_MC_RADIAL_STEPS",
        "block_size": "TWOQUBIT_MC_BLOCK_SIZE",
    }
    default_output = "volumes"

    def add_arguments(self, parser):
        parser.add_argument("--samples", type=positive_int, help="Samples per radius")
        parser.add_argument(
            "--radial-steps", type=positive_int, help="Radial intervals, must be even"
        )
        parser.add_argument("--block-size", type=positive_int, help="Samples per random block")
        self.add_seed_argument(parser)
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        profile = radial_profile(
            options["radial_steps"],
            options["samples"],
            options["seed"],
            tol=options["tol"],
            tol_c=options["tol_c"],
            block_size=options["block_size"],
        )
        estimate = volume_estimate(profile)
        summary = {
            **estimate.as_dict(),
            "samples_per_radius": profile.samples_per_radius,
            "radial_steps": profile.steps,
        }
        self.write(
            options,
            summary,
            header=["r", "p_phys", "p_phys_err", "p_sep", "p_sep_err"],
            rows=profile.rows(),
        )
        self.stdout.write(
            f"V_phys = {format_float(estimate.V_phys.value)}, "
            f"V_sep = {format_float(estimate.V_sep.value)}, "
            f"ratio = {format_float(estimate.ratio.value)}"
        )
