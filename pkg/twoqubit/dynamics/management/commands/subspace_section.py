# TwoQubit
from twoqubit.core.commands import TwoQubitCommand, positive_float, positive_int
from twoqubit.dynamics.subspace_sections import (
    CUTS,
    boundary_curves,
    get_cut,
    subspace_grid,
    subspace_outline,
)


class Command(TwoQubitCommand):
    """Grid over a dynamical subspace or one of its plane cuts"""

    help = (
        "Write a2, a3, a4, the physical flag and the concurrence on a grid over the ye or zj "
        "subspace (ye, zj) or one of their planes (ye-iz0, ye-xx0, zj-xy0)"
    )
    setting_defaults = {"samples": "TWOQUBIT_SUBSPACE_SAMPLES"}

    def add_arguments(self, parser):
        parser.add_argument("cut", choices=sorted(CUTS), help="Subspace or plane")
        parser.add_argument(
            "--samples",
            type=positive_int,
            help="Grid points per axis, also the points per boundary curve; a whole subspace "
            "writes samples^3 rows",
        )
        parser.add_argument(
            "--extent",
            type=positive_float,
            help="Half width of the grid (default: 1 for a subspace, sqrt(3) for a plane)",
        )
        self.add_tolerance_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        cut = get_cut(options["cut"])
        grid = subspace_grid(cut, options["samples"], extent=options["extent"], tol=options["tol"])
        entangled = grid.entangled(options["tol_c"])
        summary = {
            "cut": cut.name,
            "subspace": cut.subspace.name,
            "axes": list(cut.free_axes),
            "zero": cut.zero,
            "samples": options["samples"],
            "points": len(grid),
            "physical": int(grid.physical.sum()),
            "entangled": int(entangled.sum()),
            "max_concurrence": float(grid.concurrence[grid.physical].max(initial=0.0)),
            "physical_volume": grid.physical_volume,
            "separable_volume": grid.separable_volume(options["tol_c"]),
        }
        if cut.zero is None:
            summary["outline"] = subspace_outline(cut)
        else:
            summary["curves"] = boundary_curves(cut, options["samples"])
        self.write(options, summary, header=grid.header, rows=grid.rows())
        self.stdout.write(
            f"{cut.name}: {summary['physical']} physical, {summary['entangled']} entangled "
            f"of {summary['points']}"
        )
