# TwoQubit
from twoqubit.algebra.generators import commutation_class
from twoqubit.core.commands import TwoQubitCommand, positive_int
from twoqubit.sections.shapes import section_boundary, section_type


class Command(TwoQubitCommand):
    """Boundary of the physical region in the (n_i, n_j) plane"""

    help = "Write the boundary of a two-dimensional section of the state space"
    setting_defaults = {"samples": "TWOQUBIT_SECTION_SAMPLES"}
    default_output = None

    def add_arguments(self, parser):
        parser.add_argument("i", help="First generator, index 1-15 or label such as XX")
        parser.add_argument("j", help="Second generator")
        parser.add_argument("--samples", type=positive_int, help="Boundary points")
        self.add_output_arguments(parser)

    def run(self, options):
        shape = section_type(options["i"], options["j"])
        points = section_boundary(shape.i, shape.j, options["samples"])
        self.write(
            options,
            {
                "i": shape.i.name,
                "j": shape.j.name,
                "kind": shape.kind.value,
                "type": shape.letter,
                "commutation": commutation_class(shape.i, shape.j).value,
            },
            header=["section_i", "section_j", "shape", "x", "y"],
            rows=[[int(shape.i), int(shape.j), shape.letter, x, y] for x, y in points],
        )
        self.stdout.write(f"{shape.i.name}-{shape.j.name}: {shape.kind.value}")
