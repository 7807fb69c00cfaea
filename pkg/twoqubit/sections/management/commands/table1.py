# TwoQubit
from twoqubit.algebra.generators import LABELS
from twoqubit.core.commands import TwoQubitCommand
from twoqubit.sections.shapes import table1


class Command(TwoQubitCommand):
    """Shape of every section, S for squares and D for discs"""

    help = "Write the lower-triangular table of section shapes"
    default_output = "table1"

    def add_arguments(self, parser):
        self.add_output_arguments(parser)

    def run(self, options):
        table = table1()
        rows = [
            [row, label, *letters, *[""] * (len(LABELS) - len(letters))]
            for row, (label, letters) in enumerate(zip(LABELS, table), start=1)
        ]
        counts = {letter: sum(line.count(letter) for line in table) for letter in "SD"}
        self.write(options, {"counts": counts}, header=["row", "label", *LABELS], rows=rows)
        self.stdout.write(f"{counts['S']} square and {counts['D']} disc sections")
