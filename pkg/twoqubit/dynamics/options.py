"""Command line options for model parameters

Every parameter of every model gets one option named after it (``--g``, ``--Gamma1``).
Options given for a model that lacks the parameter are rejected when the model
parameters are built.
"""

# Standard Library
import dataclasses

# Local
from .registry import MODELS


def parameter_fields():
    fields = {}
    for model in MODELS.values():
        for field in dataclasses.fields(model.params_class):
            fields.setdefault(field.name, []).append(model.name)
    return fields


def add_parameter_arguments(parser):
    group = parser.add_argument_group("model parameters")
    for name, models in parameter_fields().items():
        group.add_argument(f"--{name}", dest=name, metavar="VALUE", help=f"({', '.join(models)})")


def parameter_values(options):
    """The model parameters that were set, as strings or config values"""
    return {name: options[name] for name in parameter_fields() if options.get(name) is not None}
