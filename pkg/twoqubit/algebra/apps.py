# Django
from django.apps import AppConfig
from django.core.exceptions import ImproperlyConfigured


class AlgebraConfig(AppConfig):
    name = "twoqubit.algebra"
    verbose_name = "SU(4) Algebra"

    def ready(self):
        # pylint: disable=import-outside-toplevel
        from .structure import check_structure_constants

        mismatches = check_structure_constants()
        if mismatches:
            raise ImproperlyConfigured(
                "Generator ordering is inconsistent with the tabulated structure "
                "constants: " + "; ".join(mismatches[:5])
            )
