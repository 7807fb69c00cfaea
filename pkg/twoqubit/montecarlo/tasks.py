# Django
from celery import shared_task

# Standard Library
import logging

# Local
from .sampling import radius_counts

logger = logging.getLogger(__name__)


@shared_task(name="twoqubit.montecarlo.tasks.estimate_radius")
def estimate_radius(seed, k, radius, samples, block_size, tol, tol_c):
    """Count physical and separable samples on the sphere of radius r_k"""
    physical, separable = radius_counts(seed, k, radius, samples, block_size, tol, tol_c)
    logger.debug(
        "Radius %d (r = %.4f): %d physical, %d separable of %d",
        k,
        radius,
        physical,
        separable,
        samples,
    )
    return {"k": k, "physical": physical, "separable": separable}
