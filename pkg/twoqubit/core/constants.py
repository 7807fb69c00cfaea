"""Default numerical tolerances shared by the library and the settings"""

# positivity test on a2, a3, a4
POSITIVITY_TOL = 1e-10
# concurrence at or below this value counts as zero
CONCURRENCE_TOL = 1e-9
# eigenvalues of rho below -EIGEN_TOL reject the state, the rest are clipped at zero
EIGEN_TOL = 1e-10
# Hermiticity and unit trace checks on density matrices
DENSITY_TOL = 1e-10
# Kraus completeness
COMPLETENESS_TOL = 1e-10
# composition residual allowed for families claiming the semigroup property
SEMIGROUP_TOL = 1e-10
# slack when testing |n(t) - n_inf| for monotonic decrease
DISTANCE_SLACK = 1e-9
# bisection width for critical parameter values
CRITICAL_TOL = 1e-6
# zero runs spanning at most this many sample steps are points
POINT_WIDTH = 2
# trajectories run until |n - n_inf| has decayed by exp(-DECAY_DEPTH)
DECAY_DEPTH = 40.0
