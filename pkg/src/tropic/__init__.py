"""Tropical linear algebra over linearly ordered idempotent semifields.

Distances to linear spans, solvability and the complete solution set of
``A x = d``, linear (in)dependence of column systems, and brute-force
oracles for cross-checking the closed forms.
"""

from .dependence import (ReductionTrace, delta_independence, dependence_residual, is_dependent,
                         is_independent, reduce_to_independent, systems_equivalent)
from .errors import *  # noqa: F401,F403
from .linalg import (Matrix, RowVector, Vector, conjugate, from_columns, identity,
                     is_regular_matrix, is_regular_vector, mat_leq, mat_vec, matrix, row_mat,
                     row_vec, row_vector, scalar_mul, support, vec_add, vec_eq, vec_leq, vec_row,
                     vector, zeros)
from .metric import INFINITE, Distance, chebyshev, min_distance, rho
from .residual import (ConsistencyResult, SpanDistanceResult, consistify, distance_to_span,
                       principal_solution, residual_delta, residual_delta_reduced)
from .semifield import (MAX_PLUS, MAX_PLUS_Q, MAX_TIMES, MIN_PLUS, ZERO, Kind, MaxPlus,
                        MaxPlusRational, MaxTimes, MinPlus, Semifield, get_semifield)
from .solver import (UNBOUNDED, BoxSolution, GeneralSolution, SolutionReport, Verdict,
                     general_solution, preprocess, pseudo_solve, solve, verify)

__version__ = "0.1.0"
