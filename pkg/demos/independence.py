"""
Linear independence and reduction
=================================

A column system is independent when no column is a combination of the
others.  The measure ``delta`` is the smallest residual of a column against
the rest; it is above unit exactly for independent systems.
"""

from tropic import (MAX_PLUS_Q, delta_independence, from_columns, is_independent, matrix,
                    reduce_to_independent, systems_equivalent)

q = MAX_PLUS_Q

A = matrix(q, [[0, 0], [2, 1]])
print("delta", delta_independence(A), "independent", is_independent(A))

# (0, 0) = -1 + (1, 1), so the first column is redundant
C = from_columns(q, [[0, 0], [1, 1], [0, 1]])
trace = reduce_to_independent(C)
for i, step in enumerate(trace.step_residuals, 1):
    print(f"  column {i}: residual against the rest = {step}")
kept = C.take_columns(trace.kept)
print("kept columns", [i + 1 for i in trace.kept])
print("same span as before:", systems_equivalent(C, kept))
