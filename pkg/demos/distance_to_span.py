"""
How far is a vector from a linear span?
=======================================

A single column spans the line ``t + (0, 0)``.  The point ``(1, 2)`` is off
that line, and the closest points sit half a unit away in the max-plus sense.
"""

from tropic import MAX_PLUS_Q, distance_to_span, mat_vec, matrix, rho, vector
from tropic.oracle import GridSpec, grid_min_distance

q = MAX_PLUS_Q
A = matrix(q, [[0], [0]])
d = vector(q, [1, 2])

# closed form: residual, minimizer and the nearest point of the span
span = distance_to_span(A, d)
print("residual      ", span.delta)
print("minimizer     ", span.minimizer)
print("nearest point ", span.nearest_point)

# the same number by brute force over a grid of candidate x
best, x = grid_min_distance(A, d, GridSpec(-5, 5, q.scalar("1/2")))
print("grid search   ", best, "at", x)

# moving away from the minimizer only makes things worse
for t in ["1", "3/2", "2"]:
    y = vector(q, [q.scalar(t)])
    print(f"  x = {t:>3}: rho(Ax, d) = {rho(mat_vec(A, y), d)}")

# a vector inside a two-column span is at unit distance (0 in max-plus)
B = matrix(q, [[2, 1], [-1, 4]])
print("inside        ", distance_to_span(B, vector(q, [3, 4])).delta)
print("outside       ", distance_to_span(B, vector(q, [6, 1])).delta)
