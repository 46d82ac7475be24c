"""
Every solution of A x = d
=========================

Three columns ``(0, -inf)``, ``(0, 0)`` and ``(-inf, 0)`` can all build
``d = (1, 1)``: the middle column alone, or the outer two together.  The
solution set is the union of one box per such minimal choice.
"""

import random

from tropic import MAX_PLUS_Q, from_columns, general_solution, solve, vector, verify
from tropic.io import format_box

q = MAX_PLUS_Q
A = from_columns(q, [[0, None], [0, 0], [None, 0]])
d = vector(q, [1, 1])

report = solve(A, d)
print("verdict   ", report.verdict.value)
print("principal ", report.principal)

# "=v" pins a component, "<=v" bounds it from above
gen = general_solution(A, d)
for box in gen.family:
    print("box       ", format_box(box, q))

# any point drawn from a box solves the system
rng = random.Random(1)
for box in gen.family:
    x = box.sample(q, rng)
    print(f"  sample {x} solves: {verify(A, d, x)}")

# unsolvable systems still have a best approximation
B = from_columns(q, [[0, 0]])
bad = solve(B, vector(q, [1, 2]))
print("verdict   ", bad.verdict.value, "residual", bad.residual, "pseudo", bad.pseudo)
