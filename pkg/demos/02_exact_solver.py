"""Exact worst-case resolution depth for the classical surface singularities.

The solver computes the minimal number of blow-ups the host can guarantee
against every possible agent, by exhaustive memoized minimax.
"""

import time

from hironaka import initial_state, minimax_solve, variant

rules = variant("basic-shifted")

DU_VAL = {
    "A2 (x^2+y^2+z^3)": [(2, 0, 0), (0, 2, 0), (0, 0, 3)],
    "A3 (x^2+y^2+z^4)": [(2, 0, 0), (0, 2, 0), (0, 0, 4)],
    "D4 (x^2+y^2z+z^3)": [(2, 0, 0), (0, 2, 1), (0, 0, 3)],
    "D5 (x^2+y^2z+z^4)": [(2, 0, 0), (0, 2, 1), (0, 0, 4)],
    "E8 (x^2+y^3+z^5)": [(2, 0, 0), (0, 3, 0), (0, 0, 5)],
}

for name, points in DU_VAL.items():
    t0 = time.perf_counter()
    result = minimax_solve(initial_state(points, rules), rules, depth_cap=12)
    print(
        f"{name:22s} optimal worst-case steps = {result.value}  "
        f"(explored {result.explored} states, {time.perf_counter() - t0:.2f}s)"
    )
