"""Walk through one game by hand: states, moves, pruning, translation.

The running example is the surface singularity x^2 + y^2 + z^3 = 0, whose
exponent vectors are (2,0,0), (0,2,0), (0,0,3).
"""

from hironaka import apply_move, initial_state, is_terminal, legal_host_moves, variant

rules = variant("basic-shifted")
state = initial_state([(2, 0, 0), (0, 2, 0), (0, 0, 3)], rules)

print("initial points:", state.config.points)
print("host moves:", legal_host_moves(state, rules))

# The host blows up the origin (all three coordinates); the agent picks the
# chart. Chart 0: every point gets its coordinate sum written into slot 0,
# dominated points are pruned, and the translation step re-touches the axes.
after0 = apply_move(state, (0, 1, 2), 0, rules)
print("agent chart 0 ->", after0.config.points, "terminal:", is_terminal(after0, rules))

# Chart 2 keeps the game alive: the singularity is not yet resolved there.
after2 = apply_move(state, (0, 1, 2), 2, rules)
print("agent chart 2 ->", after2.config.points, "terminal:", is_terminal(after2, rules))

# One more blow-up in the surviving chart finishes the resolution.
state = after2
for reply in (0, 1, 2):
    nxt = apply_move(state, (0, 1, 2), reply, rules)
    print(f"  second move, chart {reply} ->", nxt.config.points,
          "terminal:", is_terminal(nxt, rules))
