"""The other rule sets: vertex pruning, rational offsets, and weights.

Each variant bundles a transform offset, a pruning mode, a translation, a
terminal rule, and legality constraints; the engine runs them all through
the same move pipeline.
"""

from fractions import Fraction

from hironaka import (
    apply_move,
    initial_state,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
    variant,
)

# hull-vertex pruning: non-vertex points vanish on construction
hauser = variant("hauser")
state = initial_state([(2, 0), (0, 2), (1, 1)], hauser)
print("hauser state (midpoint pruned):", state.config.points)

# rational coordinates, offset -1, terminal when a point's sum drops to 1
poly = variant("polyhedra")
state = initial_state([(Fraction(3, 2), 0), (0, Fraction(5, 4))], poly)
print("polyhedra legal host moves:", legal_host_moves(state, poly))
after = apply_move(state, (0, 1), 0, poly)
print("after the offset move:", after.config.points,
      "terminal:", is_terminal(after, poly))

# weighted game: the agent may only pick weight-minimal coordinates, and the
# chosen weight is subtracted from the rest of the subset
thom = variant("thom")
state = initial_state([(2, 0, 0), (0, 2, 0), (0, 0, 3)], thom, weights=(2, 1, 1))
I = legal_host_moves(state, thom)[0]
print("thom host move:", I, "legal agent replies:", legal_agent_moves(state, I, thom))
after = apply_move(state, I, legal_agent_moves(state, I, thom)[0], thom)
print("after:", after.config.points, "weights:", after.weights)
