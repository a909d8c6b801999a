"""Monte Carlo tree search for either seat, against a fixed opponent.

Simulations value a line of play as 0.99^d where d is the number of steps
until termination (0 if it never ends), so the host hunts short resolutions
while the agent hunts long ones.
"""

from hironaka import MctsConfig, initial_state, mcts_decide, variant
from hironaka.policies import ChooseAllHost, ChooseFirstAgent, MctsHost

rules = variant("basic-shifted")
a2 = initial_state([(2, 0, 0), (0, 2, 0), (0, 0, 3)], rules)

# As the agent against the choose-all host, only chart 2 keeps the game alive.
reply = mcts_decide(a2, "agent", ChooseAllHost(), rules, MctsConfig(seed=1))
print("agent planning at the A2 root vs choose-all: picks chart", reply)

# As the host against choose-first, search for a fast-terminating subset.
move = mcts_decide(a2, "host", ChooseFirstAgent(), rules,
                   MctsConfig(simulations=400, seed=1))
print("host planning at the A2 root vs choose-first: picks I =", move)

# Wrapped as a policy, decisions are cached and deterministic per state.
host = MctsHost(MctsConfig(simulations=200, seed=7), opponent=ChooseFirstAgent())
print("as a reusable policy:", host.name, "->", host.decide(a2, rules, None))
