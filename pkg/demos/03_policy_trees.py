"""Full policy trees with agent-labelled edges, exported to Graphviz DOT.

A host policy is a complete plan: one coordinate subset per reachable state,
with one child per agent reply. Terminal nodes are double-circled in the DOT
output and already-smooth states are filled blue.
"""

import random

from hironaka import build_policy_tree, initial_state, variant
from hironaka.cli.dot import tree_to_dot
from hironaka.policies import OptimalHost, ZeillingerHost

rules = variant("basic-shifted")
d4 = initial_state([(2, 0, 0), (0, 2, 1), (0, 0, 3)], rules)

for host in (OptimalHost(rules, depth_cap=10), ZeillingerHost()):
    tree = build_policy_tree(d4, host, rules, depth_cap=12, rng=random.Random(0))
    leaves = tree.leaves()
    print(f"host {host.name}: {len(tree.nodes)} nodes, "
          f"{len(leaves)} leaves, deepest {max(n.depth for n in leaves)}, "
          f"all terminal: {all(n.terminal for n in leaves)}")
    path = f"d4_{host.name.split(':')[0]}.dot"
    with open(path, "w") as fh:
        fh.write(tree_to_dot(tree))
    print(f"  wrote {path} (render with: dot -Tpdf {path} -o tree.pdf)")
