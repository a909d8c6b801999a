"""Tree construction, an exact minimax oracle, and UCT planning.

The minimax solver computes the minimal number of steps within which the
host can force termination against every agent, up to a depth cap; the
policy-tree builder reproduces full host-policy trees with agent-labelled
edges; the MCTS planner picks moves for either role against a fixed
opponent policy.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Optional

from .engine import (
    AgentMove,
    GameState,
    HostMove,
    TerminalStateError,
    apply_move,
    is_smooth_marker,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
)
from .rules import VariantRules
from .util import derive_seed

GAMMA_SHAPE = 0.99  # converts steps-to-termination into a bounded value signal


# ---------------------------------------------------------------------------
# exhaustive minimax
# ---------------------------------------------------------------------------

class MinimaxSolver:
    """Memoized worst-case solver reusable across many queries.

    value(s) = 0 at terminal states, else
    min over host moves I of (1 + max over agent replies i of value(s')),
    where None stands for "exceeds the depth cap".
    """

    def __init__(self, rules: VariantRules, depth_cap: int):
        if depth_cap < 1:
            raise ValueError("depth_cap must be >= 1")
        self.rules = rules
        self.depth_cap = depth_cap
        # key -> (value, True) for exact values, (bound, False) for "value > bound"
        self._memo: dict = {}
        self._best: dict = {}

    def value(self, state: GameState, budget: Optional[int] = None) -> Optional[int]:
        if budget is None:
            budget = self.depth_cap
        if is_terminal(state, self.rules):
            return 0
        key = state.key()
        hit = self._memo.get(key)
        if hit is not None:
            v, exact = hit
            if exact:
                return v if v <= budget else None
            if budget <= v:
                return None
        if budget <= 0:
            return None

        best: Optional[int] = None
        best_move: Optional[HostMove] = None
        for I in legal_host_moves(state, self.rules):
            # a move can only improve on `best` if every reply stays below it
            limit = budget - 1 if best is None else best - 2
            worst = 0
            feasible = True
            for i in legal_agent_moves(state, I, self.rules):
                child_value = self.value(apply_move(state, I, i, self.rules), limit)
                if child_value is None:
                    feasible = False
                    break
                if child_value > worst:
                    worst = child_value
            if feasible:
                total = 1 + worst
                if best is None or total < best:
                    best, best_move = total, I
                    if best == 1:
                        break
        if best is None:
            self._memo[key] = (budget, False)
            return None
        self._memo[key] = (best, True)
        self._best[key] = best_move
        return best

    def best_move(self, state: GameState) -> HostMove:
        if self.value(state) is None:
            raise ValueError(
                f"no host strategy terminates within {self.depth_cap} steps"
            )
        return self._best[state.key()]

    @property
    def explored(self) -> int:
        return len(self._memo)


@dataclass(frozen=True)
class SolveResult:
    value: Optional[int]  # None: every strategy exceeds the depth cap
    depth_cap: int
    principal: dict  # state key -> host move, on states reachable under optimal play
    explored: int


def minimax_solve(root: GameState, rules: VariantRules, depth_cap: int) -> SolveResult:
    """Solve for the minimal worst-case steps-to-terminate from the root."""
    solver = MinimaxSolver(rules, depth_cap)
    value = solver.value(root)
    principal: dict = {}
    if value is not None:
        queue = [root]
        while queue:
            state = queue.pop()
            if is_terminal(state, rules) or state.key() in principal:
                continue
            move = solver.best_move(state)
            principal[state.key()] = move
            for i in legal_agent_moves(state, move, rules):
                queue.append(apply_move(state, move, i, rules))
    return SolveResult(
        value=value, depth_cap=depth_cap, principal=principal, explored=solver.explored
    )


# ---------------------------------------------------------------------------
# full policy trees (agent-labelled edges)
# ---------------------------------------------------------------------------

@dataclass
class TreeNode:
    node_id: int
    state: GameState
    depth: int
    parent: Optional[int]
    edge_label: Optional[AgentMove]  # agent move that led here
    host_move: Optional[HostMove] = None
    terminal: bool = False
    smooth: bool = False
    loop: bool = False
    depth_capped: bool = False
    children: list[tuple[AgentMove, int]] = field(default_factory=list)


@dataclass
class GameTree:
    rules: VariantRules
    nodes: list[TreeNode]

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def leaves(self) -> list[TreeNode]:
        return [n for n in self.nodes if not n.children]


def build_policy_tree(
    root: GameState,
    host,
    rules: VariantRules,
    depth_cap: int,
    rng: Optional[random.Random] = None,
) -> GameTree:
    """Expand the host's full policy: one host move per node, one edge per reply.

    States repeated along their own ancestor path are marked as loops and not
    re-expanded; nodes at the depth cap are marked capped.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be >= 1")
    rng = rng if rng is not None else random.Random(0)
    nodes = [TreeNode(0, root, 0, None, None)]
    queue = [0]
    while queue:
        node_id = queue.pop(0)
        node = nodes[node_id]
        state = node.state
        node.terminal = is_terminal(state, rules)
        node.smooth = is_smooth_marker(state)
        if node.terminal:
            continue
        ancestor = node.parent
        while ancestor is not None:
            if nodes[ancestor].state.key() == state.key():
                node.loop = True
                break
            ancestor = nodes[ancestor].parent
        if node.loop:
            continue
        if node.depth >= depth_cap:
            node.depth_capped = True
            continue
        move = host.decide(state, rules, rng)
        node.host_move = move
        for i in legal_agent_moves(state, move, rules):
            child_state = apply_move(state, move, i, rules)
            child = TreeNode(len(nodes), child_state, node.depth + 1, node_id, i)
            nodes.append(child)
            node.children.append((i, child.node_id))
            queue.append(child.node_id)
    return GameTree(rules=rules, nodes=nodes)


# ---------------------------------------------------------------------------
# UCT planning
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MctsConfig:
    simulations: int = 100
    exploration: float = math.sqrt(2)
    rollout_depth: int = 50
    rollout_host: Any = None  # host policy for rollouts; None = uniform random
    rollout_agent: Any = None  # agent policy for rollouts; None = uniform random
    seed: int = 0

    def __post_init__(self):
        if self.simulations < 1 or self.rollout_depth < 1 or self.exploration <= 0:
            raise ValueError("MCTS parameters must be positive")


class _MctsNode:
    __slots__ = ("moves", "visits", "values", "total")

    def __init__(self, moves):
        self.moves = moves
        self.visits = [0] * len(moves)
        self.values = [0.0] * len(moves)
        self.total = 0


def _rollout(state, pending, rules, config, rng) -> Optional[int]:
    """Playout with the configured rollout policies; steps to termination or None."""
    steps = 0
    while steps < config.rollout_depth:
        if is_terminal(state, rules):
            return steps
        if pending is None:
            if config.rollout_host is None:
                moves = legal_host_moves(state, rules)
                I = moves[rng.randrange(len(moves))]
            else:
                I = config.rollout_host.decide(state, rules, rng)
        else:
            I, pending = pending, None
        if config.rollout_agent is None:
            replies = legal_agent_moves(state, I, rules)
            i = replies[rng.randrange(len(replies))]
        else:
            i = config.rollout_agent.decide(state, I, rules, rng)
        state = apply_move(state, I, i, rules)
        steps += 1
    return steps if is_terminal(state, rules) else None


def mcts_decide(
    state: GameState,
    role: str,
    opponent,
    rules: VariantRules,
    config: MctsConfig,
    host_move: Optional[HostMove] = None,
):
    """UCT move choice for one role against a fixed opponent policy.

    A simulation is valued as gamma^d with d its steps to termination (0 when
    it never terminates); the host maximizes this, the agent its negation.
    For the agent role the pending host move may be passed explicitly;
    otherwise it is recomputed from the opponent policy. Returns the
    most-visited root move.
    """
    if role not in ("host", "agent"):
        raise ValueError(f"role must be 'host' or 'agent', got {role!r}")
    if is_terminal(state, rules):
        raise TerminalStateError("cannot plan at a terminal state")
    rng = random.Random(derive_seed(config.seed, "mcts", role, state.key()))
    sign = 1.0 if role == "host" else -1.0

    # a position bundles the state with the host move awaiting an agent reply
    if role == "host":
        root_pos = (state, None)
    else:
        pending = host_move if host_move is not None else opponent.decide(state, rules, rng)
        root_pos = (state, pending)

    def moves_at(pos):
        st, pend = pos
        if pend is None:
            return legal_host_moves(st, rules)
        return legal_agent_moves(st, pend, rules)

    def step_position(pos, move):
        """Apply our move plus the opponent's reply; exactly one game step."""
        st, pend = pos
        if role == "host":
            i = opponent.decide(st, move, rules, rng)
            return (apply_move(st, move, i, rules), None)
        nxt = apply_move(st, pend, move, rules)
        if is_terminal(nxt, rules):
            return (nxt, None)
        return (nxt, opponent.decide(nxt, rules, rng))

    def select(node):
        for idx, n in enumerate(node.visits):
            if n == 0:
                return idx
        log_total = math.log(node.total)
        best_idx, best_score = 0, -math.inf
        for idx, n in enumerate(node.visits):
            score = sign * node.values[idx] / n + config.exploration * math.sqrt(
                log_total / n
            )
            if score > best_score:
                best_idx, best_score = idx, score
        return best_idx

    tree: dict = {}

    def position_key(pos):
        st, pend = pos
        return (st.key(), pend)

    root_key = position_key(root_pos)
    tree[root_key] = _MctsNode(moves_at(root_pos))

    for _ in range(config.simulations):
        pos = root_pos
        path: list[tuple[_MctsNode, int]] = []
        while True:
            st, pend = pos
            if is_terminal(st, rules):
                value = 1.0  # gamma^0: zero steps left
                break
            if len(path) >= config.rollout_depth:
                # horizon reached inside the tree (cyclic states transpose
                # into already-expanded nodes); count as non-terminating
                value = 0.0
                break
            key = position_key(pos)
            node = tree.get(key)
            if node is None:
                node = tree[key] = _MctsNode(moves_at(pos))
                d = _rollout(st, pend, rules, config, rng)
                value = GAMMA_SHAPE ** d if d is not None else 0.0
                break
            idx = select(node)
            path.append((node, idx))
            pos = step_position(pos, node.moves[idx])
        for node, idx in reversed(path):
            value *= GAMMA_SHAPE
            node.visits[idx] += 1
            node.values[idx] += value
            node.total += 1

    root_node = tree[root_key]
    best_idx = max(range(len(root_node.moves)), key=lambda k: root_node.visits[k])
    return root_node.moves[best_idx]
