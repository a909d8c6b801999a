"""Benchmark host and agent strategies behind one uniform interface.

Hosts implement decide(state, rules, rng) -> coordinate subset; agents
implement decide(state, host_move, rules, rng) -> index. Every policy
returns only legal moves and is deterministic given the state and the rng
stream handed to it.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional

from .engine import (
    GameState,
    HostMove,
    TerminalStateError,
    apply_move,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
)
from .geometry import minimal_hitting_sets, newton_vertices
from .rules import HOST_SIZE_2, VariantRules
from .search import MctsConfig, MinimaxSolver, mcts_decide
from .util import derive_seed


def _require_active(state: GameState, rules: VariantRules) -> None:
    if is_terminal(state, rules):
        raise TerminalStateError("policy queried at a terminal state")


def _fallback_legal(state, rules, preferred: HostMove) -> HostMove:
    """The preferred subset when legal, else the first legal host move."""
    if rules.host_legality == HOST_SIZE_2:
        return preferred
    legal = legal_host_moves(state, rules)
    return preferred if preferred in legal else legal[0]


class ChooseAllHost:
    """Always picks the full coordinate set, or the largest legal subset."""

    name = "choose-all"

    def decide(self, state: GameState, rules: VariantRules, rng) -> HostMove:
        _require_active(state, rules)
        full = tuple(range(state.dim))
        if rules.host_legality == HOST_SIZE_2:
            return full
        legal = legal_host_moves(state, rules)
        if full in legal:
            return full
        top = max(len(I) for I in legal)
        return next(I for I in legal if len(I) == top)


class ZeillingerHost:
    """Pair host driven by the characteristic vector of the two nearest points.

    Takes the incomparable pair (v, w) at minimal L1 distance, forms the
    characteristic vector d = v - w, and plays I = {k, l} with d_k maximal
    and d_l minimal (ties to the lowest index). Every move replaces d_k or
    d_l by d_k + d_l with d_k > 0 > d_l, so the pair's L1 distance drops by
    at least 2: the game strictly shrinks (point count, nearest-pair
    distance) and therefore ends against every agent.
    """

    name = "zeillinger"

    def decide(self, state: GameState, rules: VariantRules, rng) -> HostMove:
        _require_active(state, rules)
        best = None
        for v, w in itertools.combinations(state.config.points, 2):
            d = [a - b for a, b in zip(v, w)]
            if not (any(x > 0 for x in d) and any(x < 0 for x in d)):
                continue  # comparable pair: pruned by whatever move comes next
            distance = sum(abs(x) for x in d)
            if best is None or distance < best[0]:
                best = (distance, d)
        if best is None:
            return legal_host_moves(state, rules)[0]
        d = best[1]
        k = max(range(len(d)), key=lambda j: (d[j], -j))
        l = min(range(len(d)), key=lambda j: (d[j], j))
        return _fallback_legal(state, rules, tuple(sorted((k, l))))


class SpivakovskyHost:
    """Plays the maximal hitting set: every coordinate supporting some vertex."""

    name = "spivakovsky"

    def decide(self, state: GameState, rules: VariantRules, rng) -> HostMove:
        _require_active(state, rules)
        from .geometry import NoHittingSet

        union: set[int] = set()
        for v in newton_vertices(state.config).points:
            support = {j for j, c in enumerate(v) if c > 0}
            if not support:
                raise NoHittingSet(f"vertex {v} has no positive coordinate")
            union |= support
        for j in range(state.dim):
            if len(union) >= 2:
                break
            union.add(j)
        return _fallback_legal(state, rules, tuple(sorted(union)))


class RandomHittingHost:
    """Uniform choice among the minimum-cardinality hitting sets.

    A size-1 hitting set is padded with one uniformly random extra
    coordinate so the move satisfies |I| >= 2.
    """

    name = "random-hitting"

    def decide(self, state: GameState, rules: VariantRules, rng: random.Random) -> HostMove:
        _require_active(state, rules)
        candidates = minimal_hitting_sets(state.config)
        if rules.host_legality != HOST_SIZE_2:
            legal = set(legal_host_moves(state, rules))
            filtered = [
                I for I in candidates if I in legal or len(I) == 1
            ]
            candidates = filtered or candidates
        choice = candidates[rng.randrange(len(candidates))]
        if len(choice) == 1:
            extra = [j for j in range(state.dim) if j != choice[0]]
            choice = tuple(sorted(choice + (extra[rng.randrange(len(extra))],)))
        return _fallback_legal(state, rules, choice)


class OptimalHost:
    """Plays the minimax solver's principal move; the exact-oracle host."""

    def __init__(self, rules: VariantRules, depth_cap: int = 12):
        self.name = f"optimal:{depth_cap}"
        self._solver = MinimaxSolver(rules, depth_cap)

    def decide(self, state: GameState, rules: VariantRules, rng) -> HostMove:
        _require_active(state, rules)
        return self._solver.best_move(state)


class MctsHost:
    """UCT-planned host; deterministic per state for a fixed seed.

    The opponent model defaults to a uniform random agent when the real
    opponent is unknown. Decisions are cached so the policy behaves as a
    fixed deterministic strategy.
    """

    def __init__(self, config: Optional[MctsConfig] = None, opponent=None):
        self.config = config if config is not None else MctsConfig()
        self.opponent = opponent if opponent is not None else RandomAgent()
        self.name = f"mcts:{self.config.simulations}"
        self._cache: dict = {}

    def decide(self, state: GameState, rules: VariantRules, rng) -> HostMove:
        _require_active(state, rules)
        key = state.key()
        move = self._cache.get(key)
        if move is None:
            move = mcts_decide(state, "host", self.opponent, rules, self.config)
            self._cache[key] = move
        return move


class ChooseFirstAgent:
    name = "choose-first"

    def decide(self, state, host_move, rules, rng) -> int:
        return min(legal_agent_moves(state, host_move, rules))


class ChooseLastAgent:
    name = "choose-last"

    def decide(self, state, host_move, rules, rng) -> int:
        return max(legal_agent_moves(state, host_move, rules))


class RandomAgent:
    name = "random"

    def decide(self, state, host_move, rules, rng: random.Random) -> int:
        replies = legal_agent_moves(state, host_move, rules)
        return replies[rng.randrange(len(replies))]


class LookaheadAgent:
    """Picks the reply maximizing the depth-truncated minimax survival value.

    Replies whose value exceeds the truncation depth count as unbounded and
    are preferred; ties go to the lowest index.
    """

    def __init__(self, depth: int = 4):
        if depth < 1:
            raise ValueError("lookahead depth must be >= 1")
        self.depth = depth
        self.name = f"lookahead:{depth}"
        self._solvers: dict[str, MinimaxSolver] = {}

    def decide(self, state, host_move, rules, rng) -> int:
        solver = self._solvers.get(rules.variant_id)
        if solver is None:
            solver = self._solvers[rules.variant_id] = MinimaxSolver(rules, self.depth)
        best_reply, best_value = None, -1
        for i in legal_agent_moves(state, host_move, rules):
            child = apply_move(state, host_move, i, rules)
            value = solver.value(child, self.depth - 1)
            survival = self.depth if value is None else value
            if survival > best_value:
                best_reply, best_value = i, survival
        return best_reply


class MctsAgent:
    """UCT-planned agent; the opponent model defaults to choose-all."""

    def __init__(self, config: Optional[MctsConfig] = None, opponent=None):
        self.config = config if config is not None else MctsConfig()
        self.opponent = opponent if opponent is not None else ChooseAllHost()
        self.name = f"mcts:{self.config.simulations}"

    def decide(self, state, host_move, rules, rng) -> int:
        return mcts_decide(
            state, "agent", self.opponent, rules, self.config, host_move=host_move
        )


HOST_NAMES = ("choose-all", "zeillinger", "spivakovsky", "random-hitting", "mcts", "optimal")
AGENT_NAMES = ("choose-first", "choose-last", "random", "lookahead", "mcts")


def make_host(spec: str, rules: VariantRules, seed: int = 0, opponent=None):
    """Build a host policy from a name like "zeillinger" or "mcts:200"."""
    name, _, arg = spec.partition(":")
    if name == "choose-all":
        return ChooseAllHost()
    if name == "zeillinger":
        return ZeillingerHost()
    if name == "spivakovsky":
        return SpivakovskyHost()
    if name == "random-hitting":
        return RandomHittingHost()
    if name == "mcts":
        sims = int(arg) if arg else 100
        return MctsHost(
            MctsConfig(simulations=sims, seed=derive_seed(seed, "mcts-host")),
            opponent=opponent,
        )
    if name == "optimal":
        return OptimalHost(rules, int(arg) if arg else 12)
    raise ValueError(f"unknown host policy {spec!r}")


def make_agent(spec: str, rules: VariantRules, seed: int = 0, opponent=None):
    """Build an agent policy from a name like "choose-first" or "lookahead:6"."""
    name, _, arg = spec.partition(":")
    if name == "choose-first":
        return ChooseFirstAgent()
    if name == "choose-last":
        return ChooseLastAgent()
    if name == "random":
        return RandomAgent()
    if name == "lookahead":
        return LookaheadAgent(int(arg) if arg else 4)
    if name == "mcts":
        sims = int(arg) if arg else 100
        return MctsAgent(
            MctsConfig(simulations=sims, seed=derive_seed(seed, "mcts-agent")),
            opponent=opponent,
        )
    raise ValueError(f"unknown agent policy {spec!r}")
