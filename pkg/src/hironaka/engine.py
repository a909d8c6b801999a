"""Game states and the exact transition system for every variant.

A move is a pair (I, i): the host picks a coordinate subset I with |I| >= 2,
the agent picks i in I. The transition replaces coordinate i of every point
by the sum over I (plus the variant's offset), prunes, translates, and for
the weighted variant updates the weight vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import rules as R
from .geometry import (
    CoordinateSubset,
    PointConfiguration,
    Scalar,
    newton_vertices,
    remove_dominated,
    shift_to_axes,
    diagonal_shift,
)
from .rules import VariantRules

HostMove = CoordinateSubset
AgentMove = int


class TerminalStateError(Exception):
    """A move was requested at a terminal state."""


class IllegalMoveError(Exception):
    """A move violated the variant's legality rules."""


@dataclass(frozen=True)
class GameState:
    config: PointConfiguration
    weights: Optional[tuple[int, ...]] = None
    step: int = 0

    @property
    def dim(self) -> int:
        return self.config.dim

    def key(self):
        """Hashable identity ignoring the step counter (for memo tables)."""
        return (self.config.points, self.weights)


def initial_state(
    points: Iterable[Sequence[Scalar]],
    rules: VariantRules,
    weights: Optional[Sequence[int]] = None,
    step: int = 0,
) -> GameState:
    """Build a canonical starting state for the given variant.

    Variants whose states are vertex sets (hauser, polyhedra, thom) are pruned
    here so the state invariant holds from the first move. Weights default to
    all ones for the weighted variant.
    """
    config = PointConfiguration.from_points(points)
    if not rules.rational_scalars:
        for p in config.points:
            if any(isinstance(c, Fraction) for c in p):
                raise ValueError(f"variant {rules.variant_id} uses integer points")
    if rules.pruning == R.PRUNE_VERTICES:
        config = newton_vertices(config)
    if rules.uses_weights:
        w = tuple(int(x) for x in weights) if weights is not None else (1,) * config.dim
        if len(w) != config.dim:
            raise ValueError("weight vector length must equal the dimension")
        if any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
    else:
        if weights is not None:
            raise ValueError(f"variant {rules.variant_id} does not use weights")
        w = None
    return GameState(config=config, weights=w, step=step)


def is_terminal(state: GameState, rules: VariantRules) -> bool:
    if rules.terminal == R.TERMINAL_SINGLETON:
        return len(state.config.points) == 1
    return any(sum(p) <= 1 for p in state.config.points)


def is_smooth_marker(state: GameState) -> bool:
    """True when some point has coordinate sum <= 1.

    Annotation only: it colours tree nodes that are already smooth; it never
    terminates the non-polyhedra games.
    """
    return any(sum(p) <= 1 for p in state.config.points)


def _subsets(n: int) -> list[CoordinateSubset]:
    out: list[CoordinateSubset] = []
    for size in range(2, n + 1):
        out.extend(itertools.combinations(range(n), size))
    return out


_SUBSET_CACHE: dict[int, list[CoordinateSubset]] = {}


def legal_host_moves(state: GameState, rules: VariantRules) -> list[HostMove]:
    """All legal coordinate subsets, smaller sets first, lexicographic within size."""
    if is_terminal(state, rules):
        raise TerminalStateError("no host moves at a terminal state")
    n = state.config.dim
    subsets = _SUBSET_CACHE.get(n)
    if subsets is None:
        subsets = _SUBSET_CACHE[n] = _subsets(n)
    if rules.host_legality == R.HOST_SIZE_2:
        return list(subsets)
    points = state.config.points
    return [
        I for I in subsets if all(sum(p[k] for k in I) >= 1 for p in points)
    ]


def legal_agent_moves(
    state: GameState, host_move: HostMove, rules: VariantRules
) -> list[AgentMove]:
    if rules.agent_legality == R.AGENT_ANY:
        return list(host_move)
    w = state.weights
    assert w is not None
    lowest = min(w[j] for j in host_move)
    return [j for j in host_move if w[j] == lowest]


def _check_legal(state: GameState, host_move: HostMove, agent_move: AgentMove,
                 rules: VariantRules) -> None:
    if is_terminal(state, rules):
        raise IllegalMoveError("cannot move at a terminal state")
    n = state.config.dim
    I = tuple(host_move)
    if tuple(sorted(set(I))) != I or len(I) < 2:
        raise IllegalMoveError(f"host move must be a sorted set of >= 2 indices: {I}")
    if any(j < 0 or j >= n for j in I):
        raise IllegalMoveError(f"host move {I} out of range for dimension {n}")
    if rules.host_legality == R.HOST_SIZE_2_SUM_1:
        for p in state.config.points:
            if sum(p[k] for k in I) < 1:
                raise IllegalMoveError(f"host move {I} sums below 1 on point {p}")
    if agent_move not in I:
        raise IllegalMoveError(f"agent move {agent_move} not in host move {I}")
    if rules.agent_legality == R.AGENT_WEIGHT_MINIMAL:
        w = state.weights
        if w[agent_move] != min(w[j] for j in I):
            raise IllegalMoveError(
                f"agent move {agent_move} is not weight-minimal in {I}"
            )


def apply_move(
    state: GameState,
    host_move: HostMove,
    agent_move: AgentMove,
    rules: VariantRules,
) -> GameState:
    """One full game step: transform, prune, translate, update weights."""
    _check_legal(state, host_move, agent_move, rules)
    offset = rules.transform_offset
    i = agent_move
    transformed = set()
    for p in state.config.points:
        total = sum(p[k] for k in host_move) + offset
        if isinstance(total, Fraction) and total.denominator == 1:
            total = int(total)  # keep integer values canonical for serialization
        q = p[:i] + (total,) + p[i + 1:]
        transformed.add(q)
    config = PointConfiguration(state.config.dim, tuple(sorted(transformed)))
    if rules.pruning == R.PRUNE_DOMINATION:
        config = remove_dominated(config)
    else:
        config = newton_vertices(config)
    if rules.shift == R.SHIFT_AXES:
        config = shift_to_axes(config)
    elif rules.shift == R.SHIFT_DIAGONAL:
        config = diagonal_shift(config)
    weights = state.weights
    if rules.uses_weights:
        wi = weights[i]
        weights = tuple(
            w - wi if (j in host_move and j != i) else w
            for j, w in enumerate(weights)
        )
    return GameState(config=config, weights=weights, step=state.step + 1)


@dataclass(frozen=True)
class EpisodeStep:
    state_before: GameState
    host_move: HostMove
    agent_move: AgentMove
    state_after: GameState
    agent_reward: int
    host_reward: int
    terminal: bool


def play_episode(
    state: GameState,
    host,
    agent,
    rules: VariantRules,
    host_rng,
    agent_rng,
    max_steps: int,
) -> list[EpisodeStep]:
    """Run one episode to termination or the step cap, recording every step.

    Rewards follow the adversarial setup: the agent is charged -1 and the
    host paid +1 exactly when the move ends the game.
    """
    steps: list[EpisodeStep] = []
    for _ in range(max_steps):
        if is_terminal(state, rules):
            break
        I = host.decide(state, rules, host_rng)
        i = agent.decide(state, I, rules, agent_rng)
        after = apply_move(state, I, i, rules)
        done = is_terminal(after, rules)
        steps.append(
            EpisodeStep(
                state_before=state,
                host_move=I,
                agent_move=i,
                state_after=after,
                agent_reward=-1 if done else 0,
                host_reward=1 if done else 0,
                terminal=done,
            )
        )
        state = after
        if done:
            break
    return steps
