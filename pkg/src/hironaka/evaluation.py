"""The games-per-step performance metric and benchmark matrices.

A host/agent pair is scored by continuous play: run m steps, restarting
from a fresh uniformly sampled initial state whenever a game terminates,
and report completed-games / steps. High values mean the host resolves
quickly; strong adversarial agents drive the value down.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import rules as R
from .engine import GameState, apply_move, is_terminal
from .geometry import PointConfiguration, newton_vertices, remove_dominated
from .policies import make_agent, make_host
from .rules import VariantRules
from .util import derive_seed


@dataclass(frozen=True)
class EvalConfig:
    rules: VariantRules
    dim: int = 3
    points_per_state: int = 3
    coordinate_bound: int = 10
    steps: int = 1000
    repetitions: int = 30
    game_step_cap: int = 500
    seed: int = 0
    # fixed starting states instead of uniform sampling (testing/experiments)
    initial_states: Optional[tuple] = None

    def __post_init__(self):
        if self.dim < 2 or self.points_per_state < 1 or self.coordinate_bound < 1:
            raise ValueError("need dim >= 2, k >= 1, N >= 1")
        if self.steps < 1 or self.repetitions < 1 or self.game_step_cap < 1:
            raise ValueError("need m >= 1, repetitions >= 1, step cap >= 1")


@dataclass(frozen=True)
class EvalReport:
    host: str
    agent: str
    config: EvalConfig
    rho: float
    stderr: float
    rho_per_rep: tuple[float, ...]
    games: int
    capped: int
    length_histogram: tuple[tuple[int, int], ...]  # (game length, count), sorted

    def __post_init__(self):
        assert 0.0 <= self.rho <= 1.0


def sample_initial_state(
    rng: random.Random, config: EvalConfig
) -> GameState:
    """Uniform draw of k points with coordinates in [1, N], pruned and deduplicated.

    Draws that collapse below two points are rejected and redrawn so a fresh
    game never starts terminal.
    """
    n, k, bound = config.dim, config.points_per_state, config.coordinate_bound
    rules = config.rules
    for _ in range(10_000):
        points = {
            tuple(rng.randint(1, bound) for _ in range(n)) for _ in range(k)
        }
        pc = PointConfiguration(n, tuple(sorted(points)))
        if rules.pruning == R.PRUNE_DOMINATION:
            pc = remove_dominated(pc)
        else:
            pc = newton_vertices(pc)
        state = GameState(
            config=pc, weights=(1,) * n if rules.uses_weights else None, step=0
        )
        if len(pc) >= 2 and not is_terminal(state, rules):
            return state
    raise ValueError(
        "sampling keeps collapsing to degenerate states; raise N or k"
    )


def _draw_start(rng: random.Random, config: EvalConfig, counter: list[int]) -> GameState:
    if config.initial_states is not None:
        state = config.initial_states[counter[0] % len(config.initial_states)]
        counter[0] += 1
        return state
    return sample_initial_state(rng, config)


def rho_estimate(host, agent, config: EvalConfig) -> EvalReport:
    """Estimate games-per-step over independent m-step play sequences.

    Only completed games count; the game in progress when the step budget
    runs out is dropped, and games force-restarted at the per-game cap are
    tallied separately so they can never inflate the estimate.
    """
    per_rep: list[Fraction] = []
    total_games = 0
    total_capped = 0
    histogram: dict[int, int] = {}
    for rep in range(config.repetitions):
        rng = random.Random(derive_seed(config.seed, "rho", rep))
        host_rng = random.Random(derive_seed(config.seed, "rho-host", rep))
        agent_rng = random.Random(derive_seed(config.seed, "rho-agent", rep))
        start_counter = [0]
        state = _draw_start(rng, config, start_counter)
        games = 0
        game_steps = 0
        for _ in range(config.steps):
            I = host.decide(state, config.rules, host_rng)
            i = agent.decide(state, I, config.rules, agent_rng)
            state = apply_move(state, I, i, config.rules)
            game_steps += 1
            if is_terminal(state, config.rules):
                games += 1
                histogram[game_steps] = histogram.get(game_steps, 0) + 1
                game_steps = 0
                state = _draw_start(rng, config, start_counter)
            elif game_steps >= config.game_step_cap:
                total_capped += 1
                game_steps = 0
                state = _draw_start(rng, config, start_counter)
        per_rep.append(Fraction(games, config.steps))
        total_games += games
    mean = sum(per_rep) / len(per_rep)
    if len(per_rep) > 1:
        var = sum((x - mean) ** 2 for x in per_rep) / (len(per_rep) - 1)
        stderr = math.sqrt(var / len(per_rep))
    else:
        stderr = 0.0
    return EvalReport(
        host=host.name,
        agent=agent.name,
        config=config,
        rho=float(mean),
        stderr=stderr,
        rho_per_rep=tuple(float(x) for x in per_rep),
        games=total_games,
        capped=total_capped,
        length_histogram=tuple(sorted(histogram.items())),
    )


def benchmark_matrix(
    host_specs: Sequence[str],
    agent_specs: Sequence[str],
    config: EvalConfig,
    make_host_fn=None,
    make_agent_fn=None,
) -> list[EvalReport]:
    """Cross-product of rho estimates, one row per (host, agent) pair.

    Policies are built fresh per cell with independently derived seeds; the
    planning hosts get the cell's agent as their opponent model.
    """
    if not host_specs or not agent_specs:
        raise ValueError("need at least one host and one agent")
    make_host_fn = make_host_fn or make_host
    make_agent_fn = make_agent_fn or make_agent
    reports = []
    for h in host_specs:
        for a in agent_specs:
            cell_seed = derive_seed(config.seed, "cell", h, a)
            agent = make_agent_fn(a, config.rules, seed=cell_seed)
            # planning hosts get the actual column agent as their opponent model
            host = make_host_fn(h, config.rules, seed=cell_seed, opponent=agent)
            cell_config = _with_seed(config, cell_seed)
            reports.append(rho_estimate(host, agent, cell_config))
            if hasattr(agent, "close"):
                agent.close()
            if hasattr(host, "close"):
                host.close()
    return reports


def _with_seed(config: EvalConfig, seed: int) -> EvalConfig:
    from dataclasses import replace

    return replace(config, seed=seed)


def convergence_scan(
    host_spec: str,
    agent_spec: str,
    config: EvalConfig,
    step_grid: Sequence[int],
) -> list[tuple[int, float, float]]:
    """rho estimates across a growing step budget, sharing the base seed.

    Returns (m, rho, stderr) rows; successive differences shrinking is the
    empirical convergence-tendency check.
    """
    if list(step_grid) != sorted(step_grid) or len(step_grid) < 1:
        raise ValueError("step grid must be ascending and nonempty")
    out = []
    for m in step_grid:
        cfg = EvalConfig(
            rules=config.rules,
            dim=config.dim,
            points_per_state=config.points_per_state,
            coordinate_bound=config.coordinate_bound,
            steps=m,
            repetitions=config.repetitions,
            game_step_cap=config.game_step_cap,
            seed=config.seed,
            initial_states=config.initial_states,
        )
        host = make_host(host_spec, cfg.rules, seed=cfg.seed)
        agent = make_agent(agent_spec, cfg.rules, seed=cfg.seed)
        report = rho_estimate(host, agent, cfg)
        out.append((m, report.rho, report.stderr))
    return out


def successive_differences(scan: Sequence[tuple[int, float, float]]) -> list[float]:
    return [abs(scan[k + 1][1] - scan[k][1]) for k in range(len(scan) - 1)]
