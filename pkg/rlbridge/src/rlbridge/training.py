"""Training loops that drive the game engine CLI over the wire protocol.

The engine owns the episodes: each training chunk invokes `hironaka eval`
with this package's serve command plugged in as an external policy, so the
learner rides the engine's restart-on-terminal play stream. Completed-game
counts come back through the eval CSV, which doubles as the progress and
checkpoint metric.
"""

from __future__ import annotations

import csv
import hashlib
import os
import subprocess
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .qtable import QTable


def _derive_seed(*parts) -> int:
    blob = "\x1f".join(repr(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big") % (2**31)


@dataclass
class TrainingConfig:
    episodes: int = 5000
    dim: int = 3
    points_per_state: int = 3
    coordinate_bound: int = 5
    variant: str = "basic-shifted"
    chunk_steps: int = 2000  # engine steps per eval invocation
    game_step_cap: int = 200  # high enough that capped games stay negligible
    alpha: float = 0.1
    gamma: float = 0.95
    epsilon_start: float = 1.0
    epsilon_end: float = 0.05
    seed: int = 0
    max_chunks: int = 200
    engine: Sequence[str] = (sys.executable, "-m", "hironaka.cli.main")


@dataclass
class ChunkReport:
    chunk: int
    epsilon: float
    rho: float
    games: int
    capped: int


@dataclass
class TrainingResult:
    table: QTable
    table_path: str
    episodes: int
    checkpoints: list = field(default_factory=list)


def _serve_command(table_path: str, config: TrainingConfig, epsilon: float,
                   seed: int) -> str:
    return (
        f"{sys.executable} -m rlbridge serve --table {table_path} --learn "
        f"--epsilon {epsilon:.6f} --alpha {config.alpha} --gamma {config.gamma} "
        f"--seed {seed}"
    )


def _run_eval(hosts: str, agents: str, config: TrainingConfig, seed: int) -> ChunkReport:
    with tempfile.NamedTemporaryFile(mode="r", suffix=".csv", delete=False) as tmp:
        out_path = tmp.name
    try:
        command = [
            *config.engine, "eval",
            "--hosts", hosts,
            "--agents", agents,
            "--n", str(config.dim),
            "--k", str(config.points_per_state),
            "--N", str(config.coordinate_bound),
            "--m", str(config.chunk_steps),
            "--reps", "1",
            "--cap", str(config.game_step_cap),
            "--seed", str(seed),
            "--variant", config.variant,
            "--out", out_path,
        ]
        proc = subprocess.run(command, capture_output=True, text=True)
        if proc.returncode != 0:
            raise RuntimeError(
                f"engine eval failed ({proc.returncode}): {proc.stderr.strip()}"
            )
        with open(out_path, "r", encoding="utf-8") as fh:
            row = next(csv.DictReader(fh))
        return ChunkReport(
            chunk=-1,
            epsilon=0.0,
            rho=float(row["rho"]),
            games=int(row["games"]),
            capped=int(row["capped"]),
        )
    finally:
        os.unlink(out_path)


def _epsilon(config: TrainingConfig, episodes_done: int) -> float:
    # linear decay over the first half of the episode budget
    horizon = max(1, config.episodes // 2)
    progress = min(1.0, episodes_done / horizon)
    return config.epsilon_start + (config.epsilon_end - config.epsilon_start) * progress


def train_agent(fixed_host: str, table_path: str, config: TrainingConfig,
                log=None) -> TrainingResult:
    """Learn an adversarial agent against a fixed engine host policy."""
    return _train("agent", fixed_host, [None], table_path, config, log)


def train_host(agent_pool: Sequence[str], table_path: str, config: TrainingConfig,
               log=None) -> TrainingResult:
    """Learn a host against a pool of fixed agents, sampled round-robin."""
    if not agent_pool:
        raise ValueError("need at least one agent in the pool")
    return _train("host", None, list(agent_pool), table_path, config, log)


def _train(role: str, fixed_host: Optional[str], pool: Sequence[Optional[str]],
           table_path: str, config: TrainingConfig, log=None) -> TrainingResult:
    episodes_done = 0
    checkpoints = []
    stalled = 0
    for chunk in range(config.max_chunks):
        if episodes_done >= config.episodes:
            break
        epsilon = _epsilon(config, episodes_done)
        seed = _derive_seed(config.seed, role, chunk)
        serve = _serve_command(table_path, config, epsilon, seed)
        if role == "agent":
            report = _run_eval(fixed_host, f"external:{serve}", config, seed)
        else:
            opponent = pool[chunk % len(pool)]
            report = _run_eval(f"external:{serve}", opponent, config, seed)
        episodes_done += report.games
        checkpoints.append(
            ChunkReport(chunk, epsilon, report.rho, report.games, report.capped)
        )
        if log:
            log(
                f"chunk {chunk}: eps={epsilon:.3f} rho={report.rho:.4f} "
                f"games={report.games} capped={report.capped} "
                f"episodes={episodes_done}/{config.episodes}"
            )
        # a weak early policy can finish nothing in a whole chunk; only a long
        # run of completely dead chunks means the configuration cannot work
        stalled = stalled + 1 if report.games == 0 else 0
        if stalled >= 8:
            raise RuntimeError(
                "eight consecutive chunks without a completed game; "
                "raise chunk_steps or lower the game step cap"
            )
    table = QTable.load(table_path)
    return TrainingResult(
        table=table, table_path=table_path, episodes=episodes_done,
        checkpoints=checkpoints,
    )


def alternating_training(host_name: str, agent_pool: Sequence[str],
                         agent_table: str, host_table: str,
                         config: TrainingConfig, rounds: int = 1, log=None):
    """Alternate fix-host/train-agent with fix-agent/train-host phases.

    The trained agent joins the host's opponent pool through its own serve
    command, so later host phases play against what the agent learned.
    """
    results = []
    for round_index in range(rounds):
        agent_result = train_agent(host_name, agent_table, config, log=log)
        trained_agent = (
            f"external:{sys.executable} -m rlbridge serve --table {agent_table}"
        )
        pool = list(agent_pool) + [trained_agent]
        host_result = train_host(pool, host_table, config, log=log)
        results.append((agent_result, host_result))
    return results
