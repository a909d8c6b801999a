"""Policy server speaking "hironaka-policy/1" on stdin/stdout.

Answers decide requests greedily from a Q table (uniform random over the
legality list on unseen states). With learning enabled it explores
epsilon-greedily and updates the table online: a request whose state has a
step counter that did not advance past the previous one marks the start of
a new episode, meaning the previous action terminated the game and earns
the terminal reward (-1 for the agent role, +1 for the host role).
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from typing import Optional

from .qtable import QTable, state_key

PROTOCOL = "hironaka-policy/1"


@dataclass
class ServeConfig:
    table_path: Optional[str] = None
    learn: bool = False
    epsilon: float = 0.0
    alpha: float = 0.1
    gamma: float = 0.95
    seed: int = 0
    save_path: Optional[str] = None


class PolicyServer:
    def __init__(self, config: ServeConfig, stdin=None, stdout=None):
        self.config = config
        self.stdin = stdin if stdin is not None else sys.stdin
        self.stdout = stdout if stdout is not None else sys.stdout
        self.rng = random.Random(config.seed)
        self.table: Optional[QTable] = None
        self.role: Optional[str] = None
        # pending transition awaiting its successor or the terminal signal
        self._pending = None  # (state key, move, step counter)

    def _emit(self, message: dict) -> None:
        self.stdout.write(json.dumps(message) + "\n")
        self.stdout.flush()

    def run(self) -> int:
        line = self.stdin.readline()
        if not line:
            return 1
        handshake = json.loads(line)
        if handshake.get("protocol") != PROTOCOL:
            self._emit({"id": None, "message": f"unknown protocol {handshake.get('protocol')!r}"})
            return 1
        self.role = handshake.get("role")
        cfg = self.config
        self.table = QTable.load_or_create(
            cfg.table_path, self.role, cfg.alpha, cfg.gamma
        )
        self._emit({"protocol": PROTOCOL, "role": self.role})
        for line in self.stdin:
            if not line.strip():
                continue
            self._handle(line)
        self._finish_episode(terminal=False)
        if cfg.learn and (cfg.save_path or cfg.table_path):
            self.table.save(cfg.save_path or cfg.table_path)
        return 0

    def _handle(self, line: str) -> None:
        try:
            request = json.loads(line)
        except json.JSONDecodeError:
            self._emit({"id": None, "message": "unparseable request"})
            return
        request_id = request.get("id")
        try:
            state = request["state"]
            legal = request["legal"]
            if request.get("type") != "decide" or not legal:
                raise KeyError("type")
        except (KeyError, TypeError):
            self._emit({"id": request_id, "message": "malformed decide request"})
            return
        host_choice = request.get("host_choice") if self.role == "agent" else None
        key = state_key(state, host_choice)
        step = state.get("step", 0)

        if self.config.learn:
            self._learn_step(key, legal, step)

        move = self._choose(key, legal)
        if self.config.learn:
            self._pending = (key, move, step)
        self._emit({"id": request_id, "move": move})

    def _choose(self, key: str, legal):
        if self.config.learn and self.rng.random() < self.config.epsilon:
            return legal[self.rng.randrange(len(legal))]
        if key not in self.table.entries:
            return legal[self.rng.randrange(len(legal))]
        return self.table.greedy(key, legal)

    def _learn_step(self, key: str, legal, step: int) -> None:
        if self._pending is None:
            return
        prev_key, prev_move, prev_step = self._pending
        if step > prev_step:
            # same episode continued: no reward, bootstrap from the new state
            self.table.update(prev_key, prev_move, 0.0, key, legal)
        else:
            # the counter reset: the previous move ended its game
            self._finish_episode(terminal=True)
        if step <= prev_step:
            self._pending = None

    def _finish_episode(self, terminal: bool) -> None:
        if self._pending is None or not self.config.learn:
            self._pending = None
            return
        prev_key, prev_move, _ = self._pending
        if terminal:
            reward = -1.0 if self.role == "agent" else 1.0
            self.table.update(prev_key, prev_move, reward, None, ())
        # a stream that simply ends leaves the final transition unrewarded:
        # it may have been cut off mid-game by the step budget
        self._pending = None
