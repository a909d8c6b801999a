"""Tabular action values with a versioned on-disk format.

Keys canonicalize the wire state documents the engine sends: the point list
(already sorted by the engine), the weight vector, and, for the agent role,
the host's chosen subset. The step counter is excluded so transpositions
share one entry.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Optional

FORMAT = "rlbridge-qtable/1"


def state_key(state_doc: dict, host_choice: Optional[list] = None) -> str:
    parts = {
        "points": state_doc["points"],
        "weights": state_doc.get("weights"),
    }
    if host_choice is not None:
        parts["host_choice"] = list(host_choice)
    return json.dumps(parts, sort_keys=True, separators=(",", ":"))


def move_key(move) -> str:
    if isinstance(move, list):
        return ",".join(str(j) for j in move)
    return str(move)


@dataclass
class QTable:
    role: str
    alpha: float = 0.1
    gamma: float = 0.95
    entries: dict = field(default_factory=dict)  # state key -> {move key: value}

    def __post_init__(self):
        if self.role not in ("host", "agent"):
            raise ValueError(f"role must be host or agent, got {self.role!r}")
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie strictly between 0 and 1")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")

    def value(self, key: str, move) -> float:
        return self.entries.get(key, {}).get(move_key(move), 0.0)

    def best_value(self, key: str, legal) -> float:
        values = self.entries.get(key)
        if not values:
            return 0.0
        return max(values.get(move_key(m), 0.0) for m in legal)

    def greedy(self, key: str, legal):
        """Highest-valued legal move; first in the legality order on ties."""
        return max(legal, key=lambda m: (self.value(key, m),))

    def update(self, key: str, move, reward: float, next_key: Optional[str],
               next_legal) -> None:
        """One Q-learning step; next_key None means the action ended the game."""
        bootstrap = 0.0 if next_key is None else self.best_value(next_key, next_legal)
        target = reward + self.gamma * bootstrap
        bucket = self.entries.setdefault(key, {})
        mk = move_key(move)
        old = bucket.get(mk, 0.0)
        bucket[mk] = old + self.alpha * (target - old)

    def save(self, path: str) -> None:
        doc = {
            "format": FORMAT,
            "role": self.role,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "entries": self.entries,
        }
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str) -> "QTable":
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("format") != FORMAT:
            raise ValueError(f"unsupported table format: {doc.get('format')!r}")
        return cls(
            role=doc["role"],
            alpha=doc["alpha"],
            gamma=doc["gamma"],
            entries=doc["entries"],
        )

    @classmethod
    def load_or_create(cls, path: str, role: str, alpha: float, gamma: float) -> "QTable":
        if path and os.path.exists(path):
            table = cls.load(path)
            if table.role != role:
                raise ValueError(
                    f"table at {path} was trained for role {table.role!r}, not {role!r}"
                )
            return table
        return cls(role=role, alpha=alpha, gamma=gamma)
