"""Tabular Q-learning policies speaking the hironaka-policy/1 protocol."""

from .qtable import QTable, move_key, state_key
from .serve import PolicyServer, ServeConfig
from .training import TrainingConfig, TrainingResult, train_agent, train_host

__version__ = "0.1.0"
