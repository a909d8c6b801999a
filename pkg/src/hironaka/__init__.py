"""Hironaka game family: engine, policies, search, and evaluation."""

from .geometry import (
    NoHittingSet,
    PointConfiguration,
    diagonal_shift,
    minimal_hitting_sets,
    newton_vertices,
    remove_dominated,
    shift_to_axes,
    spread_vector,
)
from .rules import VARIANTS, VariantRules, variant
from .engine import (
    EpisodeStep,
    GameState,
    IllegalMoveError,
    TerminalStateError,
    apply_move,
    initial_state,
    is_smooth_marker,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
    play_episode,
)
from .policies import make_agent, make_host
from .search import (
    GameTree,
    MctsConfig,
    SolveResult,
    build_policy_tree,
    mcts_decide,
    minimax_solve,
)
from .evaluation import (
    EvalConfig,
    EvalReport,
    benchmark_matrix,
    convergence_scan,
    rho_estimate,
    sample_initial_state,
)

__version__ = "0.1.0"
