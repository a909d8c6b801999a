import random

import pytest

from hironaka.engine import (
    TerminalStateError,
    apply_move,
    initial_state,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
)
from hironaka.policies import (
    ChooseAllHost,
    ChooseFirstAgent,
    LookaheadAgent,
    RandomHittingHost,
)
from hironaka.rules import BASIC, BASIC_SHIFTED
from hironaka.search import (
    MctsConfig,
    MinimaxSolver,
    build_policy_tree,
    mcts_decide,
    minimax_solve,
)

from .conftest import random_state
from .oracles import brute_minimax

A2 = [(2, 0, 0), (0, 2, 0), (0, 0, 3)]
D4 = [(2, 0, 0), (0, 2, 1), (0, 0, 3)]
E8 = [(2, 0, 0), (0, 3, 0), (0, 0, 5)]


class TestPolicyTree:
    def test_a2_choose_all_root(self, rng):
        tree = build_policy_tree(
            initial_state(A2, BASIC_SHIFTED), ChooseAllHost(), BASIC_SHIFTED, 8, rng
        )
        root = tree.root
        assert root.host_move == (0, 1, 2)
        assert [label for label, _ in root.children] == [0, 1, 2]
        by_label = dict(root.children)
        assert tree.nodes[by_label[0]].terminal
        assert tree.nodes[by_label[1]].terminal
        child2 = tree.nodes[by_label[2]]
        assert set(child2.state.config.points) == {(2, 0, 0), (0, 2, 0), (0, 0, 1)}
        assert not child2.terminal
        assert child2.smooth  # third point sums to 1

    def test_terminal_root_single_node(self, rng):
        tree = build_policy_tree(
            initial_state([(1, 1)], BASIC), ChooseAllHost(), BASIC, 5, rng
        )
        assert len(tree.nodes) == 1
        assert tree.root.terminal

    def test_d4_first_move(self, rng):
        tree = build_policy_tree(
            initial_state(D4, BASIC_SHIFTED), RandomHittingHost(), BASIC_SHIFTED, 1, rng
        )
        assert tree.root.host_move == (0, 2)
        assert len(tree.root.children) == 2

    def test_loop_marking(self, rng):
        # {(1,0,0),(0,0,1)} maps to itself under I={0,1,2}, i=1
        state = initial_state([(1, 0, 0), (0, 0, 1)], BASIC_SHIFTED)
        tree = build_policy_tree(state, ChooseAllHost(), BASIC_SHIFTED, 6, rng)
        loops = [n for n in tree.nodes if n.loop]
        assert loops
        assert all(not n.children for n in loops)

    def test_depth_cap_marking(self, rng):
        state = initial_state([(1, 0, 0), (0, 0, 1)], BASIC_SHIFTED)
        tree = build_policy_tree(state, RandomHittingHost(), BASIC_SHIFTED, 1, rng)
        assert any(n.depth_capped for n in tree.nodes) or all(
            n.terminal or n.loop for n in tree.leaves()
        )

    def test_terminal_nodes_are_leaves(self, rng):
        for _ in range(20):
            state = random_state(rng, BASIC_SHIFTED)
            tree = build_policy_tree(state, RandomHittingHost(), BASIC_SHIFTED, 6, rng)
            for node in tree.nodes:
                if node.terminal:
                    assert not node.children
                if node.children:
                    expected = legal_agent_moves(node.state, node.host_move, BASIC_SHIFTED)
                    assert [label for label, _ in node.children] == expected

    def test_reproducible_for_deterministic_host(self):
        state = initial_state(D4, BASIC_SHIFTED)

        def snapshot():
            tree = build_policy_tree(
                state, ChooseAllHost(), BASIC_SHIFTED, 6, random.Random(3)
            )
            return [
                (n.node_id, n.state, n.host_move, n.terminal, n.loop, tuple(n.children))
                for n in tree.nodes
            ]

        assert snapshot() == snapshot()


class TestMinimax:
    def test_terminal_value_zero(self):
        result = minimax_solve(initial_state([(1, 1)], BASIC), BASIC, 5)
        assert result.value == 0
        assert result.principal == {}

    def test_two_point_plane(self):
        result = minimax_solve(initial_state([(1, 0), (0, 1)], BASIC), BASIC, 5)
        assert result.value == 1

    def test_a2_value(self):
        # frozen from the unmemoized brute-force oracle at cap 8
        result = minimax_solve(initial_state(A2, BASIC_SHIFTED), BASIC_SHIFTED, 8)
        assert result.value == 3

    def test_d4_value(self):
        result = minimax_solve(initial_state(D4, BASIC_SHIFTED), BASIC_SHIFTED, 8)
        assert result.value == 4

    def test_unbounded_at_tiny_cap(self):
        result = minimax_solve(initial_state(A2, BASIC_SHIFTED), BASIC_SHIFTED, 1)
        assert result.value is None

    def test_matches_brute_force(self, rng):
        for trial in range(60):
            rules = BASIC if trial % 2 == 0 else BASIC_SHIFTED
            state = random_state(rng, rules, n=rng.randint(2, 3), max_points=4,
                                 coord_bound=4, min_points=1)
            expected = brute_minimax(state, rules, 6)
            assert MinimaxSolver(rules, 6).value(state) == expected

    def test_principal_strategy_realizes_value(self, rng):
        for _ in range(15):
            state = random_state(rng, BASIC_SHIFTED, max_points=4, coord_bound=5)
            result = minimax_solve(state, BASIC_SHIFTED, 8)
            if result.value is None:
                continue

            class PrincipalHost:
                name = "principal"

                def decide(self, s, rules, _rng):
                    return result.principal[s.key()]

            tree = build_policy_tree(
                state, PrincipalHost(), BASIC_SHIFTED, result.value, rng
            )
            leaves = tree.leaves()
            assert all(n.terminal for n in leaves)
            assert max(n.depth for n in leaves) == result.value

    def test_value_reusable_across_budgets(self):
        solver = MinimaxSolver(BASIC_SHIFTED, 8)
        state = initial_state(A2, BASIC_SHIFTED)
        assert solver.value(state, 8) == 3
        assert solver.value(state, 1) is None
        assert solver.value(state, 3) == 3


class TestMcts:
    def test_terminal_raises(self):
        with pytest.raises(TerminalStateError):
            mcts_decide(
                initial_state([(1, 1)], BASIC), "host", ChooseFirstAgent(), BASIC,
                MctsConfig(seed=0),
            )

    def test_single_legal_move(self):
        state = initial_state([(1, 0), (0, 1)], BASIC)
        move = mcts_decide(state, "host", ChooseFirstAgent(), BASIC, MctsConfig(seed=0))
        assert move == (0, 1)

    def test_a2_agent_continues(self):
        state = initial_state(A2, BASIC_SHIFTED)
        for seed in range(5):
            reply = mcts_decide(
                state, "agent", ChooseAllHost(), BASIC_SHIFTED, MctsConfig(seed=seed)
            )
            assert reply == 2

    def test_immediately_winning_move_preferred(self):
        # I={0,1} terminates against every reply; {0,2} and {1,2} do not
        state = initial_state([(1, 0, 9), (0, 1, 9)], BASIC_SHIFTED)
        for I in legal_host_moves(state, BASIC_SHIFTED):
            all_terminal = all(
                is_terminal(apply_move(state, I, i, BASIC_SHIFTED), BASIC_SHIFTED)
                for i in legal_agent_moves(state, I, BASIC_SHIFTED)
            )
            assert all_terminal == (I == (0, 1))
        hits = sum(
            mcts_decide(
                state, "host", ChooseFirstAgent(), BASIC_SHIFTED, MctsConfig(seed=s)
            ) == (0, 1)
            for s in range(100)
        )
        assert hits >= 95

    def test_matches_solver_on_solved_positions(self, rng):
        solver = MinimaxSolver(BASIC_SHIFTED, 6)
        agreements = 0
        positions = []
        while len(positions) < 20:
            state = random_state(rng, BASIC_SHIFTED, max_points=3, coord_bound=4)
            value = solver.value(state)
            if value is None or value > 4 or value < 2:
                continue
            positions.append((state, value))
        for idx, (state, value) in enumerate(positions):
            move = mcts_decide(
                state, "host", LookaheadAgent(4), BASIC_SHIFTED,
                MctsConfig(simulations=2000, seed=idx),
            )
            # optimal move: worst-case reply value matches the solver value
            worst = max(
                solver.value(apply_move(state, move, i, BASIC_SHIFTED)) is None
                and 10**9
                or solver.value(apply_move(state, move, i, BASIC_SHIFTED))
                for i in legal_agent_moves(state, move, BASIC_SHIFTED)
            )
            if 1 + worst == value:
                agreements += 1
        assert agreements >= 18  # >= 90 percent

    def test_deterministic_per_seed(self):
        state = initial_state(D4, BASIC_SHIFTED)
        moves = {
            mcts_decide(state, "host", ChooseFirstAgent(), BASIC_SHIFTED,
                        MctsConfig(seed=11))
            for _ in range(3)
        }
        assert len(moves) == 1


class TestE8:
    def test_solver_certifies_nine_steps(self):
        result = minimax_solve(initial_state(E8, BASIC_SHIFTED), BASIC_SHIFTED, 12)
        assert result.value is not None and result.value <= 9
