import random

import pytest

from hironaka.engine import (
    TerminalStateError,
    apply_move,
    initial_state,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
    play_episode,
)
from hironaka.geometry import NoHittingSet
from hironaka.policies import (
    ChooseAllHost,
    ChooseFirstAgent,
    ChooseLastAgent,
    LookaheadAgent,
    MctsHost,
    OptimalHost,
    RandomAgent,
    RandomHittingHost,
    SpivakovskyHost,
    ZeillingerHost,
    make_agent,
    make_host,
)
from hironaka.rules import BASIC, BASIC_SHIFTED, POLYHEDRA, THOM

from .conftest import random_state

A2 = [(2, 0, 0), (0, 2, 0), (0, 0, 3)]
D4 = [(2, 0, 0), (0, 2, 1), (0, 0, 3)]


class TestChooseAll:
    def test_full_set(self, rng):
        state = initial_state(A2, BASIC)
        assert ChooseAllHost().decide(state, BASIC, rng) == (0, 1, 2)
        n2 = initial_state([(1, 0), (0, 1)], BASIC)
        assert ChooseAllHost().decide(n2, BASIC, rng) == (0, 1)

    def test_polyhedra_full_set_legal(self, rng):
        state = initial_state([(2, 0), (0, 3)], POLYHEDRA)
        assert ChooseAllHost().decide(state, POLYHEDRA, rng) == (0, 1)

    def test_terminal_raises(self, rng):
        with pytest.raises(TerminalStateError):
            ChooseAllHost().decide(initial_state([(1, 1)], BASIC), BASIC, rng)


class TestZeillinger:
    # pair choices under the adopted closest-pair characteristic vector
    def test_a2(self, rng):
        state = initial_state(A2, BASIC_SHIFTED)
        assert ZeillingerHost().decide(state, BASIC_SHIFTED, rng) == (0, 1)

    def test_d4(self, rng):
        state = initial_state(D4, BASIC_SHIFTED)
        assert ZeillingerHost().decide(state, BASIC_SHIFTED, rng) == (1, 2)

    def test_n2_forced(self, rng):
        state = initial_state([(1, 0), (0, 5)], BASIC_SHIFTED)
        assert ZeillingerHost().decide(state, BASIC_SHIFTED, rng) == (0, 1)

    def test_always_a_pair(self, rng):
        z = ZeillingerHost()
        for _ in range(300):
            state = random_state(rng, BASIC_SHIFTED)
            assert len(z.decide(state, BASIC_SHIFTED, rng)) == 2

    def test_terminates_against_every_agent(self, rng):
        # the closest-pair distance argument in the docstring, checked empirically
        z = ZeillingerHost()
        agents = [ChooseFirstAgent(), ChooseLastAgent(), RandomAgent(), LookaheadAgent(2)]
        for idx in range(40):
            state = random_state(rng, BASIC_SHIFTED)
            for agent in agents:
                steps = play_episode(
                    state, z, agent, BASIC_SHIFTED,
                    random.Random(idx), random.Random(1000 + idx), 200,
                )
                assert steps and steps[-1].terminal


class TestSpivakovsky:
    def test_union_of_supports(self, rng):
        assert SpivakovskyHost().decide(
            initial_state(A2, BASIC), BASIC, rng
        ) == (0, 1, 2)
        assert SpivakovskyHost().decide(
            initial_state(D4, BASIC), BASIC, rng
        ) == (0, 1, 2)
        assert SpivakovskyHost().decide(
            initial_state([(1, 0), (0, 1)], BASIC), BASIC, rng
        ) == (0, 1)

    def test_padding_to_pair(self, rng):
        state = initial_state([(1, 0), (2, 0)], BASIC)
        move = SpivakovskyHost().decide(state, BASIC, rng)
        assert move == (0, 1)

    def test_no_hitting_set(self, rng):
        state = initial_state([(0, 0), (1, 2)], BASIC)
        with pytest.raises(NoHittingSet):
            SpivakovskyHost().decide(state, BASIC, rng)


class TestRandomHitting:
    def test_d4_deterministic_choice(self):
        state = initial_state(D4, BASIC_SHIFTED)
        host = RandomHittingHost()
        moves = {host.decide(state, BASIC_SHIFTED, random.Random(s)) for s in range(40)}
        assert moves == {(0, 2)}  # unique minimal hitting set

    def test_a2_full_set(self):
        state = initial_state(A2, BASIC_SHIFTED)
        host = RandomHittingHost()
        moves = {host.decide(state, BASIC_SHIFTED, random.Random(s)) for s in range(20)}
        assert moves == {(0, 1, 2)}

    def test_size_one_padded(self):
        state = initial_state([(1, 1, 1), (2, 3, 4)], BASIC)
        host = RandomHittingHost()
        moves = {host.decide(state, BASIC, random.Random(s)) for s in range(60)}
        assert all(len(I) == 2 for I in moves)
        assert len(moves) > 1  # the random pad actually varies

    def test_uniform_over_minimal_sets(self):
        # {(1,1)} has minimal hitting sets {0} and {1}; padding keeps both
        state = initial_state([(1, 1), (3, 3)], BASIC)
        host = RandomHittingHost()
        seen = {host.decide(state, BASIC, random.Random(s)) for s in range(60)}
        assert seen == {(0, 1)}


class TestAgents:
    def test_choose_first_and_last(self, rng):
        state = initial_state(A2, BASIC)
        assert ChooseFirstAgent().decide(state, (0, 2), BASIC, rng) == 0
        assert ChooseLastAgent().decide(state, (0, 2), BASIC, rng) == 2

    def test_random_respects_thom_legality(self):
        state = initial_state(
            [(2, 0, 0), (0, 2, 0), (0, 0, 3)], THOM, weights=(9, 1, 1)
        )
        agent = RandomAgent()
        seen = {agent.decide(state, (1, 2), THOM, random.Random(s)) for s in range(50)}
        assert seen == {1, 2}
        seen_constrained = {
            agent.decide(state, (0, 1), THOM, random.Random(s)) for s in range(50)
        }
        assert seen_constrained == {1}

    def test_choose_first_respects_thom_legality(self, rng):
        state = initial_state(
            [(2, 0, 0), (0, 2, 0), (0, 0, 3)], THOM, weights=(9, 1, 1)
        )
        assert ChooseFirstAgent().decide(state, (0, 1), THOM, rng) == 1

    def test_lookahead_a2(self, rng):
        state = initial_state(A2, BASIC_SHIFTED)
        assert LookaheadAgent(2).decide(state, (0, 1, 2), BASIC_SHIFTED, rng) == 2

    def test_lookahead_all_terminal_ties_low(self, rng):
        state = initial_state([(1, 0), (0, 1)], BASIC)
        assert LookaheadAgent(3).decide(state, (0, 1), BASIC, rng) == 0

    def test_lookahead_depth_one_avoids_termination(self, rng):
        state = initial_state(A2, BASIC_SHIFTED)
        assert LookaheadAgent(1).decide(state, (0, 1, 2), BASIC_SHIFTED, rng) == 2


class TestLegalityEverywhere:
    @pytest.mark.parametrize("rules", [BASIC, BASIC_SHIFTED, THOM])
    def test_playouts_stay_legal(self, rules, rng):
        hosts = [ChooseAllHost(), ZeillingerHost(), SpivakovskyHost(), RandomHittingHost()]
        agents = [ChooseFirstAgent(), ChooseLastAgent(), RandomAgent()]
        for trial in range(400):
            state = random_state(rng, rules)
            host = hosts[trial % len(hosts)]
            agent = agents[trial % len(agents)]
            for _ in range(20):
                if is_terminal(state, rules):
                    break
                try:
                    I = host.decide(state, rules, rng)
                except NoHittingSet:
                    break  # legitimate refusal on zero-vertex states
                assert I in legal_host_moves(state, rules)
                i = agent.decide(state, I, rules, rng)
                assert i in legal_agent_moves(state, I, rules)
                state = apply_move(state, I, i, rules)


class TestDeterminism:
    def test_random_pair_transcripts_reproducible(self, rng):
        for idx in range(20):
            state = random_state(rng, BASIC_SHIFTED)
            runs = []
            for _ in range(2):
                steps = play_episode(
                    state,
                    RandomHittingHost(),
                    RandomAgent(),
                    BASIC_SHIFTED,
                    random.Random(idx),
                    random.Random(idx + 999),
                    100,
                )
                runs.append([(s.host_move, s.agent_move, s.state_after) for s in steps])
            assert runs[0] == runs[1]


class TestFactories:
    def test_known_names(self):
        for name in ("choose-all", "zeillinger", "spivakovsky", "random-hitting",
                     "mcts:20", "optimal:6"):
            assert make_host(name, BASIC_SHIFTED).name
        for name in ("choose-first", "choose-last", "random", "lookahead:2", "mcts:20"):
            assert make_agent(name, BASIC_SHIFTED).name

    def test_unknown_names(self):
        with pytest.raises(ValueError):
            make_host("alphazero", BASIC)
        with pytest.raises(ValueError):
            make_agent("psychic", BASIC)


class TestOptimalHost:
    def test_plays_to_value(self, rng):
        state = initial_state(A2, BASIC_SHIFTED)
        host = OptimalHost(BASIC_SHIFTED, depth_cap=6)
        agent = LookaheadAgent(3)
        steps = play_episode(
            state, host, agent, BASIC_SHIFTED, rng, random.Random(7), 10
        )
        assert steps[-1].terminal

    def test_unbounded_raises(self):
        # no host can terminate this in one step
        state = initial_state(A2, BASIC_SHIFTED)
        with pytest.raises(ValueError):
            OptimalHost(BASIC_SHIFTED, depth_cap=1).decide(state, BASIC_SHIFTED, None)
