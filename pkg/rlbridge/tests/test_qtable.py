import math
import random

import pytest

from rlbridge.qtable import FORMAT, QTable, move_key, state_key


def test_state_key_ignores_step_and_orders_fields():
    a = state_key({"points": [[1, 2]], "step": 0})
    b = state_key({"points": [[1, 2]], "step": 7})
    assert a == b
    with_choice = state_key({"points": [[1, 2]]}, host_choice=[0, 1])
    assert with_choice != a


def test_move_keys():
    assert move_key(2) == "2"
    assert move_key([0, 2]) == "0,2"


def test_update_terminal_and_bootstrap():
    table = QTable(role="agent", alpha=0.5, gamma=0.5)
    table.update("B", 1, -1.0, None, ())
    assert table.value("B", 1) == -0.5
    table.update("A", 0, 0.0, "B", [0, 1])
    # best value at B over [0, 1] is 0 (move 0 unseen), so the target is 0
    assert table.value("A", 0) == 0.0
    table.update("B", 0, -1.0, None, ())
    table.update("A", 0, 0.0, "B", [0, 1])
    # now both B-moves are negative; bootstrapping pulls A down
    assert table.value("A", 0) < 0


def test_greedy_prefers_higher_value_and_first_on_ties():
    table = QTable(role="agent")
    table.entries["S"] = {"0": -0.5, "2": -0.1}
    assert table.greedy("S", [0, 1, 2]) == 1  # unseen move defaults to 0.0
    table.entries["S"]["1"] = -0.1
    assert table.greedy("S", [0, 1]) == 1
    assert table.greedy("S", [1, 2]) == 1  # tie between 1 and 2: first wins


def test_values_stay_bounded(tmp_path):
    rng = random.Random(1)
    table = QTable(role="agent", alpha=0.2, gamma=0.9)
    bound = 1.0 / (1.0 - table.gamma)
    keys = [f"k{j}" for j in range(8)]
    for _ in range(5000):
        key, nxt = rng.choice(keys), rng.choice(keys)
        terminal = rng.random() < 0.3
        table.update(
            key, rng.randrange(3), -1.0 if terminal else 0.0,
            None if terminal else nxt, [0, 1, 2],
        )
    for bucket in table.entries.values():
        for value in bucket.values():
            assert math.isfinite(value) and abs(value) <= bound


def test_round_trip(tmp_path):
    table = QTable(role="host", alpha=0.3, gamma=0.8)
    table.update("S", [0, 2], 1.0, None, ())
    path = str(tmp_path / "t.json")
    table.save(path)
    loaded = QTable.load(path)
    assert loaded == table
    assert loaded.value("S", [0, 2]) == table.value("S", [0, 2])


def test_load_rejects_other_formats(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "other/9", "role": "agent"}')
    with pytest.raises(ValueError):
        QTable.load(str(path))


def test_role_mismatch_rejected(tmp_path):
    path = str(tmp_path / "t.json")
    QTable(role="agent").save(path)
    with pytest.raises(ValueError):
        QTable.load_or_create(path, "host", 0.1, 0.9)


def test_parameter_validation():
    with pytest.raises(ValueError):
        QTable(role="agent", gamma=1.0)
    with pytest.raises(ValueError):
        QTable(role="referee")
