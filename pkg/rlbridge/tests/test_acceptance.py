"""Secondary acceptance: the trained adversarial agent outlasts random play.

The whole exchange runs over the engine CLI and the wire protocol; nothing
here touches engine internals. Mean game length under continuous restart
play is steps-per-completed-game, the reciprocal of the eval CSV's rho.
"""

import csv
import subprocess
import sys
import tempfile

from rlbridge.training import TrainingConfig, train_agent

ENGINE = (sys.executable, "-m", "hironaka.cli.main")


def eval_rho(agent_spec: str, seed: int) -> float:
    with tempfile.NamedTemporaryFile(mode="r", suffix=".csv") as tmp:
        subprocess.run(
            [*ENGINE, "eval", "--hosts", "zeillinger", "--agents", agent_spec,
             "--n", "3", "--k", "3", "--N", "5", "--m", "2000", "--reps", "5",
             "--seed", str(seed), "--out", tmp.name],
            check=True, capture_output=True, text=True,
        )
        row = next(csv.DictReader(open(tmp.name)))
        assert int(row["capped"]) == 0
        return float(row["rho"])


def test_trained_agent_outlasts_random(tmp_path):
    table = str(tmp_path / "agent.json")
    config = TrainingConfig(
        episodes=5000, dim=3, points_per_state=3, coordinate_bound=5,
        chunk_steps=2000, seed=31,
    )
    result = train_agent("zeillinger", table, config)
    assert result.episodes >= 5000

    trained_spec = f"external:{sys.executable} -m rlbridge serve --table {table} --seed 5"
    rho_trained = eval_rho(trained_spec, seed=404)
    rho_random = eval_rho("random", seed=404)
    mean_trained = 1.0 / rho_trained
    mean_random = 1.0 / rho_random
    print(
        f"[ACCEPTANCE] trained agent mean game length {mean_trained:.2f} "
        f"> random agent {mean_random:.2f} vs the same host: "
        f"{'PASS' if mean_trained > mean_random else 'FAIL'}",
        file=sys.stderr,
    )
    assert mean_trained > mean_random
