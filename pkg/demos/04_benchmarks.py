"""Games-per-step benchmarking of host/agent pairs.

A sequence of m steps is played with an immediate restart on termination;
the score is completed-games / steps. Strong hosts resolve quickly (high
score); strong adversarial agents stretch games out (low score).
"""

from hironaka import EvalConfig, benchmark_matrix, convergence_scan, variant
from hironaka.evaluation import successive_differences

config = EvalConfig(
    rules=variant("basic-shifted"),
    dim=3, points_per_state=3, coordinate_bound=10,
    steps=500, repetitions=5, seed=42,
)

print("host x agent benchmark (rho = completed games per step):")
reports = benchmark_matrix(
    ["choose-all", "zeillinger", "random-hitting"],
    ["random", "choose-first", "choose-last"],
    config,
)
print(f"{'host':15s} {'agent':13s} {'rho':>7s} {'stderr':>7s} {'games':>6s} {'capped':>6s}")
for r in reports:
    print(f"{r.host:15s} {r.agent:13s} {r.rho:7.3f} {r.stderr:7.3f} "
          f"{r.games:6d} {r.capped:6d}")

print()
print("convergence tendency of rho as the step budget grows:")
scan = convergence_scan("zeillinger", "random", config, (125, 250, 500, 1000))
for m, rho, stderr in scan:
    print(f"  m={m:5d}  rho={rho:.4f} +- {stderr:.4f}")
print("  successive differences:", [f"{d:.4f}" for d in successive_differences(scan)])
