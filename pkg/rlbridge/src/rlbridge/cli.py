"""Subcommands: serve (policy process), train-agent, train-host."""

from __future__ import annotations

import argparse
import sys

from .serve import PolicyServer, ServeConfig
from .training import TrainingConfig, train_agent, train_host


def _add_training_flags(parser):
    parser.add_argument("--table", required=True, help="Q-table file to train into")
    parser.add_argument("--episodes", type=int, default=5000)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--N", type=int, default=5)
    parser.add_argument("--variant", default="basic-shifted")
    parser.add_argument("--chunk-steps", type=int, default=2000)
    parser.add_argument("--cap", type=int, default=200)
    parser.add_argument("--alpha", type=float, default=0.1)
    parser.add_argument("--gamma", type=float, default=0.95)
    parser.add_argument("--seed", type=int, default=0)


def _training_config(args) -> TrainingConfig:
    return TrainingConfig(
        episodes=args.episodes,
        dim=args.n,
        points_per_state=args.k,
        coordinate_bound=args.N,
        variant=args.variant,
        chunk_steps=args.chunk_steps,
        game_step_cap=args.cap,
        alpha=args.alpha,
        gamma=args.gamma,
        seed=args.seed,
    )


def cmd_serve(args) -> int:
    config = ServeConfig(
        table_path=args.table,
        learn=args.learn,
        epsilon=args.epsilon,
        alpha=args.alpha,
        gamma=args.gamma,
        seed=args.seed,
        save_path=args.save,
    )
    return PolicyServer(config).run()


def cmd_train_agent(args) -> int:
    result = train_agent(
        args.host, args.table, _training_config(args),
        log=lambda line: print(line, file=sys.stderr),
    )
    print(f"trained {result.episodes} episodes into {result.table_path} "
          f"({len(result.table.entries)} states)")
    return 0


def cmd_train_host(args) -> int:
    pool = [a.strip() for a in args.agents.split(",") if a.strip()]
    result = train_host(
        pool, args.table, _training_config(args),
        log=lambda line: print(line, file=sys.stderr),
    )
    print(f"trained {result.episodes} episodes into {result.table_path} "
          f"({len(result.table.entries)} states)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlbridge",
        description="Tabular Q-learning policies for the Hironaka game engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="answer decide requests on stdin/stdout")
    p.add_argument("--table", default=None, help="Q-table file (created if learning)")
    p.add_argument("--learn", action="store_true")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--gamma", type=float, default=0.95)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--save", default=None, help="save path (defaults to --table)")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("train-agent", help="learn an agent vs a fixed engine host")
    p.add_argument("--host", required=True, help="engine host policy name")
    _add_training_flags(p)
    p.set_defaults(fn=cmd_train_agent)

    p = sub.add_parser("train-host", help="learn a host vs a pool of fixed agents")
    p.add_argument("--agents", required=True, help="comma-separated agent pool")
    _add_training_flags(p)
    p.set_defaults(fn=cmd_train_host)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
