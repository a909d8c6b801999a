"""Subcommands: play (interactive), tree (DOT export), solve, eval (CSV)."""

from __future__ import annotations

import argparse
import random
import sys

from ..engine import (
    apply_move,
    is_terminal,
    legal_agent_moves,
    legal_host_moves,
)
from ..evaluation import EvalConfig, benchmark_matrix
from ..policies import make_agent, make_host
from ..rules import variant
from ..search import build_policy_tree
from ..util import derive_seed
from .dot import tree_to_document, tree_to_dot
from .statefile import StateDocumentError, load_state_file
from .wire import ExternalPolicy

CSV_HEADER = "host,agent,n,k,N,m,reps,rho,stderr,games,capped"


def _policy_from_spec(spec: str, role: str, rules, seed: int, opponent=None):
    if spec.startswith("external:"):
        return ExternalPolicy(spec[len("external:"):], role, rules)
    if role == "host":
        return make_host(spec, rules, seed=seed, opponent=opponent)
    return make_agent(spec, rules, seed=seed, opponent=opponent)


def _load(path: str):
    try:
        return load_state_file(path)
    except FileNotFoundError:
        raise SystemExit(f"error: no such state file: {path}")
    except StateDocumentError as exc:
        raise SystemExit(f"error: bad state file {path}: {exc}")


def _print_state(state, rules) -> None:
    for p in state.config.points:
        print("  (" + ", ".join(str(c) for c in p) + ")")
    if state.weights is not None:
        print("  weights:", state.weights)


def _read_host_move(legal):
    moves = {",".join(str(j) for j in I): I for I in legal}
    while True:
        raw = input("your subset I (e.g. 0,2) or q> ").strip()
        if raw in ("q", "quit"):
            return None
        key = ",".join(p.strip() for p in raw.split(",") if p.strip())
        if key in moves:
            return moves[key]
        print(f"illegal; legal: {' '.join(sorted(moves))}")


def _read_agent_move(legal):
    while True:
        raw = input(f"your coordinate i in {list(legal)} or q> ").strip()
        if raw in ("q", "quit"):
            return None
        if raw.lstrip("-").isdigit() and int(raw) in legal:
            return int(raw)
        print(f"illegal; legal: {list(legal)}")


def cmd_play(args) -> int:
    state, rules = _load(args.state)
    seed = args.seed
    rng = random.Random(derive_seed(seed, "play"))
    opponent_role = "agent" if args.role == "host" else "host"
    try:
        opponent = _policy_from_spec(args.opponent, opponent_role, rules, seed)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    print(f"variant: {rules.variant_id}; you play {args.role}; opponent: {opponent.name}")
    while True:
        if is_terminal(state, rules):
            print(f"terminal state reached after {state.step} steps")
            _print_state(state, rules)
            return 0
        print(f"step {state.step}:")
        _print_state(state, rules)
        if args.role == "host":
            legal = legal_host_moves(state, rules)
            print("legal subsets:", " ".join(",".join(map(str, I)) for I in legal))
            move = _read_host_move(legal)
            if move is None:
                print(f"quit after {state.step} steps")
                return 0
            reply = opponent.decide(state, move, rules, rng)
            print(f"agent replies i = {reply}")
        else:
            move = opponent.decide(state, rules, rng)
            print(f"host chooses I = {{{', '.join(str(j) for j in move)}}}")
            reply = _read_agent_move(legal_agent_moves(state, move, rules))
            if reply is None:
                print(f"quit after {state.step} steps")
                return 0
        state = apply_move(state, move, reply, rules)


def cmd_tree(args) -> int:
    state, rules = _load(args.state)
    seed = args.seed
    try:
        host = _policy_from_spec(args.host, "host", rules, seed)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    rng = random.Random(derive_seed(seed, "tree"))
    tree = build_policy_tree(state, host, rules, args.depth_cap, rng)
    dot_path = args.out + ".dot"
    doc_path = args.out + ".json"
    with open(dot_path, "w", encoding="utf-8") as fh:
        fh.write(tree_to_dot(tree))
    with open(doc_path, "w", encoding="utf-8") as fh:
        fh.write(tree_to_document(tree))
    leaves = tree.leaves()
    print(f"wrote {dot_path} and {doc_path}")
    print(
        f"nodes: {len(tree.nodes)}, leaves: {len(leaves)}, "
        f"max depth: {max(n.depth for n in leaves)}, "
        f"all leaves terminal: {all(n.terminal for n in leaves)}"
    )
    return 0


def cmd_solve(args) -> int:
    from ..search import minimax_solve

    state, rules = _load(args.state)
    if args.variant is not None:
        rules = variant(args.variant)
    result = minimax_solve(state, rules, args.depth_cap)
    if result.value is None:
        print(f"value: unbounded (no strategy within {args.depth_cap} steps)")
    else:
        print(f"value: {result.value}")
    print(f"explored states: {result.explored}")
    if args.dump_strategy and result.value is not None:
        print("principal strategy (points | weights -> I):")
        for (points, weights), move in sorted(
            result.principal.items(), key=lambda kv: repr(kv[0])
        ):
            pts = " ".join("(" + ",".join(str(c) for c in p) + ")" for p in points)
            w = "" if weights is None else f" | w={weights}"
            print(f"  {pts}{w} -> {{{','.join(str(j) for j in move)}}}")
    return 0


def _format_report(report) -> str:
    cfg = report.config
    return (
        f"{report.host},{report.agent},{cfg.dim},{cfg.points_per_state},"
        f"{cfg.coordinate_bound},{cfg.steps},{cfg.repetitions},"
        f"{report.rho:.6f},{report.stderr:.6f},{report.games},{report.capped}"
    )


def cmd_eval(args) -> int:
    rules = variant(args.variant)
    config = EvalConfig(
        rules=rules,
        dim=args.n,
        points_per_state=args.k,
        coordinate_bound=args.N,
        steps=args.m,
        repetitions=args.reps,
        game_step_cap=args.cap,
        seed=args.seed,
    )
    hosts = [h.strip() for h in args.hosts.split(",") if h.strip()]
    agents = [a.strip() for a in args.agents.split(",") if a.strip()]

    def host_factory(spec, rules, seed=0, opponent=None):
        return _policy_from_spec(spec, "host", rules, seed, opponent)

    def agent_factory(spec, rules, seed=0, opponent=None):
        return _policy_from_spec(spec, "agent", rules, seed, opponent)

    try:
        reports = benchmark_matrix(
            hosts, agents, config, make_host_fn=host_factory, make_agent_fn=agent_factory
        )
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    lines = [CSV_HEADER] + [_format_report(r) for r in reports]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hironaka",
        description="Play, analyse and benchmark the Hironaka game family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("play", help="interactive game against a named policy")
    p.add_argument("--state", required=True, help="JSON state file")
    p.add_argument("--role", choices=("host", "agent"), required=True)
    p.add_argument("--opponent", required=True, help="opponent policy name")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("tree", help="export the full policy tree (DOT + JSON)")
    p.add_argument("--state", required=True)
    p.add_argument("--host", required=True, help="host policy name")
    p.add_argument("--depth-cap", type=int, default=12)
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_tree)

    p = sub.add_parser("solve", help="exact minimax value and principal strategy")
    p.add_argument("--state", required=True)
    p.add_argument("--variant", default=None, help="override the file's variant")
    p.add_argument("--depth-cap", type=int, default=12)
    p.add_argument("--dump-strategy", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("eval", help="rho benchmark matrix as CSV")
    p.add_argument("--hosts", required=True, help="comma-separated host names")
    p.add_argument("--agents", required=True, help="comma-separated agent names")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--N", type=int, default=10)
    p.add_argument("--m", type=int, default=1000)
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--cap", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", default="basic-shifted")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_eval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except KeyboardInterrupt:
        return 130
    except (EOFError,):
        print()
        return 0


if __name__ == "__main__":
    sys.exit(main())
